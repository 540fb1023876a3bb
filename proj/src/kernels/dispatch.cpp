#include "lpair/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace lpair::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(LPAIR_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend initial_backend() noexcept {
  const Backend best = cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
  if (const char* env = std::getenv("LPAIR_SIMD")) {
    const std::string v(env);
    if (v == "scalar") return Backend::scalar;
    if (v == "avx2" && cpu_has_avx2()) return Backend::avx2;
  }
  return best;
}

std::atomic<Backend>& current() noexcept {
  static std::atomic<Backend> b{initial_backend()};
  return b;
}

}  // namespace

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

bool backend_available(Backend b) noexcept { return b == Backend::scalar || cpu_has_avx2(); }

bool set_backend(Backend b) noexcept {
  if (!backend_available(b)) return false;
  current().store(b, std::memory_order_relaxed);
  return true;
}

std::string_view backend_name(Backend b) noexcept {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

std::complex<double> expsum(std::span<const double> w, std::span<const double> phase, double t) {
#ifdef LPAIR_HAVE_AVX2
  if (active_backend() == Backend::avx2) return avx2::expsum(w, phase, t);
#endif
  return scalar::expsum(w, phase, t);
}

double fejer_row(std::span<const double> x, std::span<const double> w, double x0, double scale) {
#ifdef LPAIR_HAVE_AVX2
  if (active_backend() == Backend::avx2) return avx2::fejer_row(x, w, x0, scale);
#endif
  return scalar::fejer_row(x, w, x0, scale);
}

}  // namespace lpair::kernels
