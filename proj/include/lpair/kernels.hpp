#pragma once

// Data-parallel inner loops shared by the Hurwitz evaluator, zero sums and
// pair-correlation kernels. Every kernel has a portable scalar reference and
// an AVX2/FMA variant; the variant is picked once at startup from CPUID and
// can be overridden with LPAIR_SIMD=scalar|avx2 or set_backend().

#include <complex>
#include <span>
#include <string_view>

namespace lpair::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend() noexcept;
bool backend_available(Backend b) noexcept;
// Returns false (and leaves the backend unchanged) if b is not supported here.
bool set_backend(Backend b) noexcept;
std::string_view backend_name(Backend b) noexcept;

// Σ_k w[k]·(cos(t·phase[k]) + i·sin(t·phase[k])).
std::complex<double> expsum(std::span<const double> w, std::span<const double> phase, double t);

// Σ_k w[k]·sinc²(scale·(x0 − x[k])), sinc(0) = 1.
double fejer_row(std::span<const double> x, std::span<const double> w, double x0, double scale);

namespace scalar {
std::complex<double> expsum(std::span<const double> w, std::span<const double> phase, double t);
double fejer_row(std::span<const double> x, std::span<const double> w, double x0, double scale);
}  // namespace scalar

namespace avx2 {
std::complex<double> expsum(std::span<const double> w, std::span<const double> phase, double t);
double fejer_row(std::span<const double> x, std::span<const double> w, double x0, double scale);
}  // namespace avx2

}  // namespace lpair::kernels
