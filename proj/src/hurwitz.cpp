#include "lpair/hurwitz.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "lpair/error.hpp"
#include "lpair/kernels.hpp"

namespace lpair {
namespace {

// B_{2k} / (2k)! for k = 1..10.
constexpr std::array<double, 10> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
};

std::size_t leading_terms(cplx s) {
  return static_cast<std::size_t>(std::max(std::ceil(std::abs(s)), 20.0));
}

void check_envelope(cplx s) {
  if (s == cplx(1.0, 0.0)) throw NumericalError("Hurwitz zeta: pole at s = 1");
  if (std::abs(s.imag()) > kMaxHeight)
    throw NumericalError("Hurwitz zeta: |Im s| = " + std::to_string(std::abs(s.imag())) +
                         " beyond accuracy envelope " + std::to_string(kMaxHeight));
}

// Euler–Maclaurin remainder after summing n < N, evaluated at w = N + a.
cplx em_tail(cplx s, double w) {
  const double lw = std::log(w);
  const cplx w_neg_s = std::exp(-s * lw);
  cplx total = w * w_neg_s / (s - 1.0) + 0.5 * w_neg_s;
  cplx poch = s;                 // s(s+1)…(s+2k−2)
  cplx wpow = w_neg_s / w;       // w^{−s−2k+1}
  const double inv_w2 = 1.0 / (w * w);
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    total += kBernoulliOverFactorial[k] * poch * wpow;
    const double m = 2.0 * static_cast<double>(k) + 1.0;
    poch *= (s + m) * (s + m + 1.0);
    wpow *= inv_w2;
  }
  return total;
}

cplx power_sum(cplx s, double a, std::size_t first, std::size_t last) {
  thread_local std::vector<double> w;
  thread_local std::vector<double> ph;
  const std::size_t n = last - first;
  w.resize(n);
  ph.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = static_cast<double>(first + k) + a;
    ph[k] = std::log(x);
    w[k] = std::exp(-s.real() * ph[k]);
  }
  return kernels::expsum(w, ph, -s.imag());
}

cplx hurwitz_impl(cplx s, double a, std::size_t first) {
  check_envelope(s);
  if (!(a > 0.0 && a <= 1.0)) throw ConfigError("Hurwitz zeta: shift a must lie in (0, 1]");
  const std::size_t n = leading_terms(s);
  return power_sum(s, a, first, n) + em_tail(s, static_cast<double>(n) + a);
}

}  // namespace

cplx hurwitz_zeta(cplx s, double a) { return hurwitz_impl(s, a, 0); }

cplx hurwitz_zeta_tail(cplx s, double a) { return hurwitz_impl(s, a, 1); }

cplx log_gamma(cplx z) {
  if (!(z.real() > 0.0)) throw ConfigError("log_gamma: requires Re z > 0");
  cplx shift(0.0, 0.0);
  while (z.real() < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  constexpr std::array<double, 8> c = {1.0 / 12.0,   -1.0 / 360.0,       1.0 / 1260.0, -1.0 / 1680.0,
                                       1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0};
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series(0.0, 0.0);
  cplx p = inv;
  for (const double ck : c) {
    series += ck * p;
    p *= inv2;
  }
  const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (z - 0.5) * std::log(z) - z + half_log_2pi + series - shift;
}

HurwitzHalfLine::HurwitzHalfLine(std::vector<double> shifts, double max_height)
    : shifts_(std::move(shifts)), max_height_(max_height) {
  if (max_height < 0.0 || max_height > kMaxHeight) throw ConfigError("HurwitzHalfLine: height outside envelope");
  for (const double a : shifts_)
    if (!(a > 0.0 && a <= 1.0)) throw ConfigError("HurwitzHalfLine: shift must lie in (0, 1]");
  terms_ = leading_terms(cplx(0.5, max_height));
  logs_.resize(shifts_.size() * terms_);
  weights_.resize(shifts_.size() * terms_);
  for (std::size_t j = 0; j < shifts_.size(); ++j) {
    for (std::size_t n = 0; n < terms_; ++n) {
      const double x = static_cast<double>(n) + shifts_[j];
      logs_[j * terms_ + n] = std::log(x);
      weights_[j * terms_ + n] = 1.0 / std::sqrt(x);
    }
  }
}

cplx HurwitzHalfLine::evaluate_one(double t, std::size_t j) const {
  if (std::abs(t) > max_height_) throw NumericalError("HurwitzHalfLine: height beyond table");
  const cplx s(0.5, t);
  const std::size_t n = leading_terms(s);
  const std::span<const double> w(weights_.data() + j * terms_, n);
  const std::span<const double> ph(logs_.data() + j * terms_, n);
  return kernels::expsum(w, ph, -t) + em_tail(s, static_cast<double>(n) + shifts_[j]);
}

void HurwitzHalfLine::evaluate(double t, std::span<cplx> out) const {
  for (std::size_t j = 0; j < shifts_.size(); ++j) out[j] = evaluate_one(t, j);
}

}  // namespace lpair
