#include "lpair/testfn.hpp"

#include <cmath>
#include <numbers>

#include "lpair/error.hpp"
#include "lpair/quadrature.hpp"

namespace lpair {

double phi_sinc(double x) {
  if (!(x > 0.0)) throw ConfigError("phi_sinc: x must be positive");
  const double l = std::abs(std::log(x));
  return l < 2.0 ? 0.5 - 0.25 * l : 0.0;
}

cplx phi_hat_sinc(cplx s) {
  if (std::abs(s) < 1e-4) {
    const cplx s2 = s * s;
    const cplx r = 1.0 + s2 / 6.0 + s2 * s2 / 120.0;
    return r * r;
  }
  const cplx r = std::sinh(s) / s;
  return r * r;
}

cplx mellin_numeric(const std::function<double(double)>& f, double lo, double hi, cplx s,
                    const std::vector<double>& breakpoints) {
  if (!(lo > 0.0) || !(hi > lo)) return {0.0, 0.0};
  const double a = std::log(lo);
  const double b = std::log(hi);
  std::vector<double> cuts;
  cuts.reserve(breakpoints.size());
  for (const double x : breakpoints)
    if (x > 0.0) cuts.push_back(std::log(x));
  const double panel = s.imag() != 0.0 ? std::numbers::pi / std::abs(s.imag()) : 0.0;
  auto re = [&](double u) { return f(std::exp(u)) * std::exp(s.real() * u) * std::cos(s.imag() * u); };
  auto im = [&](double u) { return f(std::exp(u)) * std::exp(s.real() * u) * std::sin(s.imag() * u); };
  const double tol = 1e-10;
  const double vr = integrate(re, a, b, tol, cuts, panel).value;
  const double vi = s.imag() != 0.0 ? integrate(im, a, b, tol, cuts, panel).value : 0.0;
  return {vr, vi};
}

// ---------------------------------------------------------------- TestFunction

TestFunction TestFunction::sinc_squared() {
  TestFunction t;
  t.kind_ = Kind::sinc_squared;
  t.lo_ = std::exp(-2.0);
  t.hi_ = std::exp(2.0);
  t.decay_exponent_ = 2.0;
  t.decay_constant_ = 1.0;
  return t;
}

TestFunction TestFunction::custom(CustomSpec spec) {
  if (!(spec.lo > 0.0) || !(spec.hi > spec.lo)) throw ConfigError("TestFunction: support must satisfy 0 < a < b");
  if (!spec.phi) throw ConfigError("TestFunction: missing point evaluator");
  TestFunction t;
  t.kind_ = Kind::custom;
  t.lo_ = spec.lo;
  t.hi_ = spec.hi;
  t.decay_exponent_ = spec.decay_exponent;
  t.decay_constant_ = spec.decay_constant;
  t.custom_ = std::make_shared<const CustomSpec>(std::move(spec));
  return t;
}

TestFunction TestFunction::zero() {
  CustomSpec spec;
  spec.phi = [](double) { return 0.0; };
  spec.lo = 1.0;
  spec.hi = std::numbers::e;
  spec.decay_exponent = 100.0;
  spec.decay_constant = 0.0;
  spec.transform = [](cplx) { return cplx{}; };
  return custom(std::move(spec));
}

TestFunction TestFunction::log_bump(double width) {
  if (!(width > 0.0)) throw ConfigError("log_bump: width must be positive");
  CustomSpec spec;
  spec.phi = [width](double x) {
    const double u = std::log(x) / width;
    return std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
  };
  spec.lo = std::exp(-width);
  spec.hi = std::exp(width);
  // Measured envelope of x⁴|Φ̂(ix)| stays below 5·10³ for width ≤ 1/2.
  spec.decay_exponent = 4.0;
  spec.decay_constant = 5.0e3;
  return custom(std::move(spec));
}

bool TestFunction::has_closed_transform() const noexcept {
  return kind_ == Kind::sinc_squared || (custom_ && custom_->transform);
}

double TestFunction::operator()(double x) const {
  if (!(x > 0.0)) throw ConfigError("TestFunction: x must be positive");
  if (x <= lo_ || x >= hi_) return 0.0;
  if (kind_ == Kind::sinc_squared) return scale_ * phi_sinc(x);
  return scale_ * custom_->phi(x);
}

cplx TestFunction::transform(cplx s) const {
  if (kind_ == Kind::sinc_squared) return scale_ * phi_hat_sinc(s);
  if (custom_->transform) return scale_ * custom_->transform(s);
  return scale_ * mellin_numeric(custom_->phi, lo_, hi_, s, custom_->breakpoints);
}

double TestFunction::hat_l2() const {
  // ∫ Φ(e^{−u})² du over u ∈ (−log b, −log a).
  std::vector<double> cuts;
  if (kind_ == Kind::sinc_squared) cuts.push_back(0.0);
  if (custom_)
    for (const double x : custom_->breakpoints)
      if (x > 0.0) cuts.push_back(-std::log(x));
  auto g = [this](double u) {
    const double v = (*this)(std::exp(-u));
    return v * v;
  };
  return integrate(g, -std::log(hi_), -std::log(lo_), 1e-12, cuts).value;
}

TestFunction TestFunction::scaled(double c) const {
  TestFunction t = *this;
  t.scale_ *= c;
  return t;
}

// ---------------------------------------------------------------- SmoothWeight

double w_bump(double x) {
  if (x <= 1.0 || x >= 2.0) return 0.0;
  return std::exp(-1.0 / ((x - 1.0) * (2.0 - x)));
}

cplx w_hat(cplx s) { return mellin_numeric(w_bump, 1.0, 2.0, s); }

SmoothWeight SmoothWeight::bump() {
  SmoothWeight w;
  w.w_ = w_bump;
  w.init();
  return w;
}

SmoothWeight SmoothWeight::zero() { return SmoothWeight{}; }

SmoothWeight SmoothWeight::custom(std::function<double(double)> fn, double lo, double hi) {
  if (!(lo >= 1.0) || !(hi <= 2.0) || !(hi > lo)) throw ConfigError("SmoothWeight: support must lie inside (1, 2)");
  SmoothWeight w;
  w.w_ = std::move(fn);
  w.lo_ = lo;
  w.hi_ = hi;
  w.init();
  return w;
}

void SmoothWeight::init() { hat1_ = transform(cplx(1.0, 0.0)).real(); }

double SmoothWeight::operator()(double x) const {
  if (!w_ || x <= lo_ || x >= hi_) return 0.0;
  return w_(x);
}

cplx SmoothWeight::transform(cplx s) const {
  if (!w_) return {};
  return mellin_numeric(w_, lo_, hi_, s);
}

// ---------------------------------------------------------------- Plancherel

PlancherelResult plancherel_check(const TestFunction& phi) {
  const double beta = phi.decay_exponent();
  if (beta < 1.5) throw ConfigError("plancherel_check: decay exponent below 3/2");
  const double c = phi.decay_constant();
  const double p = 2.0 * beta - 1.0;

  PlancherelResult r;
  r.rhs = phi.hat_l2();
  if (phi.has_closed_transform()) {
    r.truncation = 1.0e4;
  } else {
    // Stop where the declared decay makes the remaining tail negligible.
    const double x = std::pow(c * c / (p * 1e-10), 1.0 / p);
    r.truncation = std::clamp(x, 1.0, 1.0e4);
  }
  // Both half-lines: 2·∫_X^∞ c² x^{−2β} dx.
  r.tail_bound = 2.0 * c * c * std::pow(r.truncation, -p) / p;
  auto g = [&phi](double x) { return std::norm(phi.transform_imag(x)); };
  const double half = integrate(g, 0.0, r.truncation, 1e-11, {}, std::numbers::pi).value;
  r.lhs = (2.0 * half + r.tail_bound) / (2.0 * std::numbers::pi);
  return r;
}

double sinc4_integral() {
  auto g = [](double x) {
    if (x < 1e-4) return 1.0 - 2.0 * x * x / 3.0;
    const double v = std::sin(x) / x;
    return v * v * v * v;
  };
  const double xmax = 1.0e4;
  const double half = integrate(g, 0.0, xmax, 1e-12, {}, std::numbers::pi).value;
  const double tail = 2.0 * std::pow(xmax, -3.0) / 3.0;
  return 2.0 * half + tail;
}

}  // namespace lpair
