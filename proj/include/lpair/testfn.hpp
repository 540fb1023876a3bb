#pragma once

// Mellin pairs (Φ, Φ̂) with compact support in (0, ∞), and the smooth
// weight W on (1, 2) that averages over moduli.

#include <functional>
#include <memory>
#include <vector>

#include "lpair/hurwitz.hpp"

namespace lpair {

// Φ(x) = ½ − ¼|log x| on (e⁻², e²), 0 elsewhere. Throws ConfigError for x ≤ 0.
double phi_sinc(double x);
// Φ̂(s) = (sinh s / s)², with Φ̂(0) = 1.
cplx phi_hat_sinc(cplx s);

// ∫ f(x) x^{s−1} dx over [lo, hi], computed as ∫ f(e^u) e^{su} du. The
// u-range is cut at log(breakpoints) and into half-periods of e^{i Im(s) u}.
// Absolute tolerance 1e-10 per component; NumericalError if not reached.
cplx mellin_numeric(const std::function<double(double)>& f, double lo, double hi, cplx s,
                    const std::vector<double>& breakpoints = {});

class TestFunction {
 public:
  enum class Kind { sinc_squared, custom };

  struct CustomSpec {
    std::function<double(double)> phi;
    double lo = 0.0;
    double hi = 0.0;
    // Contract |Φ̂(ix)| ≤ decay_constant·|x|^{-decay_exponent} for |x| ≥ 1.
    double decay_exponent = 2.0;
    double decay_constant = 1.0;
    std::vector<double> breakpoints;
    // Optional closed form; mellin_numeric is used when empty.
    std::function<cplx(cplx)> transform;
  };

  static TestFunction sinc_squared();
  // Throws ConfigError unless 0 < lo < hi.
  static TestFunction custom(CustomSpec spec);
  // Φ ≡ 0 on (1, e).
  static TestFunction zero();
  // exp(−1/(1 − (log x / width)²)) for |log x| < width: a smooth narrow bump.
  static TestFunction log_bump(double width);

  Kind kind() const noexcept { return kind_; }
  double support_lo() const noexcept { return lo_; }
  double support_hi() const noexcept { return hi_; }
  double decay_exponent() const noexcept { return decay_exponent_; }
  double decay_constant() const noexcept { return decay_constant_ * std::abs(scale_); }
  bool has_closed_transform() const noexcept;

  double operator()(double x) const;
  cplx transform(cplx s) const;
  // Φ̂(ix) for real x; for sinc² this is (sin x / x)².
  cplx transform_imag(double x) const { return transform(cplx(0.0, x)); }

  // (1/2π)∫|Φ̂(ix)|² dx = ∫ Φ(e^{−u})² du, evaluated from the right-hand side.
  double hat_l2() const;

  // c·Φ, with the transform scaled accordingly.
  TestFunction scaled(double c) const;

 private:
  TestFunction() = default;

  Kind kind_ = Kind::custom;
  double lo_ = 0.0;
  double hi_ = 0.0;
  double decay_exponent_ = 2.0;
  double decay_constant_ = 1.0;
  double scale_ = 1.0;
  std::shared_ptr<const CustomSpec> custom_;
};

class SmoothWeight {
 public:
  // exp(−1/((x−1)(2−x))) on (1, 2).
  static SmoothWeight bump();
  // W ≡ 0.
  static SmoothWeight zero();
  // Arbitrary weight; throws ConfigError unless 1 ≤ lo < hi ≤ 2.
  static SmoothWeight custom(std::function<double(double)> w, double lo, double hi);

  double operator()(double x) const;
  double support_lo() const noexcept { return lo_; }
  double support_hi() const noexcept { return hi_; }
  bool is_zero() const noexcept { return !w_; }
  cplx transform(cplx s) const;
  // Ŵ(1) = ∫ W(x) dx, cached.
  double hat_at_one() const noexcept { return hat1_; }

 private:
  SmoothWeight() = default;
  void init();

  std::function<double(double)> w_;
  double lo_ = 1.0;
  double hi_ = 2.0;
  double hat1_ = 0.0;
};

double w_bump(double x);
cplx w_hat(cplx s);

struct PlancherelResult {
  double lhs = 0.0;         // (1/2π)∫|Φ̂(ix)|² dx, truncated plus tail bound
  double rhs = 0.0;         // ∫ Φ(e^{−u})² du
  double truncation = 0.0;  // |x| cut for the left side
  double tail_bound = 0.0;  // analytic bound added to lhs
};

// Throws ConfigError when the decay exponent is below 3/2.
PlancherelResult plancherel_check(const TestFunction& phi);

// ∫_{−∞}^{∞} (sin x / x)⁴ dx by quadrature on [−10⁴, 10⁴] plus the tail bound.
double sinc4_integral();

}  // namespace lpair
