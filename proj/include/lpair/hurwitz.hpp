#pragma once

#include <complex>
#include <span>
#include <vector>

namespace lpair {

using cplx = std::complex<double>;

// Largest |Im s| accepted by the Hurwitz evaluator. Accuracy is engineered
// for |Im s| <= 500; the hard limit leaves headroom for bracket refinement.
inline constexpr double kMaxHeight = 1000.0;

// ζ(s, a) for a in (0, 1] by Euler–Maclaurin with max(|s|, 20) leading terms
// and Bernoulli corrections through B₂₀. Throws NumericalError at the pole
// s = 1 and beyond kMaxHeight.
cplx hurwitz_zeta(cplx s, double a);

// ζ(s, a) − a^{-s}: the same sum with its first term dropped, so that
// ζ(s) − 1 = hurwitz_zeta_tail(s, 1) keeps full relative accuracy.
cplx hurwitz_zeta_tail(cplx s, double a);

// log Γ(z) on the branch continuous in Re z > 0.
cplx log_gamma(cplx z);

// Precomputed log(n + a_j) and (n + a_j)^{-1/2} for a fixed set of shifts,
// so that ζ(½ + it, a_j) costs one vector kernel call per shift.
class HurwitzHalfLine {
 public:
  HurwitzHalfLine(std::vector<double> shifts, double max_height);

  std::size_t size() const noexcept { return shifts_.size(); }
  double max_height() const noexcept { return max_height_; }
  std::span<const double> shifts() const noexcept { return shifts_; }

  // out[j] = ζ(½ + it, shifts[j]).
  void evaluate(double t, std::span<cplx> out) const;
  cplx evaluate_one(double t, std::size_t j) const;

 private:
  std::vector<double> shifts_;
  double max_height_;
  std::size_t terms_;
  std::vector<double> logs_;     // shifts_.size() × terms_
  std::vector<double> weights_;  // shifts_.size() × terms_
};

}  // namespace lpair
