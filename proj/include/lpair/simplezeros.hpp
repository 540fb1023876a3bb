#pragma once

// The Fejér pair r(u) = (sin παu / παu)², r̃(β) = (α − |β|)/α² on [−α, α],
// the kernel integrals it produces against f(β) and Φ(Q^{−|β|})², the
// pairing identity between the zero double sum and ∫F_Φ(Q^β)r̃(β)dβ, and
// the lower bound for the weighted proportion of simple zeros.

#include <span>
#include <vector>

#include "lpair/lfun.hpp"
#include "lpair/stats.hpp"
#include "lpair/testfn.hpp"

namespace lpair {

class KernelSpec {
 public:
  // Throws ConfigError unless 1 < alpha ≤ 2.
  explicit KernelSpec(double alpha);

  double alpha() const noexcept { return alpha_; }
  double r(double u) const;
  double r_tilde(double beta) const;

 private:
  double alpha_;
};

struct FejerPair {
  double r = 0.0;
  double r_tilde = 0.0;
};

FejerPair fejer_pair(double u, double beta, const KernelSpec& spec);

// |r(u) − ∫ r̃(β) e^{2πiuβ} dβ|, the transform taken by quadrature.
double fourier_pair_residual(const KernelSpec& spec, double u);

// ∫_{−α}^{α} f(β) r̃(β) dβ = 1 + 1/(3α²) − 1/α. ConfigError outside (1, 2).
double kernel_integral_f(double alpha);
// The same integral by adaptive quadrature (kinks at 0 and ±1 as breakpoints).
double kernel_integral_f_quadrature(double alpha);

// (2/α²) log Q ∫₀¹ Φ(Q^{−β})² (α − β) dβ / ((1/2π)∫|Φ̂|²). Tends to 1/α for
// Φ(x) = Φ(1/x). Needs 1 < α ≤ 2 and Q ≥ 10; 0 for Φ ≡ 0.
double phi_term_integral(double alpha, double Q, const TestFunction& phi);

// 1 − 1/(3α²), the bound the kernel argument gives as Q → ∞.
double simple_zero_asymptotic(double alpha);

// Σ_{k,l} w_k w_l r((γ_k − γ_l) log Q / 2π), O(n²) through the Fejér kernel.
double kernel_double_sum(std::span<const double> gamma, std::span<const double> w, double alpha, double log_Q);

struct PairingCheck {
  double lhs = 0.0;          // normalized zero double sum
  double rhs = 0.0;          // ∫ F_Φ(Q^β) r̃(β) dβ, composite Gauss–Legendre
  double rhs_refined = 0.0;  // same with twice the panels
  int panels = 0;            // per half-interval, coarse rule
  double budget = 0.0;       // quadrature change + truncation of the two sides
};

// Zeros with |Φ̂(iγ)| ≤ 1e-8 are dropped from the double sum (their effect
// is added to the budget). panels = 0 picks a count that resolves the
// highest frequency 2·T_max·log Q present in F_Φ(Q^β).
PairingCheck pairing_identity_check(const FamilySums& sums, const KernelSpec& spec, int panels = 0);

// Merges runs of ordinates closer than tol into one record whose
// multiplicity is the run's total. Requires sorted input and tol at least
// twice the widest bracket (ConfigError otherwise).
std::vector<ZeroRecord> multiplicity_detect(const std::vector<ZeroRecord>& zeros, double tol = 1e-6);

// Family with every zero list passed through multiplicity_detect.
Family merge_multiplicities(const Family& family, double tol = 1e-6);

struct SimpleZeroBound {
  double empirical = 0.0;          // (2N_Φ − kernel double sum)/N_Φ
  double asymptotic = 0.0;         // 1 − 1/(3α²)
  double simple_proportion = 0.0;  // Σ over simple zeros of |Φ̂|², over N_Φ
  double n_phi = 0.0;
  double budget = 0.0;
};

SimpleZeroBound simple_zero_bound(const Family& family, const TestFunction& phi, const KernelSpec& spec,
                                  double tol = 1e-6);

}  // namespace lpair
