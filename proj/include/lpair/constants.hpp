#pragma once

// Euler products and multiplicative series: A₀, K(s), g(s), the finite
// products B_s(m), R_s(m), the series identity for Σ 1/(φ(ad)d^s), and the
// all-characters simple-zero constant.

#include <cstdint>
#include <string>

#include "lpair/hurwitz.hpp"

namespace lpair {

enum class ProductKind {
  A0,       // ∏ (1 − p⁻² − p⁻³)
  K,        // ∏ (1 + 1/((p−1)p^{s+1})), Re s > −1
  g,        // ∏ (1 − 1/((p−1)p^s) + 1/((p−1)p^{2s}) − p^{−2s−1}), Re s > 0
  K_minus,  // ∏ (1 + 1/((ℓ−1)ℓ^{2−s}) − 1/((ℓ−1)ℓ^{3−2s})), Re s < 1
};

std::string to_string(ProductKind k);

struct EulerProductValue {
  ProductKind kind = ProductKind::A0;
  cplx s;                        // parameter (unused for A0)
  cplx value;                    // ∏_{p ≤ P}
  std::uint32_t truncation_prime = 0;
  double tail_bound = 0.0;       // rigorous bound on |log(full) − log(value)|
  cplx corrected;                // value·exp(estimated tail over p > P)
  double corrected_bound = 0.0;  // bound on |log(full) − log(corrected)|
};

// Product over primes ≤ P. The tail Σ_{p>P} log f(p) is expanded in prime
// power sums Σ_{p>P} p^{−e}, each taken as P(e) − Σ_{p≤P} p^{−e} with the
// prime zeta function P(e) = Σ μ(m)/m · log ζ(me).
// Throws ConfigError outside the convergence region or for P < 2.
EulerProductValue euler_product(ProductKind kind, std::uint32_t P, cplx s = {0.0, 0.0});

// Σ_{p > P} p^{−θ} ≤ 1.25506·θ·P^{1−θ} / ((θ − 1) log P), from π(x) < 1.25506 x/log x.
double prime_tail_bound(double theta, double P);

// Prime zeta function Σ_p p^{−e}, Re e > 1 (log ζ branch continuous for Re e ≥ 1.75).
cplx prime_zeta(cplx e);

struct BsRs {
  cplx B;
  cplx R;
};

// B_s(m) = ∏_{p|m}(1 − p^{−s−1}), R_s(m) = ∏_{p|m}(1 + 1/((p−1)p^{s+1}))⁻¹.
// Throws NumericalError if an R factor's denominator vanishes.
BsRs bsm_rsm(cplx s, std::uint64_t m);

struct SeriesIdentity {
  cplx lhs;               // Σ_{d ≤ N, (d,m)=1} 1/(φ(ad) d^s)
  cplx lhs_extrapolated;  // lhs plus the tail estimated from N/4 and N
  cplx rhs;               // (1/φ(a)) ζ(1+s) K(s) B_s(m) R_s(a) R_s(m)
};

// Throws ConfigError if gcd(a, m) > 1 or Re s ≤ 0.
SeriesIdentity sum_varphi_identity_check(std::uint64_t a, std::uint64_t m, cplx s, std::uint32_t N,
                                         std::uint32_t P = 1000000);

struct InverseTotientSeries {
  double partial = 0.0;     // Σ_{d ≤ D} 1/(dφ(d))
  double value = 0.0;       // partial + tail estimate
  double tail_bound = 0.0;  // rigorous bound on the tail
  std::uint32_t cutoff = 0;
};

// Σ_d 1/(dφ(d)) summed directly; tail ≈ (ζ(2)ζ(3)/ζ(6))/D, bounded via
// n/φ(n) < e^γ log log n + 2.50637 / log log n.
InverseTotientSeries inverse_totient_series(std::uint32_t D);

struct OzlukValue {
  double value = 0.0;  // (11/12)·Σ⁻¹·A₀⁻¹
  double series = 0.0;
  double a0 = 0.0;
  double bound = 0.0;  // propagated from both truncations
};

OzlukValue ozluk_constant(std::uint32_t D = 10000000, std::uint32_t P = 1000000);

struct KMinusCheck {
  cplx lhs;  // K(−s) by direct product
  cplx rhs;  // ζ(2−s)·∏(…)
};

// Both sides of K(−s) = ζ(2−s)∏(1 + 1/((ℓ−1)ℓ^{2−s}) − 1/((ℓ−1)ℓ^{3−2s})).
KMinusCheck k_minus_factorization(cplx s, std::uint32_t P = 1000000);

}  // namespace lpair
