#pragma once

// Dirichlet characters mod q as integer exponent tables, built from a CRT
// generator decomposition of (ℤ/qℤ)*, plus the finite character-sum
// identities behind the off-diagonal analysis (Δ, its U/L split, the Möbius
// flip).

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "lpair/arith.hpp"
#include "lpair/testfn.hpp"

namespace lpair {

// One cyclic factor of (ℤ/qℤ)*: residues ≡ 1 mod q/local except in this
// prime-power slot, where the generator has the given order.
struct CyclicFactor {
  std::uint32_t prime;
  std::uint32_t local_modulus;  // p^k
  std::uint32_t generator;      // as a residue mod p^k
  std::uint32_t order;
  std::uint32_t lifted;         // CRT lift: ≡ generator mod p^k, ≡ 1 mod q/p^k
};

class DirichletCharacter {
 public:
  static constexpr std::int32_t kNonUnit = -1;

  std::uint32_t modulus() const noexcept { return q_; }
  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t index() const noexcept { return index_; }
  std::uint32_t conductor() const noexcept { return conductor_; }
  bool is_primitive() const noexcept { return conductor_ == q_; }
  bool is_principal() const noexcept { return order_ == 1; }
  // κ = 0 for even, 1 for odd characters.
  int parity() const noexcept { return parity_; }
  bool is_real() const noexcept { return order_ <= 2; }
  // Exponent per cyclic factor: χ(g_c) = e(j_c / o_c).
  const std::vector<std::uint32_t>& generator_exponents() const noexcept { return gen_exp_; }

  // k(a) with χ(a) = e^{2πi k(a)/order}, or kNonUnit when gcd(a, q) > 1.
  std::int32_t exponent(std::int64_t a) const;
  std::complex<double> operator()(std::int64_t a) const;
  const std::vector<std::int32_t>& exponents() const noexcept { return exps_; }

  // The character taking conjugate values, same modulus.
  DirichletCharacter conjugate() const;
  // The primitive character mod conductor() that induces this one.
  DirichletCharacter inducing_primitive() const;

 private:
  friend class CharacterGroup;
  DirichletCharacter() = default;

  std::uint32_t q_ = 1;
  std::uint32_t order_ = 1;
  std::uint32_t index_ = 0;
  std::uint32_t conductor_ = 1;
  int parity_ = 0;
  std::vector<std::uint32_t> gen_exp_;
  std::vector<std::uint32_t> radix_;  // factor orders
  std::vector<std::int32_t> exps_;
};

class CharacterGroup {
 public:
  // Throws ConfigError for q = 0.
  explicit CharacterGroup(std::uint32_t q);

  std::uint32_t modulus() const noexcept { return q_; }
  const std::vector<CyclicFactor>& factors() const noexcept { return factors_; }
  const std::vector<DirichletCharacter>& characters() const noexcept { return chars_; }
  std::vector<DirichletCharacter> primitive_characters() const;
  std::size_t size() const noexcept { return chars_.size(); }

  // Character with the given exponent tuple.
  const DirichletCharacter& by_exponents(const std::vector<std::uint32_t>& j) const;
  // Discrete logs of a unit a with respect to the factor generators.
  std::vector<std::uint32_t> discrete_log(std::uint64_t a) const;

 private:
  std::uint32_t q_;
  std::vector<CyclicFactor> factors_;
  std::vector<std::uint32_t> dlog_;  // q_ × factors_.size(); unused rows for non-units
  std::vector<DirichletCharacter> chars_;
};

// Least d | q such that χ is trivial on units ≡ 1 mod d (direct test over
// divisors; O(q log q)).
std::uint32_t conductor(const DirichletCharacter& chi);
// Same value read off the factor exponents: an odd-prime factor of reduced
// order o contributes p^{1+v_p(o)}, the 2-part 2^{2+log₂ o₅} or 4 or 1. This is
// what CharacterGroup stores; the direct test above cross-checks it.
std::uint32_t conductor_from_factors(const DirichletCharacter& chi, const std::vector<CyclicFactor>& factors);

struct OrthogonalitySum {
  std::complex<double> direct;  // Σ* χ(p)χ̄(r) over primitive χ
  double divisor = 0.0;         // Σ_{d | (q, p−r)} φ(d)μ(q/d)
};

// Both routes; throws NumericalError if they differ by more than 1e-9 and
// ConfigError if gcd(pr, q) > 1.
OrthogonalitySum primitive_orthogonality_sum(const ArithmeticTables& t, std::uint32_t q, std::uint64_t p,
                                             std::uint64_t r);
OrthogonalitySum primitive_orthogonality_sum(const ArithmeticTables& t, const CharacterGroup& g, std::uint64_t p,
                                             std::uint64_t r);

enum class DeltaRoute { divisor, characters };

// Δ(p,r) = Σ_{(q,pr)=1} W(q/Q)/φ(q) · Σ*_χ χ(p)χ̄(r). Needs 2Q ≤ table limit.
double delta_pr(const ArithmeticTables& t, std::uint64_t p, std::uint64_t r, double Q, const SmoothWeight& w,
                DeltaRoute route = DeltaRoute::divisor);

struct DeltaSplit {
  double upper = 0.0;  // U: c > C
  double lower = 0.0;  // L: c ≤ C
};

// The (d, c) rearrangement with q = cd, d | p − r, split at c = C.
DeltaSplit delta_split(const ArithmeticTables& t, std::uint64_t p, std::uint64_t r, double Q, const SmoothWeight& w,
                       double C);

struct MoebiusFlip {
  double upper = 0.0;  // Σ_{c>C, (cd,pr)=1} μ(c)W(cd/Q)/φ(cd)
  double lower = 0.0;  // Σ_{c≤C, (cd,pr)=1} μ(c)W(cd/Q)/φ(cd)
};

MoebiusFlip moebius_flip(const ArithmeticTables& t, std::uint64_t p, std::uint64_t r, double Q, const SmoothWeight& w,
                         double C);

}  // namespace lpair
