#pragma once

// Prime sums, zero sums and the explicit formula tying them together; the
// family statistics N_Φ(Q) and F_Φ(Q^α; W); the S = S_D + S_N split of the
// squared prime sum; and the progression variance M(x, Q).

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lpair/arith.hpp"
#include "lpair/characters.hpp"
#include "lpair/lfun.hpp"
#include "lpair/testfn.hpp"

namespace lpair {

struct PairCorrConfig {
  double Q = 25.0;
  double alpha = 0.5;  // X = Q^α, |α| ≤ 2
  double T_max = 200.0;
  SmoothWeight W = SmoothWeight::bump();
  TestFunction phi = TestFunction::sinc_squared();
  double C = 1.0;  // U/L cut, only used by verification runs

  // Throws ConfigError for |α| > 2, Q ≤ 1 or T_max ≤ 0.
  void validate() const;
};

enum class StatKind { N_phi, F_phi, S_total, S_diag, S_offdiag, M_bdh, prediction };

std::string to_string(StatKind k);

struct StatResult {
  StatKind kind = StatKind::N_phi;
  double value = 0.0;
  double Q = 0.0;
  double alpha = 0.0;
  double T_max = 0.0;
  double truncation_budget = 0.0;  // additive error estimate
  double wall_time = 0.0;          // seconds
  std::string note;
};

// ---- prime sums ------------------------------------------------------------

// Σ_n Λ(n)χ(n)Φ(n/X)/√n over n ∈ (aX, bX), or over primes only. Throws
// ConfigError when bX exceeds the table limit.
cplx prime_sum(const ArithmeticTables& t, const DirichletCharacter& chi, double X, const TestFunction& phi,
               bool primes_only = false);

// Primes p with p/X inside the support of Φ and their weights a_p = log p Φ(p/X)/√p.
struct PrimeWindow {
  std::vector<std::uint32_t> primes;
  std::vector<double> a;  // a_p
};
PrimeWindow prime_window(const ArithmeticTables& t, double X, const TestFunction& phi);

// ---- zero sums and the explicit formula ------------------------------------

struct ZeroSum {
  cplx value;         // Σ_{|γ| ≤ T} m_ρ Φ̂(iγ) X^{iγ}
  double tail = 0.0;  // bound on the omitted |γ| > T part
};

// Tail estimate for Σ_{|γ|>T} |Φ̂(iγ)| from the declared decay
// |Φ̂(ix)| ≤ c|x|^{−β}: max(2c·log(qT)/T^{β−1}, density integral + count slack).
double zero_sum_tail(std::uint32_t q, double T, const TestFunction& phi);
// Same for Σ_{|γ|>T} |Φ̂(iγ)|².
double zero_sum_sq_tail(std::uint32_t q, double T, const TestFunction& phi);

// Throws ConfigError if the scan is incomplete or shorter than T_max.
ZeroSum zero_sum(std::uint32_t q, double X, const TestFunction& phi, const ZeroScan& scan, double T_max);

struct ExplicitFormula {
  cplx zero_side;           // Σ_γ Φ̂(iγ)X^{iγ}, truncated
  double zero_tail = 0.0;
  double pole = 0.0;        // E(χ)Φ̂(½)X^{½}
  cplx prime;               // Σ Λ(n)χ(n)Φ(n/X)/√n
  double conductor = 0.0;   // Φ(1/X) log(q/π)
  cplx lhs_minus_rhs;       // zero side minus the three displayed terms
  double residual = 0.0;    // |lhs_minus_rhs|

  // Terms the displayed identity leaves inside its error term:
  double pole_dual = 0.0;   // E(χ)Φ̂(−½)X^{−½}
  cplx dual_prime;          // Σ Λ(n)χ̄(n)Φ(1/(nX))/√n
  double archimedean = 0.0; // Γ-factor integral, see archimedean_term
  double complete_residual = 0.0;
};

// ∫₀^∞ [Φ(1/X)e^{−2v}/v − e^{−2av}(Φ(e^v/X) + Φ(e^{−v}/X))/(1 − e^{−2v})] dv
// with a = (½ + κ)/2.
double archimedean_term(const TestFunction& phi, double X, int kappa);

// The complete right side of the Weil explicit formula for the primitive
// character inducing chi: pole terms (principal only), both prime sums, the
// conductor term and the archimedean integral. Needs no zeros.
struct WeilSide {
  double pole = 0.0;
  double pole_dual = 0.0;
  cplx prime;
  cplx dual_prime;
  double conductor = 0.0;
  double archimedean = 0.0;
  cplx total;
};

WeilSide weil_side(const ArithmeticTables& t, const DirichletCharacter& chi, double X, const TestFunction& phi);

// Envelope: q ≤ 20, 1 ≤ X ≤ 10³, T_max ≥ 500 (ConfigError otherwise).
ExplicitFormula explicit_formula(const ArithmeticTables& t, const LFunctionData& data, double X,
                                 const TestFunction& phi, const ZeroScan& scan, double T_max);

// ---- family of zeros --------------------------------------------------------

struct FamilyModulus {
  std::uint32_t q = 0;
  double weight = 0.0;  // W(q/Q)/φ(q)
  std::vector<CharacterZeros> characters;
};

struct Family {
  double Q = 0.0;
  double T_max = 0.0;
  std::vector<FamilyModulus> moduli;
};

// Zeros of every primitive character mod q to height T.
using ZeroSource = std::function<std::vector<CharacterZeros>(std::uint32_t q, double T)>;

ZeroSource direct_zero_source(double grid_step = 0.05, unsigned jobs = 0);

// The moduli q with W(q/Q) ≠ 0, each with its zero lists. Throws CacheError
// if a returned scan is incomplete or shorter than T_max.
Family build_family(double Q, const SmoothWeight& W, double T_max, const ZeroSource& source);

// Per-character Φ̂(iγ) for the retained zeros |γ| ≤ T_max, shared by the
// family statistics.
class FamilySums {
 public:
  struct Row {
    std::uint32_t q = 0;
    double weight = 0.0;
    std::vector<double> gamma;
    std::vector<double> hat_re;  // m_ρ·Re Φ̂(iγ)
    std::vector<double> hat_im;
    std::vector<double> mult;
    bool has_imag = false;  // some Φ̂(iγ) off the real axis
    double sq_tail = 0.0;  // Σ_{|γ|>T}|Φ̂|² bound
    double l1_tail = 0.0;  // Σ_{|γ|>T}|Φ̂| bound
  };

  FamilySums(const Family& family, const TestFunction& phi, unsigned jobs = 0);

  const std::vector<Row>& rows() const noexcept { return rows_; }
  double Q() const noexcept { return Q_; }
  double T_max() const noexcept { return T_; }

  // Σ_γ Φ̂(iγ) e^{iγt} for one character.
  cplx inner(std::size_t row, double t) const;

  StatResult n_phi() const;
  StatResult f_phi(double alpha) const;

 private:
  double Q_;
  double T_;
  unsigned jobs_;
  std::vector<Row> rows_;
  StatResult n_;
};

StatResult n_phi(const PairCorrConfig& cfg, const Family& family);
StatResult f_phi(const PairCorrConfig& cfg, const Family& family);

// ---- asymptotic predictions ------------------------------------------------

// |α| for |α| ≤ 1, else 1.
double f_alpha(double alpha);

struct Prediction {
  StatResult result;  // f(α) + Φ(Q^{−|α|})² log Q / ((1/2π)∫|Φ̂|²)
  double band = 0.0;  // Φ(Q^{−|α|})·√(f(α) log Q), implied constant taken as 1
};

Prediction pair_correlation_prediction(const PairCorrConfig& cfg);

// ---- S = S_D + S_N ----------------------------------------------------------

struct SDecomposition {
  StatResult total;     // route (ii): Σ_{p,r} a_p a_r Δ(p,r)
  StatResult diagonal;  // p = r
  StatResult offdiagonal;
  double route_i = 0.0;  // Σ_q (W/φ) Σ*_χ |Σ_p a_p χ(p)|², when computed
  bool route_i_computed = false;
};

// X = Q^α. route (i) is always computed when `character_route` is set and
// then asserted equal to route (ii) within 1e-6 relative (NumericalError).
// Needs 2Q and X·b within the tables.
SDecomposition s_decomposition(const ArithmeticTables& t, const PairCorrConfig& cfg, bool character_route = true,
                               unsigned jobs = 0);

// A·Q·log X·(1/2π)∫|Φ̂|² with A = Ŵ(1)·A₀: the main term S_D should track.
double s_diag_main_term(const PairCorrConfig& cfg);

// Σ_p log²p Φ(p/X)²/p − (1/2π)∫|Φ̂|²·log X.
double prime_square_discrepancy(const ArithmeticTables& t, double X, const TestFunction& phi);

struct PrimeMellinCheck {
  cplx lhs;  // Σ_p log p Φ(p/X) B_{−s}(p) R_{−s}(p) / p^{½+z}
  cplx rhs;  // Φ̂(½ − z) X^{½ − z}
};

PrimeMellinCheck prime_mellin_check(const ArithmeticTables& t, double X, const TestFunction& phi, cplx s, cplx z);

// ---- progressions ------------------------------------------------------------

// M(x, Q) = Σ_{q ≤ Q} Σ_{(a,q)=1} (ψ(x; q, a) − x/φ(q))². Needs x ≤ limit.
StatResult bdh_variance(const ArithmeticTables& t, std::uint32_t x, std::uint32_t Q, unsigned jobs = 0);

}  // namespace lpair
