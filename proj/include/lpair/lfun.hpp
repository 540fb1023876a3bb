#pragma once

// L(s, χ) through Hurwitz zeta, the completed function and root number, a
// real rotation Z(t) on the critical line, and sign-change zero location.

#include <cstdint>
#include <memory>
#include <vector>

#include "lpair/characters.hpp"
#include "lpair/hurwitz.hpp"

namespace lpair {

// L(s, χ) = q^{−s} Σ_{a=1}^{q} χ(a) ζ(s, a/q). At s = 1 for non-principal χ
// the digamma form −(1/q) Σ χ(a) ψ(a/q) is used. Throws NumericalError at
// the pole of a principal character.
cplx dirichlet_l(cplx s, const DirichletCharacter& chi);

class LFunctionData {
 public:
  // Throws ConfigError if chi is not primitive.
  explicit LFunctionData(DirichletCharacter chi);

  const DirichletCharacter& character() const noexcept { return chi_; }
  std::uint32_t modulus() const noexcept { return chi_.modulus(); }
  int kappa() const noexcept { return chi_.parity(); }
  cplx gauss_sum() const noexcept { return tau_; }
  cplx root_number() const noexcept { return eps_; }

 private:
  DirichletCharacter chi_;
  cplx tau_;
  cplx eps_;
};

// τ(χ) = Σ_a χ(a) e^{2πia/q}.
cplx gauss_sum(const DirichletCharacter& chi);

// Λ(s, χ) = (q/π)^{(s+κ)/2} Γ((s+κ)/2) L(s, χ), for Re(s+κ) > 0.
cplx completed_l(cplx s, const DirichletCharacter& chi);

// |Λ(½+it, χ) − ε Λ(½−it, χ̄)| relative to |Γ-factor|·max(1, |L|), with
// both sides evaluated independently.
double functional_equation_residual(const LFunctionData& data, double t);

// θ(t) such that e^{iθ(t)} L(½+it, χ) is real.
double hardy_theta(double t, const LFunctionData& data);

// Z(t) = Re(e^{iθ(t)} L(½+it, χ)). Asserts the discarded imaginary part is
// below 1e-8·max(1, |L|).
double hardy_z(double t, const LFunctionData& data);

// Shared Hurwitz data for all characters of one modulus: ζ(½+it, a/q) for
// every unit a. One instance serves every χ mod q.
class ModulusGrid {
 public:
  ModulusGrid(std::uint32_t q, double max_height);

  std::uint32_t modulus() const noexcept { return q_; }
  double max_height() const noexcept { return line_.max_height(); }
  const std::vector<std::uint32_t>& units() const noexcept { return units_; }

  // out[i] = ζ(½+it, units[i]/q); negative t by conjugation.
  void zetas(double t, std::span<cplx> out) const;
  // χ(a) for each unit, in units() order.
  std::vector<cplx> character_values(const DirichletCharacter& chi) const;
  // L(½+it, χ) from character values and zetas at the same t.
  cplx l_value(double t, std::span<const cplx> chi_values, std::span<const cplx> zetas) const;

  // Tabulate zetas on the symmetric grid t_k = −T + k·h, h = T/⌈T/step⌉.
  void sample(double T, double step);
  double sample_height() const noexcept { return sample_T_; }
  double sample_step() const noexcept { return sample_h_; }
  std::size_t sample_points() const noexcept { return 2 * sample_half_ + 1; }
  // Zetas at grid point k in [0, 2·half]; empty if no sample is held.
  std::vector<cplx> sampled_zetas(std::size_t k) const;

 private:
  std::uint32_t q_;
  std::vector<std::uint32_t> units_;
  HurwitzHalfLine line_;
  double sample_T_ = 0.0;
  double sample_h_ = 0.0;
  std::size_t sample_half_ = 0;
  std::vector<cplx> table_;  // (half+1) × units, t ≥ 0 only
};

// Z for one primitive character, evaluated through a shared ModulusGrid.
class ZFunction {
 public:
  ZFunction(LFunctionData data, std::shared_ptr<const ModulusGrid> grid);
  const LFunctionData& data() const noexcept { return data_; }
  const ModulusGrid& grid() const noexcept { return *grid_; }
  double operator()(double t) const;
  double from_zetas(double t, std::span<const cplx> zetas) const;

 private:
  LFunctionData data_;
  std::shared_ptr<const ModulusGrid> grid_;
  std::vector<cplx> chi_values_;
};

struct ZeroRecord {
  double ordinate = 0.0;
  double bracket = 0.0;  // half-width of the final bracket
  int multiplicity = 1;
};

struct ZeroScan {
  std::vector<ZeroRecord> zeros;  // sorted, on (−T, T]
  double T = 0.0;
  double grid_step = 0.0;  // step actually used
  double expected = 0.0;   // zero_count_main_term(q, T)
  double slack = 0.0;      // 2 + 2 log(qT)
  bool complete = false;
};

// (T/π) log(qT / 2πe). Throws ConfigError for qT ≤ 1.
double zero_count_main_term(std::uint32_t q, double T);
double zero_count_slack(std::uint32_t q, double T);

// Refinement target: bracket half-width.
inline constexpr double kBracketHalfWidth = 1e-9;

// Sign changes of Z on a grid over (−T, T], refined to kBracketHalfWidth.
// On a completeness failure the step is halved up to three times; the flag
// is reported rather than thrown. grid_step must be in (0, 0.1].
ZeroScan find_zeros(const LFunctionData& data, double T, double grid_step = 0.05);
ZeroScan find_zeros(const ZFunction& z, double T, double grid_step = 0.05);

struct CharacterZeros {
  DirichletCharacter chi;
  ZeroScan scan;
};

// All primitive characters mod q, sharing one ModulusGrid. Each conjugate
// pair is scanned once; χ̄ gets the negated ordinates. jobs = worker threads.
std::vector<CharacterZeros> scan_modulus(std::uint32_t q, double T, double grid_step, unsigned jobs);

}  // namespace lpair
