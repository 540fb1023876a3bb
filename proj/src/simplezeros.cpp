#include "lpair/simplezeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lpair/error.hpp"
#include "lpair/kernels.hpp"
#include "lpair/parallel.hpp"
#include "lpair/quadrature.hpp"

namespace lpair {

KernelSpec::KernelSpec(double alpha) : alpha_(alpha) {
  if (!(alpha > 1.0 && alpha <= 2.0)) throw ConfigError("KernelSpec: alpha must lie in (1, 2]");
}

double KernelSpec::r(double u) const {
  const double x = std::numbers::pi * alpha_ * u;
  if (std::abs(x) < 1e-8) return 1.0;
  const double s = std::sin(x) / x;
  return s * s;
}

double KernelSpec::r_tilde(double beta) const {
  const double b = std::abs(beta);
  return b < alpha_ ? (alpha_ - b) / (alpha_ * alpha_) : 0.0;
}

FejerPair fejer_pair(double u, double beta, const KernelSpec& spec) { return {spec.r(u), spec.r_tilde(beta)}; }

double fourier_pair_residual(const KernelSpec& spec, double u) {
  // r̃ is even, so the transform is 2∫₀^α r̃(β) cos(2πuβ) dβ.
  const double a = spec.alpha();
  const double w = 2.0 * std::numbers::pi * std::abs(u);
  const double panel = w > 0.0 ? std::min(a, std::numbers::pi / w) : a;
  const QuadResult q = integrate([&](double b) { return spec.r_tilde(b) * std::cos(w * b); }, 0.0, a, 1e-12, {},
                                 panel);
  return std::abs(spec.r(u) - 2.0 * q.value);
}

double kernel_integral_f(double alpha) {
  if (!(alpha > 1.0 && alpha < 2.0)) throw ConfigError("kernel_integral_f: alpha must lie in (1, 2)");
  return 1.0 + 1.0 / (3.0 * alpha * alpha) - 1.0 / alpha;
}

double kernel_integral_f_quadrature(double alpha) {
  const KernelSpec spec(alpha);
  const double bps[] = {-1.0, 0.0, 1.0};
  return integrate([&](double b) { return f_alpha(b) * spec.r_tilde(b); }, -alpha, alpha, 1e-13, bps).value;
}

double phi_term_integral(double alpha, double Q, const TestFunction& phi) {
  if (!(alpha > 1.0 && alpha <= 2.0)) throw ConfigError("phi_term_integral: alpha must lie in (1, 2]");
  if (!(Q >= 10.0)) throw ConfigError("phi_term_integral: Q must be at least 10");
  const double logQ = std::log(Q);
  // Q^{−β} leaves the support once β > −log(lo)/log Q.
  const double edge = std::min(1.0, -std::log(phi.support_lo()) / logQ);
  if (!(edge > 0.0)) return 0.0;
  auto g = [&](double b) {
    const double v = phi(std::exp(-b * logQ));
    return v * v * (alpha - b);
  };
  const double bps[] = {edge};
  const double I = integrate(g, 0.0, 1.0, 1e-13, bps).value;
  if (I == 0.0) return 0.0;
  return 2.0 / (alpha * alpha) * I * logQ / phi.hat_l2();
}

double simple_zero_asymptotic(double alpha) {
  if (!(alpha > 0.0)) throw ConfigError("simple_zero_asymptotic: alpha must be positive");
  return 1.0 - 1.0 / (3.0 * alpha * alpha);
}

double kernel_double_sum(std::span<const double> gamma, std::span<const double> w, double alpha, double log_Q) {
  if (gamma.size() != w.size()) throw ConfigError("kernel_double_sum: size mismatch");
  const double scale = alpha * log_Q / 2.0;
  std::vector<double> rows(gamma.size());
  for (std::size_t k = 0; k < gamma.size(); ++k) rows[k] = w[k] * kernels::fejer_row(gamma, w, gamma[k], scale);
  return pairwise_sum(rows);
}

namespace {

constexpr double kHatFloor = 1e-8;

struct RetainedRow {
  std::vector<double> gamma, re, im;
  double dropped_l1 = 0.0;
  double l1 = 0.0;
};

RetainedRow retain(const FamilySums::Row& r) {
  RetainedRow out;
  for (std::size_t k = 0; k < r.gamma.size(); ++k) {
    const double mag = std::hypot(r.hat_re[k], r.hat_im[k]);
    out.l1 += mag;
    if (mag / r.mult[k] <= kHatFloor) {
      out.dropped_l1 += mag;
      continue;
    }
    out.gamma.push_back(r.gamma[k]);
    out.re.push_back(r.hat_re[k]);
    out.im.push_back(r.hat_im[k]);
  }
  return out;
}

double row_pair_sum(const RetainedRow& r, double alpha, double logQ) {
  double s = kernel_double_sum(r.gamma, r.re, alpha, logQ);
  if (std::any_of(r.im.begin(), r.im.end(), [](double v) { return v != 0.0; }))
    s += kernel_double_sum(r.gamma, r.im, alpha, logQ);
  return s;
}

// Unnormalized Σ_q (W/φ) Σ*_χ Σ_{γ,γ'} r(…) Φ̂ Φ̂' and the truncation budget
// of the same quantity.
std::pair<double, double> family_pair_sum(const FamilySums& sums, double alpha) {
  const double logQ = std::log(sums.Q());
  const auto& rows = sums.rows();
  std::vector<double> val(rows.size()), bud(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const RetainedRow rr = retain(rows[i]);
    val[i] = rows[i].weight * row_pair_sum(rr, alpha, logQ);
    const double omitted = rows[i].l1_tail + rr.dropped_l1;
    bud[i] = rows[i].weight * (2.0 * rr.l1 * omitted + omitted * omitted);
  }
  return {pairwise_sum(val), pairwise_sum(bud)};
}

double rhs_quadrature(const FamilySums& sums, const KernelSpec& spec, int panels) {
  auto g = [&](double b) { return sums.f_phi(b).value * spec.r_tilde(b); };
  const double a = spec.alpha();
  return gauss_legendre(g, -a, 0.0, panels, 20) + gauss_legendre(g, 0.0, a, panels, 20);
}

}  // namespace

PairingCheck pairing_identity_check(const FamilySums& sums, const KernelSpec& spec, int panels) {
  PairingCheck c;
  const double N = sums.n_phi().value;
  if (N == 0.0) return c;
  if (panels <= 0) {
    const double omega = 2.0 * sums.T_max() * std::log(sums.Q());
    panels = std::max(4, static_cast<int>(std::ceil(spec.alpha() * omega / 16.0)));
  }
  c.panels = panels;
  const auto [K, trunc] = family_pair_sum(sums, spec.alpha());
  c.lhs = K / N;
  c.rhs = rhs_quadrature(sums, spec, panels);
  c.rhs_refined = rhs_quadrature(sums, spec, 2 * panels);
  const double rel_n = sums.n_phi().truncation_budget / N;
  c.budget = std::abs(c.rhs_refined - c.rhs) + trunc / N + c.lhs * rel_n;
  return c;
}

std::vector<ZeroRecord> multiplicity_detect(const std::vector<ZeroRecord>& zeros, double tol) {
  double widest = 0.0;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    widest = std::max(widest, zeros[i].bracket);
    if (i > 0 && zeros[i].ordinate < zeros[i - 1].ordinate)
      throw ConfigError("multiplicity_detect: zeros must be sorted");
  }
  if (!(tol >= 2.0 * widest) || !(tol > 0.0))
    throw ConfigError("multiplicity_detect: tolerance below the bracket resolution");

  std::vector<ZeroRecord> out;
  std::size_t i = 0;
  while (i < zeros.size()) {
    std::size_t j = i + 1;
    while (j < zeros.size() && zeros[j].ordinate - zeros[j - 1].ordinate < tol) ++j;
    ZeroRecord m;
    double sum = 0.0;
    for (std::size_t k = i; k < j; ++k) {
      sum += zeros[k].ordinate;
      m.multiplicity += k == i ? zeros[k].multiplicity - 1 : zeros[k].multiplicity;
      m.bracket = std::max(m.bracket, zeros[k].bracket);
    }
    m.ordinate = sum / static_cast<double>(j - i);
    m.bracket += (zeros[j - 1].ordinate - zeros[i].ordinate) / 2.0;
    out.push_back(m);
    i = j;
  }
  return out;
}

Family merge_multiplicities(const Family& family, double tol) {
  Family out = family;
  for (auto& m : out.moduli)
    for (auto& c : m.characters) c.scan.zeros = multiplicity_detect(c.scan.zeros, tol);
  return out;
}

SimpleZeroBound simple_zero_bound(const Family& family, const TestFunction& phi, const KernelSpec& spec, double tol) {
  SimpleZeroBound b;
  b.asymptotic = simple_zero_asymptotic(spec.alpha());
  const FamilySums sums(merge_multiplicities(family, tol), phi);
  const StatResult n = sums.n_phi();
  b.n_phi = n.value;
  if (n.value == 0.0) return b;
  const auto [K, trunc] = family_pair_sum(sums, spec.alpha());
  b.empirical = (2.0 * n.value - K) / n.value;

  std::vector<double> simple(sums.rows().size());
  for (std::size_t i = 0; i < sums.rows().size(); ++i) {
    const auto& r = sums.rows()[i];
    double s = 0.0;
    for (std::size_t k = 0; k < r.gamma.size(); ++k)
      if (r.mult[k] == 1.0) s += r.hat_re[k] * r.hat_re[k] + r.hat_im[k] * r.hat_im[k];
    simple[i] = r.weight * s;
  }
  b.simple_proportion = pairwise_sum(simple) / n.value;
  b.budget = (trunc + 2.0 * n.truncation_budget) / n.value + std::abs(b.empirical) * n.truncation_budget / n.value;
  return b;
}

}  // namespace lpair
