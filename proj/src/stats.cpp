#include "lpair/stats.hpp"

#include <boost/math/special_functions/expint.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>

#include "lpair/constants.hpp"
#include "lpair/error.hpp"
#include "lpair/kernels.hpp"
#include "lpair/parallel.hpp"
#include "lpair/quadrature.hpp"

namespace lpair {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

unsigned resolve_jobs(unsigned jobs) { return jobs == 0 ? default_jobs() : jobs; }

std::uint32_t totient_of(std::uint32_t n) {
  std::uint32_t r = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

// Integers n with n/X strictly inside the support of Φ.
std::pair<std::uint64_t, std::uint64_t> support_range(double X, const TestFunction& phi) {
  const double lo = phi.support_lo() * X;
  const double hi = phi.support_hi() * X;
  const auto first = static_cast<std::uint64_t>(std::max(1.0, std::floor(lo) + 1.0));
  const auto last = static_cast<std::uint64_t>(std::max(0.0, std::ceil(hi) - 1.0));
  return {first, last};
}

void require_table(const ArithmeticTables& t, std::uint64_t n, const char* who) {
  if (n > t.limit()) throw ConfigError(std::string(who) + ": sieve limit exceeded");
}

// Moduli q with W(q/Q) ≠ 0.
std::vector<std::uint32_t> weighted_moduli(double Q, const SmoothWeight& W) {
  std::vector<std::uint32_t> out;
  if (W.is_zero()) return out;
  const auto lo = static_cast<std::uint32_t>(std::max(1.0, std::ceil(Q * W.support_lo())));
  const auto hi = static_cast<std::uint32_t>(std::floor(Q * W.support_hi()));
  for (std::uint32_t q = lo; q <= hi; ++q)
    if (W(q / Q) != 0.0) out.push_back(q);
  return out;
}

double a0_constant() {
  static const double v = euler_product(ProductKind::A0, 1000000).corrected.real();
  return v;
}

std::uint32_t group_exponent(const CharacterGroup& g) {
  std::uint32_t l = 1;
  for (const auto& f : g.factors()) l = std::lcm(l, f.order);
  return l;
}

}  // namespace

void PairCorrConfig::validate() const {
  if (!(std::abs(alpha) <= 2.0)) throw ConfigError("PairCorrConfig: |alpha| must be at most 2");
  if (!(Q > 1.0)) throw ConfigError("PairCorrConfig: Q must exceed 1");
  if (!(T_max > 0.0)) throw ConfigError("PairCorrConfig: T_max must be positive");
}

std::string to_string(StatKind k) {
  switch (k) {
    case StatKind::N_phi: return "N_phi";
    case StatKind::F_phi: return "F_phi";
    case StatKind::S_total: return "S_total";
    case StatKind::S_diag: return "S_diag";
    case StatKind::S_offdiag: return "S_offdiag";
    case StatKind::M_bdh: return "M_bdh";
    case StatKind::prediction: return "prediction";
  }
  return "?";
}

// ---- prime sums --------------------------------------------------------------

cplx prime_sum(const ArithmeticTables& t, const DirichletCharacter& chi, double X, const TestFunction& phi,
               bool primes_only) {
  if (!(X > 0.0)) throw ConfigError("prime_sum: X must be positive");
  const auto [first, last] = support_range(X, phi);
  if (last < 2 || first > last) return {0.0, 0.0};
  require_table(t, last, "prime_sum");
  const double two_pi_over = 2.0 * std::numbers::pi / chi.order();
  cplx acc{0.0, 0.0};
  for (std::uint64_t n = std::max<std::uint64_t>(first, 2); n <= last; ++n) {
    const double lam = t.mangoldt(static_cast<std::uint32_t>(n));
    if (lam == 0.0) continue;
    if (primes_only && !t.is_prime(static_cast<std::uint32_t>(n))) continue;
    const std::int32_t k = chi.exponent(static_cast<std::int64_t>(n));
    if (k == DirichletCharacter::kNonUnit) continue;
    const double w = lam * phi(n / X) / std::sqrt(static_cast<double>(n));
    acc += std::polar(w, two_pi_over * k);
  }
  return acc;
}

PrimeWindow prime_window(const ArithmeticTables& t, double X, const TestFunction& phi) {
  PrimeWindow w;
  const auto [first, last] = support_range(X, phi);
  if (last < 2 || first > last) return w;
  require_table(t, last, "prime_window");
  for (const std::uint32_t p : t.primes()) {
    if (p < first) continue;
    if (p > last) break;
    const double a = std::log(static_cast<double>(p)) * phi(p / X) / std::sqrt(static_cast<double>(p));
    if (a == 0.0) continue;
    w.primes.push_back(p);
    w.a.push_back(a);
  }
  return w;
}

// ---- zero sums -----------------------------------------------------------------

double zero_sum_tail(std::uint32_t q, double T, const TestFunction& phi) {
  const double beta = phi.decay_exponent();
  const double c = phi.decay_constant();
  if (!(beta > 1.0)) throw ConfigError("zero_sum_tail: decay exponent must exceed 1");
  if (!(T >= 1.0)) throw ConfigError("zero_sum_tail: T must be at least 1");
  const double quoted = 2.0 * c * std::log(q * T) / std::pow(T, beta - 1.0);
  const double L = std::max(std::log(q * T / (2.0 * std::numbers::pi)), 0.0);
  const double density = c / std::numbers::pi * std::pow(T, 1.0 - beta) / (beta - 1.0) * (L + 1.0 / (beta - 1.0)) +
                         2.0 * c * std::pow(T, -beta) * zero_count_slack(q, T);
  return std::max(quoted, density);
}

double zero_sum_sq_tail(std::uint32_t q, double T, const TestFunction& phi) {
  const double beta2 = 2.0 * phi.decay_exponent();
  const double c2 = phi.decay_constant() * phi.decay_constant();
  if (!(beta2 > 1.0)) throw ConfigError("zero_sum_sq_tail: decay exponent must exceed 1/2");
  if (!(T >= 1.0)) throw ConfigError("zero_sum_sq_tail: T must be at least 1");
  const double L = std::max(std::log(q * T / (2.0 * std::numbers::pi)), 0.0);
  return c2 / std::numbers::pi * std::pow(T, 1.0 - beta2) / (beta2 - 1.0) * (L + 1.0 / (beta2 - 1.0)) +
         2.0 * c2 * std::pow(T, -beta2) * zero_count_slack(q, T);
}

ZeroSum zero_sum(std::uint32_t q, double X, const TestFunction& phi, const ZeroScan& scan, double T_max) {
  if (!scan.complete || scan.T < T_max) throw ConfigError("zero_sum: incomplete zero list");
  if (!(X > 0.0)) throw ConfigError("zero_sum: X must be positive");
  std::vector<double> gam, wre, wim;
  for (const auto& z : scan.zeros) {
    if (std::abs(z.ordinate) > T_max) continue;
    const cplx h = phi.transform_imag(z.ordinate) * static_cast<double>(z.multiplicity);
    gam.push_back(z.ordinate);
    wre.push_back(h.real());
    wim.push_back(h.imag());
  }
  const double lx = std::log(X);
  const cplx a = kernels::expsum(wre, gam, lx);
  const cplx b = kernels::expsum(wim, gam, lx);
  return {a + cplx(0.0, 1.0) * b, zero_sum_tail(q, T_max, phi)};
}

double archimedean_term(const TestFunction& phi, double X, int kappa) {
  if (!(X > 0.0)) throw ConfigError("archimedean_term: X must be positive");
  const double a = (0.5 + kappa) / 2.0;
  const double lx = std::log(X);
  const double llo = std::log(phi.support_lo());
  const double lhi = std::log(phi.support_hi());
  const double f1 = phi(1.0 / X);
  auto F = [&](double y) { return phi(y / X); };

  const double v_end = std::max({1.0, lx + lhi, -lx - llo}) + 1.0;
  const std::vector<double> bps{lx + llo, lx, lx + lhi, -lx - lhi, -lx, -lx - llo};
  auto integrand = [&](double v) {
    const double head = f1 * std::exp(-2.0 * v) / v;
    const double body = std::exp(-2.0 * a * v) * (F(std::exp(v)) + F(std::exp(-v))) / -std::expm1(-2.0 * v);
    return head - body;
  };
  const QuadResult r = integrate(integrand, 0.0, v_end, 1e-10, bps, 1.0);
  // Past v_end only the first term survives: ∫ f1 e^{−2v}/v = f1·E₁(2 v_end).
  return r.value + f1 * boost::math::expint(1, 2.0 * v_end);
}

WeilSide weil_side(const ArithmeticTables& t, const DirichletCharacter& chi, double X, const TestFunction& phi) {
  if (!(X > 0.0)) throw ConfigError("weil_side: X must be positive");
  const DirichletCharacter prim = chi.is_primitive() ? chi : chi.inducing_primitive();
  const std::uint32_t q = prim.modulus();
  WeilSide w;
  const double E = prim.is_principal() ? 1.0 : 0.0;
  w.pole = E * (phi.transform(0.5) * std::sqrt(X)).real();
  w.pole_dual = E * (phi.transform(-0.5) / std::sqrt(X)).real();
  w.prime = prime_sum(t, prim, X, phi);
  w.conductor = phi(1.0 / X) * std::log(q / std::numbers::pi);
  const double n_max = 1.0 / (X * phi.support_lo());
  const DirichletCharacter chib = prim.conjugate();
  const double two_pi_over = 2.0 * std::numbers::pi / chib.order();
  for (std::uint32_t n = 2; n < n_max; ++n) {
    require_table(t, n, "weil_side");
    const double lam = t.mangoldt(n);
    if (lam == 0.0) continue;
    const std::int32_t k = chib.exponent(n);
    if (k == DirichletCharacter::kNonUnit) continue;
    w.dual_prime += std::polar(lam * phi(1.0 / (n * X)) / std::sqrt(static_cast<double>(n)), two_pi_over * k);
  }
  w.archimedean = archimedean_term(phi, X, prim.parity());
  w.total = w.pole + w.pole_dual - w.prime - w.dual_prime + w.conductor + w.archimedean;
  return w;
}

ExplicitFormula explicit_formula(const ArithmeticTables& t, const LFunctionData& data, double X,
                                 const TestFunction& phi, const ZeroScan& scan, double T_max) {
  const std::uint32_t q = data.modulus();
  if (q > 20) throw ConfigError("explicit_formula: q outside the accuracy envelope (q <= 20)");
  if (!(X >= 1.0 && X <= 1000.0)) throw ConfigError("explicit_formula: X outside the accuracy envelope [1, 1000]");
  if (T_max < 500.0) throw ConfigError("explicit_formula: T_max below the accuracy envelope (>= 500)");

  const DirichletCharacter& chi = data.character();
  ExplicitFormula e;
  const ZeroSum zs = zero_sum(q, X, phi, scan, T_max);
  e.zero_side = zs.value;
  e.zero_tail = zs.tail;
  const double E = chi.is_principal() ? 1.0 : 0.0;
  e.pole = E * (phi.transform(0.5) * std::sqrt(X)).real();
  e.prime = prime_sum(t, chi, X, phi);
  e.conductor = phi(1.0 / X) * std::log(q / std::numbers::pi);
  e.lhs_minus_rhs = e.zero_side - (e.pole - e.prime + e.conductor);
  e.residual = std::abs(e.lhs_minus_rhs);

  const WeilSide w = weil_side(t, chi, X, phi);
  e.pole_dual = w.pole_dual;
  e.dual_prime = w.dual_prime;
  e.archimedean = w.archimedean;
  const cplx full = w.total;
  e.complete_residual = std::abs(e.zero_side - full);
  return e;
}

// ---- families ------------------------------------------------------------------

ZeroSource direct_zero_source(double grid_step, unsigned jobs) {
  const unsigned j = resolve_jobs(jobs);
  return [grid_step, j](std::uint32_t q, double T) { return scan_modulus(q, T, grid_step, j); };
}

Family build_family(double Q, const SmoothWeight& W, double T_max, const ZeroSource& source) {
  Family f;
  f.Q = Q;
  f.T_max = T_max;
  for (const std::uint32_t q : weighted_moduli(Q, W)) {
    FamilyModulus m;
    m.q = q;
    m.weight = W(q / Q) / totient_of(q);
    m.characters = source(q, T_max);
    for (const auto& c : m.characters)
      if (!c.scan.complete || c.scan.T < T_max)
        throw CacheError("build_family: zero list incomplete for q = " + std::to_string(q));
    f.moduli.push_back(std::move(m));
  }
  return f;
}

FamilySums::FamilySums(const Family& family, const TestFunction& phi, unsigned jobs)
    : Q_(family.Q), T_(family.T_max), jobs_(resolve_jobs(jobs)) {
  for (const auto& m : family.moduli) {
    const double sq_tail = zero_sum_sq_tail(m.q, T_, phi);
    const double l1_tail = zero_sum_tail(m.q, T_, phi);
    for (const auto& c : m.characters) {
      Row r;
      r.q = m.q;
      r.weight = m.weight;
      r.sq_tail = sq_tail;
      r.l1_tail = l1_tail;
      for (const auto& z : c.scan.zeros) {
        if (std::abs(z.ordinate) > T_) continue;
        const cplx h = phi.transform_imag(z.ordinate);
        r.gamma.push_back(z.ordinate);
        r.hat_re.push_back(z.multiplicity * h.real());
        r.hat_im.push_back(z.multiplicity * h.imag());
        r.mult.push_back(z.multiplicity);
        r.has_imag = r.has_imag || h.imag() != 0.0;
      }
      rows_.push_back(std::move(r));
    }
  }

  const auto t0 = Clock::now();
  std::vector<double> val(rows_.size()), bud(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Row& r = rows_[i];
    double s = 0.0;
    for (std::size_t k = 0; k < r.gamma.size(); ++k)
      s += (r.hat_re[k] * r.hat_re[k] + r.hat_im[k] * r.hat_im[k]) / r.mult[k];
    val[i] = r.weight * s;
    bud[i] = r.weight * r.sq_tail;
  }
  n_.kind = StatKind::N_phi;
  n_.value = pairwise_sum(val);
  n_.truncation_budget = pairwise_sum(bud);
  n_.Q = Q_;
  n_.T_max = T_;
  n_.wall_time = seconds_since(t0);
}

cplx FamilySums::inner(std::size_t row, double t) const {
  const Row& r = rows_.at(row);
  const cplx a = kernels::expsum(r.hat_re, r.gamma, t);
  if (!r.has_imag) return a;
  const cplx b = kernels::expsum(r.hat_im, r.gamma, t);
  return a + cplx(0.0, 1.0) * b;
}

StatResult FamilySums::n_phi() const { return n_; }

StatResult FamilySums::f_phi(double alpha) const {
  const auto t0 = Clock::now();
  StatResult res;
  res.kind = StatKind::F_phi;
  res.Q = Q_;
  res.alpha = alpha;
  res.T_max = T_;
  if (n_.value == 0.0) {
    res.wall_time = seconds_since(t0);
    return res;
  }
  const double t = alpha * std::log(Q_);
  std::vector<double> val(rows_.size()), bud(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const double s = std::abs(inner(i, t));
    const double d = rows_[i].l1_tail;
    val[i] = rows_[i].weight * s * s;
    bud[i] = rows_[i].weight * (2.0 * s * d + d * d);
  }
  const double num = pairwise_sum(val);
  res.value = num / n_.value;
  res.truncation_budget = pairwise_sum(bud) / n_.value + res.value * n_.truncation_budget / n_.value;
  res.wall_time = seconds_since(t0);
  return res;
}

StatResult n_phi(const PairCorrConfig& cfg, const Family& family) {
  cfg.validate();
  StatResult r = FamilySums(family, cfg.phi).n_phi();
  r.alpha = cfg.alpha;
  return r;
}

StatResult f_phi(const PairCorrConfig& cfg, const Family& family) {
  cfg.validate();
  return FamilySums(family, cfg.phi).f_phi(cfg.alpha);
}

// ---- predictions -----------------------------------------------------------------

double f_alpha(double alpha) { return std::min(std::abs(alpha), 1.0); }

Prediction pair_correlation_prediction(const PairCorrConfig& cfg) {
  cfg.validate();
  Prediction p;
  const double x = std::pow(cfg.Q, -std::abs(cfg.alpha));
  const double ph = cfg.phi(x);
  const double f = f_alpha(cfg.alpha);
  const double logQ = std::log(cfg.Q);
  p.result.kind = StatKind::prediction;
  p.result.Q = cfg.Q;
  p.result.alpha = cfg.alpha;
  p.result.value = ph == 0.0 ? f : f + ph * ph * logQ / cfg.phi.hat_l2();
  p.band = std::abs(ph) * std::sqrt(f * logQ);
  p.result.note = "band uses implied constant 1, which is a guess";
  return p;
}

// ---- S = S_D + S_N -------------------------------------------------------------

namespace {

struct ModulusTerm {
  std::uint32_t q;
  double weight;                  // W(q/Q)/φ(q)
  std::vector<std::uint32_t> d;   // divisors with μ(q/d) ≠ 0
  std::vector<double> coef;       // φ(d)μ(q/d)
};

struct OffDiagonalRow {
  const PrimeWindow* win;
  const std::vector<ModulusTerm>* terms;
  std::vector<double>* row;
  std::vector<double>* diag;

  double delta(std::uint32_t p, std::uint32_t r) const {
    const std::uint32_t diff = p > r ? p - r : r - p;
    double total = 0.0;
    for (const auto& m : *terms) {
      if (m.q % p == 0 || m.q % r == 0) continue;
      double inner = 0.0;
      for (std::size_t k = 0; k < m.d.size(); ++k)
        if (diff % m.d[k] == 0) inner += m.coef[k];
      total += m.weight * inner;
    }
    return total;
  }

  void operator()(std::size_t i) const {
    const auto& P = win->primes;
    const auto& a = win->a;
    const double dii = a[i] * a[i] * delta(P[i], P[i]);
    double off = 0.0;
    for (std::size_t j = i + 1; j < P.size(); ++j) off += a[j] * delta(P[i], P[j]);
    (*diag)[i] = dii;
    (*row)[i] = dii + 2.0 * a[i] * off;
  }
};

struct CharacterRoute {
  const PrimeWindow* win;
  const std::vector<ModulusTerm>* terms;
  std::vector<double>* out;

  void operator()(std::size_t i) const {
    const ModulusTerm& m = (*terms)[i];
    const CharacterGroup g(m.q);
    const std::uint32_t lam = group_exponent(g);
    std::vector<double> c(lam), s(lam);
    for (std::uint32_t k = 0; k < lam; ++k) {
      c[k] = std::cos(2.0 * std::numbers::pi * k / lam);
      s[k] = std::sin(2.0 * std::numbers::pi * k / lam);
    }
    double acc = 0.0;
    for (const auto& chi : g.characters()) {
      if (!chi.is_primitive()) continue;
      const std::uint32_t step = lam / chi.order();
      double re = 0.0, im = 0.0;
      for (std::size_t j = 0; j < win->primes.size(); ++j) {
        const std::int32_t k = chi.exponent(win->primes[j]);
        if (k == DirichletCharacter::kNonUnit) continue;
        const std::uint32_t idx = static_cast<std::uint32_t>(k) * step;
        re += win->a[j] * c[idx];
        im += win->a[j] * s[idx];
      }
      acc += re * re + im * im;
    }
    (*out)[i] = m.weight * acc;
  }
};

}  // namespace

SDecomposition s_decomposition(const ArithmeticTables& t, const PairCorrConfig& cfg, bool character_route,
                               unsigned jobs) {
  cfg.validate();
  const auto t0 = Clock::now();
  const unsigned nj = resolve_jobs(jobs);
  const double X = std::pow(cfg.Q, cfg.alpha);
  if (2.0 * cfg.Q > t.limit()) throw ConfigError("s_decomposition: 2Q exceeds the sieve limit");
  const PrimeWindow win = prime_window(t, X, cfg.phi);

  std::vector<ModulusTerm> terms;
  for (const std::uint32_t q : weighted_moduli(cfg.Q, cfg.W)) {
    ModulusTerm m{q, cfg.W(q / cfg.Q) / t.totient(q), {}, {}};
    for (const std::uint32_t d : t.divisors(q)) {
      const int mu = t.moebius(q / d);
      if (mu == 0) continue;
      m.d.push_back(d);
      m.coef.push_back(static_cast<double>(t.totient(d)) * mu);
    }
    terms.push_back(std::move(m));
  }

  std::vector<double> row(win.primes.size()), diag(win.primes.size());
  parallel_for(win.primes.size(), nj, OffDiagonalRow{&win, &terms, &row, &diag});

  SDecomposition out;
  auto fill = [&](StatResult& r, StatKind k, double v) {
    r.kind = k;
    r.value = v;
    r.Q = cfg.Q;
    r.alpha = cfg.alpha;
  };
  const double total = pairwise_sum(row);
  const double d = pairwise_sum(diag);
  fill(out.total, StatKind::S_total, total);
  fill(out.diagonal, StatKind::S_diag, d);
  fill(out.offdiagonal, StatKind::S_offdiag, total - d);

  if (character_route) {
    std::vector<double> per_q(terms.size());
    parallel_for(terms.size(), nj, CharacterRoute{&win, &terms, &per_q});
    out.route_i = pairwise_sum(per_q);
    out.route_i_computed = true;
    const double scale = std::max(std::abs(total), std::abs(out.route_i));
    check(std::abs(total - out.route_i) <= 1e-6 * scale,
          "s_decomposition: character route and Delta route disagree");
  }
  const double wall = seconds_since(t0);
  out.total.wall_time = out.diagonal.wall_time = out.offdiagonal.wall_time = wall;
  return out;
}

double s_diag_main_term(const PairCorrConfig& cfg) {
  cfg.validate();
  const double X = std::pow(cfg.Q, cfg.alpha);
  return cfg.W.hat_at_one() * a0_constant() * cfg.Q * std::log(X) * cfg.phi.hat_l2();
}

double prime_square_discrepancy(const ArithmeticTables& t, double X, const TestFunction& phi) {
  const PrimeWindow w = prime_window(t, X, phi);
  std::vector<double> terms(w.primes.size());
  for (std::size_t i = 0; i < w.primes.size(); ++i) {
    const double lp = std::log(static_cast<double>(w.primes[i]));
    const double v = phi(w.primes[i] / X);
    terms[i] = lp * lp * v * v / w.primes[i];
  }
  return pairwise_sum(terms) - phi.hat_l2() * std::log(X);
}

PrimeMellinCheck prime_mellin_check(const ArithmeticTables& t, double X, const TestFunction& phi, cplx s, cplx z) {
  const PrimeWindow w = prime_window(t, X, phi);
  PrimeMellinCheck c;
  for (std::size_t i = 0; i < w.primes.size(); ++i) {
    const double p = w.primes[i];
    const BsRs br = bsm_rsm(-s, w.primes[i]);
    c.lhs += std::log(p) * phi(p / X) * br.B * br.R * std::pow(p, -(0.5 + z));
  }
  c.rhs = phi.transform(0.5 - z) * std::pow(X, 0.5 - z);
  return c;
}

// ---- progressions ------------------------------------------------------------------

namespace {

struct BdhJob {
  const ArithmeticTables* t;
  std::uint32_t x;
  std::vector<double>* out;

  void operator()(std::size_t i) const {
    const auto q = static_cast<std::uint32_t>(i + 1);
    std::vector<double> psi(q, 0.0);
    const auto lam = t->mangoldt_table();
    for (std::uint32_t n = 2; n <= x; ++n)
      if (lam[n] != 0.0) psi[n % q] += lam[n];
    const double mean = static_cast<double>(x) / t->totient(q);
    double acc = 0.0;
    for (std::uint32_t a = 0; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const double e = psi[a] - mean;
      acc += e * e;
    }
    (*out)[i] = acc;
  }
};

}  // namespace

StatResult bdh_variance(const ArithmeticTables& t, std::uint32_t x, std::uint32_t Q, unsigned jobs) {
  if (Q == 0) throw ConfigError("bdh_variance: Q must be positive");
  require_table(t, std::max(x, Q), "bdh_variance");
  const auto t0 = Clock::now();
  std::vector<double> per_q(Q);
  parallel_for(Q, resolve_jobs(jobs), BdhJob{&t, x, &per_q});
  StatResult r;
  r.kind = StatKind::M_bdh;
  r.value = pairwise_sum(per_q);
  r.Q = Q;
  r.wall_time = seconds_since(t0);
  return r;
}

}  // namespace lpair
