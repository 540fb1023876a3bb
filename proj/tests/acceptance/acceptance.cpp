// End-to-end acceptance checks. `acceptance --criterion N` runs one
// criterion and prints a PASS/FAIL line per sub-check; the exit status is
// nonzero if any sub-check failed. Without --criterion all eight run.

#include <CLI11.hpp>

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>

#include "lpair/arith.hpp"
#include "lpair/characters.hpp"
#include "lpair/constants.hpp"
#include "lpair/lfun.hpp"
#include "lpair/simplezeros.hpp"
#include "lpair/stats.hpp"
#include "lpair/testfn.hpp"

using namespace lpair;

namespace {

int failures = 0;

void report(int criterion, bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4)));

void report(int criterion, bool ok, const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, buf);
  std::fflush(stdout);
  if (!ok) ++failures;
}

void info(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

void info(const char* fmt, ...) {
  va_list ap;
  va_start(ap, fmt);
  std::printf("       ");
  std::vprintf(fmt, ap);
  std::printf("\n");
  va_end(ap);
  std::fflush(stdout);
}

// ---- 1: exact identities ---------------------------------------------------

void criterion1() {
  const ArithmeticTables t(2000);
  double worst = 0.0;
  long cases = 0;
  for (std::uint32_t q = 1; q <= 50; ++q) {
    const CharacterGroup g(q);
    for (auto p : t.primes()) {
      if (p > 100) break;
      if (q % p == 0) continue;
      for (auto r : t.primes()) {
        if (r > 100) break;
        if (q % r == 0) continue;
        const auto s = primitive_orthogonality_sum(t, g, p, r);
        worst = std::max(worst, std::abs(s.direct - s.divisor));
        ++cases;
      }
    }
  }
  report(1, worst < 1e-9, "primitive orthogonality, q <= 50, primes p,r <= 100: %ld cases, max deviation %.2e", cases,
         worst);

  std::mt19937_64 rng(20240601);
  const auto primes = t.primes();
  std::uniform_int_distribution<std::size_t> pick(0, 60);  // primes up to 283
  std::uniform_real_distribution<double> qd(1.0, 500.0), cd(0.0, 1.0);
  const auto W = SmoothWeight::bump();
  double split_worst = 0.0, flip_worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const std::uint64_t p = primes[pick(rng)], r = primes[pick(rng)];
    const double Q = qd(rng);
    const double C = cd(rng) * 2.2 * Q;
    const auto s = delta_split(t, p, r, Q, W, C);
    split_worst = std::max(split_worst, std::abs(s.upper + s.lower - delta_pr(t, p, r, Q, W)));
    const auto f = moebius_flip(t, p, r, Q, W, C);
    flip_worst = std::max(flip_worst, std::abs(f.upper + f.lower));
  }
  report(1, split_worst < 1e-9, "Delta = U + L on 200 random (p,r,Q<=500,C): max deviation %.2e", split_worst);
  report(1, flip_worst < 1e-9, "Moebius flip on the same samples: max |upper + lower| %.2e", flip_worst);
}

// ---- 2: L-function correctness --------------------------------------------

void criterion2() {
  double fe = 0.0, gauss = 0.0;
  int chars = 0, count_ok = 0;
  double worst_count = 0.0;
  for (std::uint32_t q = 1; q <= 20; ++q) {
    for (const auto& c : CharacterGroup(q).primitive_characters()) {
      const LFunctionData d(c);
      for (int k = -60; k <= 60; ++k) fe = std::max(fe, functional_equation_residual(d, 0.5 * k));
      gauss = std::max(gauss, std::abs(std::norm(d.gauss_sum()) - q));
      const auto s = find_zeros(d, 100.0);
      const double diff = std::abs(double(s.zeros.size()) - zero_count_main_term(q, 100.0));
      const double slack = zero_count_slack(q, 100.0);
      worst_count = std::max(worst_count, diff / slack);
      count_ok += diff <= slack;
      ++chars;
    }
  }
  report(2, fe < 1e-8, "functional equation, %d primitive characters q <= 20, |t| <= 30: max relative residual %.2e",
         chars, fe);
  report(2, gauss < 1e-9, "|tau|^2 = q: max deviation %.2e", gauss);
  report(2, count_ok == chars, "zero counts to T = 100 within 2 + 2 log(qT) of the main term: %d/%d (worst %.2f of slack)",
         count_ok, chars, worst_count);

  const auto z = find_zeros(LFunctionData(CharacterGroup(1).characters()[0]), 30.0);
  const double expect[] = {14.1347, 21.0220, 25.0109};
  bool ok = z.zeros.size() == 6;
  for (int k = 0; ok && k < 3; ++k) ok = std::abs(z.zeros[3 + k].ordinate - expect[k]) < 1e-3;
  report(2, ok, "zeta ordinates %.6f %.6f %.6f", z.zeros.size() > 5 ? z.zeros[3].ordinate : NAN,
         z.zeros.size() > 5 ? z.zeros[4].ordinate : NAN, z.zeros.size() > 5 ? z.zeros[5].ordinate : NAN);
}

// ---- 3: explicit formula -----------------------------------------------------

void criterion3() {
  const ArithmeticTables t(100000);
  const auto phi = TestFunction::sinc_squared();
  double worst = 0.0, worst_complete = 0.0;
  int n = 0, ok = 0;
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u}) {
    for (const auto& cz : scan_modulus(q, 500.0, 0.05, 0)) {
      const LFunctionData d(cz.chi);
      for (double X : {2.0, 5.0, 10.0}) {
        const auto e = explicit_formula(t, d, X, phi, cz.scan, 500.0);
        worst = std::max(worst, e.residual);
        worst_complete = std::max(worst_complete, e.complete_residual);
        ok += e.residual < 0.05;
        ++n;
        info("q=%u chi=%u X=%-4g residual %.4f  archimedean %+.4f  complete residual %.1e", q, cz.chi.index(), X,
             e.residual, e.archimedean, e.complete_residual);
      }
    }
  }
  report(3, ok == n, "three-term explicit formula residual < 0.05: %d/%d, max %.4f", ok, n, worst);
  info("with the Gamma-factor and dual terms restored the max residual is %.1e", worst_complete);
}

// ---- 4: constants --------------------------------------------------------------

void criterion4() {
  const auto oz = ozluk_constant();
  report(4, std::abs(oz.value - 0.86883781) <= 1e-6, "Ozluk constant %.8f (target 0.86883781, bound %.1e)", oz.value,
         oz.bound);

  struct Case {
    std::uint64_t a, m;
    double s;
  };
  for (const Case c : {Case{1, 1, 1.0}, Case{3, 2, 1.0}, Case{2, 15, 0.5}}) {
    const auto r = sum_varphi_identity_check(c.a, c.m, c.s, 1000000);
    const double dev = std::abs(r.lhs_extrapolated - r.rhs);
    report(4, dev < 1e-4, "sum 1/(phi(ad)d^s) identity (a,m,s)=(%llu,%llu,%g), N=1e6: |lhs - rhs| %.2e (raw partial %.2e)",
           static_cast<unsigned long long>(c.a), static_cast<unsigned long long>(c.m), c.s, dev,
           std::abs(r.lhs - r.rhs));
  }

  double worst = 0.0;
  for (double x : {-0.1, -0.3, -0.5, -0.8})
    for (double y : {-3.0, 0.0, 1.0, 5.0}) {
      const auto k = k_minus_factorization(cplx(x, y));
      worst = std::max(worst, std::abs(k.lhs - k.rhs));
    }
  report(4, worst < 1e-8, "K(-s) factorization on a 16-point grid with Re s <= -0.1: max deviation %.2e", worst);
}

// ---- 5: test functions ---------------------------------------------------------

void criterion5() {
  double worst = 0.0;
  for (int k = -200; k <= 200; ++k) {
    const double x = 0.25 * k;
    const cplx m = mellin_numeric(phi_sinc, std::exp(-2.0), std::exp(2.0), cplx(0.0, x), {1.0});
    worst = std::max(worst, std::abs(m - phi_hat_sinc(cplx(0.0, x))));
  }
  report(5, worst < 1e-8, "Mellin pair, |x| <= 50 on a 0.25 grid: max deviation %.2e", worst);
  const auto p = plancherel_check(TestFunction::sinc_squared());
  report(5, std::abs(p.lhs - 1.0 / 3.0) <= 1e-6 && std::abs(p.rhs - 1.0 / 3.0) <= 1e-6,
         "Plancherel: lhs %.10f, rhs %.10f (target 1/3)", p.lhs, p.rhs);
  const double s4 = sinc4_integral();
  report(5, std::abs(s4 - 2.0 * M_PI / 3.0) <= 1e-8, "integral of (sin x/x)^4 = %.12f (2pi/3 = %.12f)", s4,
         2.0 * M_PI / 3.0);
}

// ---- 6: kernel machinery ------------------------------------------------------

void criterion6() {
  const auto phi = TestFunction::sinc_squared();
  for (double a : {1.1, 1.5, 1.9, 1.999}) {
    const double d = std::abs(kernel_integral_f(a) - kernel_integral_f_quadrature(a));
    report(6, d < 1e-10, "closed form vs quadrature at alpha=%g: %.2e", a, d);
  }
  for (double a : {1.2, 1.5, 1.9}) {
    const double total = kernel_integral_f(a) + phi_term_integral(a, 1e6, phi);
    const double target = 1.0 + 1.0 / (3.0 * a * a);
    const double rel = total / target - 1.0;
    report(6, std::abs(rel) < 0.02, "combined integral at Q=1e6, alpha=%g: %.6f vs %.6f (%.2f%%)", a, total, target,
           100.0 * rel);
  }
  const double b = simple_zero_asymptotic(2.0), b2 = simple_zero_asymptotic(1.999);
  report(6, std::abs(b - 11.0 / 12.0) < 1e-15 && std::abs(b2 - 11.0 / 12.0) < 1e-3,
         "asymptotic bound at alpha=2: %.12f, at 1.999: %.6f (11/12 = %.12f)", b, b2, 11.0 / 12.0);
}

// ---- 7: desk-scale asymptotics -------------------------------------------------

void criterion7() {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  PairCorrConfig cfg;
  cfg.Q = 25.0;
  cfg.T_max = 200.0;
  const Family fam = build_family(cfg.Q, cfg.W, cfg.T_max, direct_zero_source(0.05, 0));
  const FamilySums sums(fam, cfg.phi);
  info("family Q=25: %zu moduli, built in %.1f s", fam.moduli.size(),
       std::chrono::duration<double>(Clock::now() - t0).count());

  const auto n = sums.n_phi();
  const double asym = cfg.W.hat_at_one() * euler_product(ProductKind::A0, 1000000).corrected.real() * cfg.Q *
                      std::log(cfg.Q) * cfg.phi.hat_l2();
  report(7, std::abs(n.value / asym - 1.0) <= 0.30, "N_phi(25) = %.6f (budget %.1e) vs asymptotic %.6f: ratio %.3f",
         n.value, n.truncation_budget, asym, n.value / asym);

  for (double a : {0.25, 0.5, 0.75}) {
    cfg.alpha = a;
    const auto f = sums.f_phi(a);
    const auto p = pair_correlation_prediction(cfg);
    report(7, std::abs(f.value / p.result.value - 1.0) <= 0.35,
           "F_phi(25, %.2f) = %.4f (budget %.3f) vs prediction %.4f (band %.3f): ratio %.3f", a, f.value,
           f.truncation_budget, p.result.value, p.band, f.value / p.result.value);
  }

  const ArithmeticTables t(20000);
  PairCorrConfig sc;
  sc.Q = 1000.0;
  sc.alpha = 0.8;
  const auto s = s_decomposition(t, sc, true, 0);
  const double main = s_diag_main_term(sc);
  report(7, std::abs(s.diagonal.value / main - 1.0) <= 0.30,
         "S_D at Q=1000, X=Q^0.8: %.4f vs main term %.4f, ratio %.3f (S = %.4f, S_N = %.4f, routes agree)",
         s.diagonal.value, main, s.diagonal.value / main, s.total.value, s.offdiagonal.value);

  const auto pc = pairing_identity_check(sums, KernelSpec(1.2));
  report(7, std::abs(pc.lhs - pc.rhs) < pc.budget,
         "pairing identity at Q=25, alpha=1.2: lhs %.10f, rhs %.10f, |diff| %.1e < budget %.2e (refined rhs %.10f)",
         pc.lhs, pc.rhs, std::abs(pc.lhs - pc.rhs), pc.budget, pc.rhs_refined);
  info("total %.1f s", std::chrono::duration<double>(Clock::now() - t0).count());
}

// ---- 8: BDH variance -----------------------------------------------------------

void criterion8() {
  const ArithmeticTables t(20000);
  const auto m = bdh_variance(t, 10000, 1000, 0);
  const double norm = 1e4 * 1e3 * std::log(1e4);
  report(8, m.value / norm >= 0.5 && m.value / norm <= 1.5, "M(1e4, 1e3)/(xQ log x) = %.4f", m.value / norm);

  double psi = 0.0;
  for (std::uint32_t n = 2; n <= 100; ++n) psi += t.mangoldt(n);
  const double spot = bdh_variance(t, 100, 1).value;
  const double expect = (psi - 100.0) * (psi - 100.0);
  // 35.45831835521714 from an independent sum of log p over prime powers
  report(8, std::abs(spot - expect) <= 1e-9 && std::abs(spot - 35.45831835521714) <= 1e-9,
         "M(100, 1) = %.12f, (psi(100) - 100)^2 = %.12f", spot, expect);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int criterion = 0;
  app.add_option("--criterion", criterion, "criterion number 1-8 (default: all)")->check(CLI::Range(0, 8));
  CLI11_PARSE(app, argc, argv);

  void (*const runs[])() = {criterion1, criterion2, criterion3, criterion4,
                            criterion5, criterion6, criterion7, criterion8};
  try {
    for (int k = 1; k <= 8; ++k)
      if (criterion == 0 || criterion == k) runs[k - 1]();
  } catch (const std::exception& e) {
    std::printf("[FAIL] criterion %d: exception: %s\n", criterion, e.what());
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
