#include "lpair/constants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include "lpair/error.hpp"
#include "lpair/parallel.hpp"

namespace lpair {
namespace {

constexpr double kRosserSchoenfeld = 1.25506;
constexpr double kEulerGamma = 0.57721566490153286061;

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::uint32_t> totients_up_to(std::uint64_t n) {
  std::vector<std::uint32_t> phi(n + 1);
  std::iota(phi.begin(), phi.end(), 0u);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (phi[i] != i) continue;  // already reduced: composite
    for (std::uint64_t j = i; j <= n; j += i) phi[j] -= phi[j] / static_cast<std::uint32_t>(i);
  }
  return phi;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    out.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) out.push_back(m);
  return out;
}

int moebius_small(std::uint64_t m) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return 0;
    mu = -mu;
  }
  if (m > 1) mu = -mu;
  return mu;
}

cplx ppow(double p, cplx z) { return std::exp(-z * std::log(p)); }  // p^{−z}

// Generalized power series Σ c·p^{−e}.
struct Term {
  cplx e;
  cplx c;
};
using Series = std::vector<Term>;

void add_term(Series& s, cplx e, cplx c) {
  for (auto& t : s)
    if (std::abs(t.e - e) < 1e-12) {
      t.c += c;
      return;
    }
  s.push_back({e, c});
}

Series multiply(const Series& a, const Series& b, double emax) {
  Series out;
  for (const auto& x : a)
    for (const auto& y : b)
      if ((x.e + y.e).real() <= emax) add_term(out, x.e + y.e, x.c * y.c);
  return out;
}

// log(1 + y) as a series, exponents with real part above emax dropped.
Series log1p_series(const Series& y, double emax) {
  Series out;
  Series power;
  for (const auto& t : y)
    if (t.e.real() <= emax) power.push_back(t);
  for (int m = 1; !power.empty(); ++m) {
    const double sign = (m % 2) ? 1.0 : -1.0;
    for (const auto& t : power) add_term(out, t.e, sign * t.c / static_cast<double>(m));
    power = multiply(power, y, emax);
  }
  return out;
}

// 1/(p−1)·p^{−z} = Σ_{j≥1} p^{−(z+j)}.
void add_geometric(Series& s, cplx z, cplx c, double emax) {
  for (int j = 1; (z + static_cast<double>(j)).real() <= emax; ++j) add_term(s, z + static_cast<double>(j), c);
}

struct ProductSpec {
  std::function<cplx(double)> factor;  // f(p)
  Series y;                            // f(p) − 1 expanded
  double theta;                        // leading decay: |f(p) − 1| ≤ c0·p^{−θ}
  double c0;
};

ProductSpec make_spec(ProductKind kind, cplx s, double emax_offset) {
  ProductSpec spec;
  switch (kind) {
    case ProductKind::A0: {
      spec.factor = [](double p) { return cplx(1.0 - 1.0 / (p * p) - 1.0 / (p * p * p), 0.0); };
      spec.theta = 2.0;
      spec.c0 = 4.0 / 3.0;
      const double emax = spec.theta + emax_offset;
      add_term(spec.y, 2.0, -1.0);
      add_term(spec.y, 3.0, -1.0);
      (void)emax;
      break;
    }
    case ProductKind::K: {
      if (!(s.real() > -1.0)) throw ConfigError("K(s): requires Re s > -1");
      spec.factor = [s](double p) { return 1.0 + ppow(p, s + 1.0) / (p - 1.0); };
      spec.theta = s.real() + 2.0;
      spec.c0 = 1.5;
      add_geometric(spec.y, s + 1.0, 1.0, spec.theta + emax_offset);
      break;
    }
    case ProductKind::g: {
      if (!(s.real() > 0.0)) throw ConfigError("g(s): requires Re s > 0");
      spec.factor = [s](double p) {
        return 1.0 - ppow(p, s) / (p - 1.0) + ppow(p, 2.0 * s) / (p - 1.0) - ppow(p, 2.0 * s + 1.0);
      };
      spec.theta = s.real() + 1.0;
      spec.c0 = 4.0;
      const double emax = spec.theta + emax_offset;
      add_geometric(spec.y, s, -1.0, emax);
      add_geometric(spec.y, 2.0 * s, 1.0, emax);
      add_term(spec.y, 2.0 * s + 1.0, -1.0);
      break;
    }
    case ProductKind::K_minus: {
      if (!(s.real() < 1.0)) throw ConfigError("K(-s) factor product: requires Re s < 1");
      spec.factor = [s](double p) {
        return 1.0 + ppow(p, 2.0 - s) / (p - 1.0) - ppow(p, 3.0 - 2.0 * s) / (p - 1.0);
      };
      spec.theta = 3.0 - s.real();
      spec.c0 = 3.0;
      const double emax = spec.theta + emax_offset;
      add_geometric(spec.y, 2.0 - s, 1.0, emax);
      add_geometric(spec.y, 3.0 - 2.0 * s, -1.0, emax);
      break;
    }
  }
  // Drop exact cancellations (the g(s) expansion has one at 2s + 1).
  std::erase_if(spec.y, [](const Term& t) { return std::abs(t.c) < 1e-300; });
  return spec;
}

}  // namespace

std::string to_string(ProductKind k) {
  switch (k) {
    case ProductKind::A0: return "A0";
    case ProductKind::K: return "K";
    case ProductKind::g: return "g";
    case ProductKind::K_minus: return "K_minus_factor";
  }
  return "?";
}

double prime_tail_bound(double theta, double P) {
  if (!(theta > 1.0)) return std::numeric_limits<double>::infinity();
  if (!(P >= 2.0)) throw ConfigError("prime_tail_bound: P must be at least 2");
  return kRosserSchoenfeld * theta * std::pow(P, 1.0 - theta) / ((theta - 1.0) * std::log(P));
}

cplx prime_zeta(cplx e) {
  if (!(e.real() >= 1.75)) throw ConfigError("prime_zeta: requires Re e >= 1.75");
  cplx total;
  for (int m = 1;; ++m) {
    const double re = m * e.real();
    if (std::pow(2.0, -re) < 1e-20) break;
    const int mu = moebius_small(static_cast<std::uint64_t>(m));
    if (mu == 0) continue;
    const cplx z = static_cast<double>(m) * e;
    const cplx zeta_minus_one = hurwitz_zeta_tail(z, 1.0);
    total += static_cast<double>(mu) / m * std::log(1.0 + zeta_minus_one);
  }
  return total;
}

EulerProductValue euler_product(ProductKind kind, std::uint32_t P, cplx s) {
  if (P < 2) throw ConfigError("euler_product: truncation prime must be at least 2");
  constexpr double kOrders = 12.0;
  const ProductSpec spec = make_spec(kind, s, kOrders);
  const auto primes = primes_up_to(P);

  EulerProductValue out;
  out.kind = kind;
  out.s = s;
  out.truncation_prime = primes.back();

  // Product as a sum of logs, reduced pairwise for a fixed rounding pattern.
  std::vector<cplx> logs(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) logs[i] = std::log(spec.factor(primes[i]));
  out.value = std::exp(pairwise_sum(logs));

  const double Pd = static_cast<double>(P);
  const double ymax = spec.c0 * std::pow(Pd + 1.0, -spec.theta);
  const double c = ymax < 1.0 ? spec.c0 / (1.0 - ymax) : std::numeric_limits<double>::infinity();
  out.tail_bound = c * prime_tail_bound(spec.theta, Pd);

  double min_e = std::numeric_limits<double>::infinity();
  for (const auto& t : spec.y) min_e = std::min(min_e, t.e.real());
  if (min_e < 1.75 || !std::isfinite(c)) {
    out.corrected = out.value;
    out.corrected_bound = out.tail_bound;
    return out;
  }

  const Series lg = log1p_series(spec.y, spec.theta + kOrders);
  cplx tail;
  std::vector<cplx> terms(primes.size());
  for (const auto& t : lg) {
    for (std::size_t i = 0; i < primes.size(); ++i) terms[i] = ppow(primes[i], t.e);
    tail += t.c * (prime_zeta(t.e) - pairwise_sum(terms));
  }
  out.corrected = out.value * std::exp(tail);
  // Dropped orders sit beyond θ + 12; the factor 10³ covers the number and
  // size of dropped coefficients, and 5e-13 the prime zeta round-off seen between truncations.
  out.corrected_bound = 1e3 * c * prime_tail_bound(spec.theta + kOrders, Pd) + 5e-13;
  return out;
}

BsRs bsm_rsm(cplx s, std::uint64_t m) {
  if (m == 0) throw ConfigError("bsm_rsm: m must be positive");
  BsRs out{1.0, 1.0};
  for (const std::uint64_t p : prime_divisors(m)) {
    const double pd = static_cast<double>(p);
    out.B *= 1.0 - ppow(pd, s + 1.0);
    const cplx den = 1.0 + ppow(pd, s + 1.0) / (pd - 1.0);
    if (std::abs(den) < 1e-300) throw NumericalError("bsm_rsm: vanishing R factor");
    out.R /= den;
  }
  return out;
}

SeriesIdentity sum_varphi_identity_check(std::uint64_t a, std::uint64_t m, cplx s, std::uint32_t N,
                                         std::uint32_t P) {
  if (a == 0 || m == 0) throw ConfigError("sum_varphi_identity_check: a, m must be positive");
  if (std::gcd(a, m) != 1) throw ConfigError("sum_varphi_identity_check: gcd(a, m) > 1");
  if (!(s.real() > 0.0)) throw ConfigError("sum_varphi_identity_check: requires Re s > 0");
  if (N < 4) throw ConfigError("sum_varphi_identity_check: N must be at least 4");
  const auto phi = totients_up_to(a * N);

  auto partial = [&](std::uint32_t n) {
    std::vector<cplx> terms;
    terms.reserve(n);
    for (std::uint64_t d = 1; d <= n; ++d)
      if (std::gcd(d, m) == 1) terms.push_back(ppow(static_cast<double>(d), s) / static_cast<double>(phi[a * d]));
    return pairwise_sum(terms);
  };

  SeriesIdentity out;
  out.lhs = partial(N);
  // Tail ~ κ N^{−s}/s, so S(N) − S(N/4) ≈ tail(N)·(4^s − 1).
  const cplx quarter = partial(N / 4);
  const cplx ratio = std::exp(s * std::log(static_cast<double>(N) / (N / 4))) - 1.0;
  out.lhs_extrapolated = out.lhs + (out.lhs - quarter) / ratio;

  const auto ka = euler_product(ProductKind::K, P, s);
  const auto bm = bsm_rsm(s, m);
  const auto ra = bsm_rsm(s, a);
  const double phia = static_cast<double>(phi[a]);
  out.rhs = hurwitz_zeta(1.0 + s, 1.0) * ka.corrected * bm.B * ra.R * bm.R / phia;
  return out;
}

InverseTotientSeries inverse_totient_series(std::uint32_t D) {
  if (D < 1) throw ConfigError("inverse_totient_series: cutoff must be positive");
  // The n/φ(n) bound needs log log n > 0, so below 16 the tail is the exact
  // terms up to 16 plus the analytic bound from there.
  const std::uint32_t B = std::max<std::uint32_t>(D, 16);
  const auto phi = totients_up_to(B);
  // Neumaier-compensated sum.
  double sum = 0.0;
  double comp = 0.0;
  double gap = 0.0;
  for (std::uint64_t d = 1; d <= B; ++d) {
    const double x = 1.0 / (static_cast<double>(d) * phi[d]);
    if (d > D) {
      gap += x;
      continue;
    }
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  InverseTotientSeries out;
  out.cutoff = D;
  out.partial = sum + comp;
  const double z2 = std::numbers::pi * std::numbers::pi / 6.0;
  const double z3 = 1.0 + hurwitz_zeta_tail(3.0, 1.0).real();
  const double z6 = std::pow(std::numbers::pi, 6) / 945.0;
  const double Bd = static_cast<double>(B);
  out.value = out.partial + gap + z2 * z3 / z6 / Bd;
  const double ll = std::log(std::log(Bd));
  const double f = std::exp(kEulerGamma) * ll + 2.50637 / ll;
  out.tail_bound = gap + (std::exp(kEulerGamma) * (ll + 1.0 / std::log(Bd)) + 2.50637 / ll) / Bd + f / (Bd * Bd);
  return out;
}

OzlukValue ozluk_constant(std::uint32_t D, std::uint32_t P) {
  const auto series = inverse_totient_series(D);
  const auto a0 = euler_product(ProductKind::A0, P);
  OzlukValue out;
  out.series = series.value;
  out.a0 = a0.corrected.real();
  out.value = (11.0 / 12.0) / (out.series * out.a0);
  out.bound = out.value * (series.tail_bound / series.value + a0.corrected_bound);
  return out;
}

KMinusCheck k_minus_factorization(cplx s, std::uint32_t P) {
  if (!(s.real() < 0.0)) throw ConfigError("k_minus_factorization: grid requires Re s < 0");
  KMinusCheck out;
  out.lhs = euler_product(ProductKind::K, P, -s).corrected;
  out.rhs = hurwitz_zeta(2.0 - s, 1.0) * euler_product(ProductKind::K_minus, P, s).corrected;
  return out;
}

}  // namespace lpair
