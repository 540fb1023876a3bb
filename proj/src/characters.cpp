#include "lpair/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "lpair/error.hpp"

namespace lpair {
namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> trial_factor(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
    if (n % p) continue;
    std::uint32_t k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
  std::uint32_t r = 1;
  while (e--) r *= b;
  return r;
}

// Smallest generator of (ℤ/p^kℤ)* for odd p.
std::uint32_t primitive_root(std::uint32_t p, std::uint32_t pk) {
  const std::uint32_t phi = pk / p * (p - 1);
  const auto fac = trial_factor(phi);
  for (std::uint32_t g = 2; g < pk; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (const auto& [l, e] : fac) {
      (void)e;
      if (powmod(g, phi / l, pk) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw NumericalError("primitive_root: none found");
}

// x ≡ a mod m1, x ≡ b mod m2 with gcd(m1, m2) = 1.
std::uint64_t crt(std::uint64_t a, std::uint64_t m1, std::uint64_t b, std::uint64_t m2) {
  for (std::uint64_t x = a % m1; x < m1 * m2; x += m1)
    if (x % m2 == b % m2) return x;
  throw NumericalError("crt: no solution");
}


std::int64_t umod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::complex<double> root_of_unity(std::int64_t k, std::uint32_t m) {
  // Exact values at the quarter points keep low-order sums clean.
  const std::int64_t kk = umod(k, m);
  if (kk == 0) return {1.0, 0.0};
  if (2 * kk == m) return {-1.0, 0.0};
  if (4 * kk == m) return {0.0, 1.0};
  if (4 * kk == 3 * static_cast<std::int64_t>(m)) return {0.0, -1.0};
  const double th = 2.0 * std::numbers::pi * static_cast<double>(kk) / m;
  return {std::cos(th), std::sin(th)};
}

void require_limit(const ArithmeticTables& t, double Q) {
  if (2.0 * Q > static_cast<double>(t.limit()))
    throw ConfigError("2Q exceeds the arithmetic table limit");
}

void require_weight(const SmoothWeight& w) {
  if (w.support_lo() < 1.0 || w.support_hi() > 2.0) throw ConfigError("weight support not inside (1, 2)");
}

}  // namespace

// ------------------------------------------------------------ DirichletCharacter

std::int32_t DirichletCharacter::exponent(std::int64_t a) const { return exps_[umod(a, q_)]; }

std::complex<double> DirichletCharacter::operator()(std::int64_t a) const {
  const std::int32_t k = exponent(a);
  if (k == kNonUnit) return {0.0, 0.0};
  return root_of_unity(k, order_);
}

DirichletCharacter DirichletCharacter::conjugate() const {
  DirichletCharacter c = *this;
  std::uint32_t idx = 0;
  std::uint32_t stride = 1;
  for (std::size_t i = 0; i < gen_exp_.size(); ++i) {
    c.gen_exp_[i] = (radix_[i] - gen_exp_[i]) % radix_[i];
    idx += c.gen_exp_[i] * stride;
    stride *= radix_[i];
  }
  c.index_ = idx;
  for (auto& e : c.exps_)
    if (e != kNonUnit) e = static_cast<std::int32_t>((order_ - e) % order_);
  return c;
}

DirichletCharacter DirichletCharacter::inducing_primitive() const {
  const std::uint32_t d = conductor_;
  const CharacterGroup g(d);
  std::vector<std::uint32_t> j;
  for (const auto& f : g.factors()) {
    // Lift the generator's global residue mod d to a unit mod q.
    std::int64_t a = f.lifted;
    while (std::gcd<std::int64_t>(a, q_) != 1) a += d;
    const std::int32_t k = exponent(a);
    const std::uint64_t num = static_cast<std::uint64_t>(k) * f.order;
    check(num % order_ == 0, "inducing_primitive: inconsistent orders");
    j.push_back(static_cast<std::uint32_t>(num / order_));
  }
  return g.by_exponents(j);
}

// ------------------------------------------------------------ CharacterGroup

CharacterGroup::CharacterGroup(std::uint32_t q) : q_(q) {
  if (q == 0) throw ConfigError("character_group: q must be positive");

  // Per-prime-power slot: residue mod p^k -> exponents of that slot's factors.
  struct Slot {
    std::uint32_t pk;
    std::size_t first;
    std::size_t count;
    std::vector<std::uint32_t> table;  // pk × count, residue-major
  };
  std::vector<Slot> slots;
  for (const auto& [p, k] : trial_factor(q)) {
    const std::uint32_t pk = ipow(p, k);
    const std::uint32_t rest = q / pk;
    auto lift = [&](std::uint32_t g) { return static_cast<std::uint32_t>(crt(g, pk, 1, rest)); };
    Slot s{pk, factors_.size(), 0, {}};
    if (p != 2) {
      const std::uint32_t g = primitive_root(p, pk);
      const std::uint32_t o = pk / p * (p - 1);
      factors_.push_back({p, pk, g, o, lift(g)});
      s.count = 1;
      s.table.assign(pk, 0);
      std::uint64_t x = 1;
      for (std::uint32_t e = 0; e < o; ++e) {
        s.table[x] = e;
        x = x * g % pk;
      }
    } else if (k == 2) {
      factors_.push_back({2, 4, 3, 2, lift(3)});
      s.count = 1;
      s.table = {0, 0, 0, 1};
    } else if (k >= 3) {
      const std::uint32_t ob = pk / 4;
      factors_.push_back({2, pk, pk - 1, 2, lift(pk - 1)});
      factors_.push_back({2, pk, 5, ob, lift(5)});
      s.count = 2;
      s.table.assign(static_cast<std::size_t>(pk) * 2, 0);
      std::uint64_t x = 1;
      for (std::uint32_t eb = 0; eb < ob; ++eb) {
        for (std::uint32_t ea = 0; ea < 2; ++ea) {
          const std::uint64_t r = ea ? (pk - x) % pk : x;
          s.table[r * 2] = ea;
          s.table[r * 2 + 1] = eb;
        }
        x = x * 5 % pk;
      }
    }
    if (s.count) slots.push_back(std::move(s));
  }

  const std::size_t nf = factors_.size();
  dlog_.assign(static_cast<std::size_t>(q) * nf, 0);
  std::vector<std::uint32_t> units;
  for (std::uint32_t a = 0; a < q; ++a)
    if (std::gcd(a, q) == 1) units.push_back(a);
  for (const std::uint32_t a : units) {
    for (const auto& s : slots)
      for (std::size_t i = 0; i < s.count; ++i)
        dlog_[static_cast<std::size_t>(a) * nf + s.first + i] = s.table[(a % s.pk) * s.count + i];
  }

  std::vector<std::uint32_t> radix(nf);
  std::size_t total = 1;
  for (std::size_t i = 0; i < nf; ++i) {
    radix[i] = factors_[i].order;
    total *= radix[i];
  }

  chars_.reserve(total);
  std::vector<std::uint32_t> j(nf, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (std::size_t i = 0; i < nf; ++i) {
      j[i] = static_cast<std::uint32_t>(rem % radix[i]);
      rem /= radix[i];
    }
    DirichletCharacter c;
    c.q_ = q;
    c.index_ = static_cast<std::uint32_t>(idx);
    c.gen_exp_ = j;
    c.radix_ = radix;
    std::uint64_t ord = 1;
    std::vector<std::uint32_t> red_num(nf), red_den(nf);
    for (std::size_t i = 0; i < nf; ++i) {
      const std::uint32_t g = std::gcd(j[i], radix[i]);
      red_num[i] = j[i] / g;
      red_den[i] = radix[i] / g;
      ord = std::lcm<std::uint64_t>(ord, red_den[i]);
    }
    c.order_ = static_cast<std::uint32_t>(ord);
    // χ(a) = e(Σ_i mult_i·dlog_i(a) / ord).
    std::vector<std::uint64_t> mult(nf);
    for (std::size_t i = 0; i < nf; ++i) mult[i] = red_num[i] * (ord / red_den[i]) % ord;
    c.exps_.assign(q, DirichletCharacter::kNonUnit);
    for (const std::uint32_t a : units) {
      const std::uint32_t* dl = dlog_.data() + static_cast<std::size_t>(a) * nf;
      std::uint64_t k = 0;
      for (std::size_t i = 0; i < nf; ++i) k += mult[i] * dl[i];
      c.exps_[a] = static_cast<std::int32_t>(k % ord);
    }
    const std::int32_t em1 = c.exps_[(q - 1) % q];
    c.parity_ = (em1 == 0) ? 0 : 1;
    c.conductor_ = conductor_from_factors(c, factors_);
    chars_.push_back(std::move(c));
  }
}

std::vector<DirichletCharacter> CharacterGroup::primitive_characters() const {
  std::vector<DirichletCharacter> out;
  for (const auto& c : chars_)
    if (c.is_primitive()) out.push_back(c);
  return out;
}

const DirichletCharacter& CharacterGroup::by_exponents(const std::vector<std::uint32_t>& j) const {
  if (j.size() != factors_.size()) throw ConfigError("by_exponents: wrong tuple length");
  std::size_t idx = 0;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i] >= factors_[i].order) throw ConfigError("by_exponents: exponent out of range");
    idx += j[i] * stride;
    stride *= factors_[i].order;
  }
  return chars_[idx];
}

std::vector<std::uint32_t> CharacterGroup::discrete_log(std::uint64_t a) const {
  const std::uint32_t r = static_cast<std::uint32_t>(a % q_);
  if (std::gcd(r, q_) != 1) throw ConfigError("discrete_log: not a unit");
  const std::size_t nf = factors_.size();
  return {dlog_.begin() + static_cast<std::ptrdiff_t>(r * nf), dlog_.begin() + static_cast<std::ptrdiff_t>((r + 1) * nf)};
}

// ------------------------------------------------------------ conductor

std::uint32_t conductor(const DirichletCharacter& chi) {
  const std::uint32_t q = chi.modulus();
  if (chi.is_principal()) return 1;
  for (std::uint32_t d = 1; d < q; ++d) {
    if (q % d) continue;
    bool trivial = true;
    for (std::uint32_t a = 1 + d; a < q && trivial; a += d)
      if (std::gcd(a, q) == 1 && chi.exponent(a) != 0) trivial = false;
    if (trivial) return d;
  }
  return q;
}

std::uint32_t conductor_from_factors(const DirichletCharacter& chi, const std::vector<CyclicFactor>& factors) {
  const auto& j = chi.generator_exponents();
  std::uint32_t cond = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    const std::uint32_t o = f.order / std::gcd(j[i], f.order);
    if (f.prime != 2) {
      if (o == 1) continue;
      std::uint32_t v = 0;
      for (std::uint32_t x = o; x % f.prime == 0; x /= f.prime) ++v;
      cond *= ipow(f.prime, 1 + v);
    } else if (f.local_modulus == 4) {
      if (o > 1) cond *= 4;
    } else {
      // Factors for 2^k, k ≥ 3, come as (−1, 5) pairs.
      const std::uint32_t ob = factors[i + 1].order / std::gcd(j[i + 1], factors[i + 1].order);
      if (ob > 1) {
        std::uint32_t l = 0;
        for (std::uint32_t x = ob; x > 1; x >>= 1) ++l;
        cond *= 1u << (2 + l);
      } else if (o > 1) {
        cond *= 4;
      }
      ++i;
    }
  }
  return cond;
}

// ------------------------------------------------------------ identities

OrthogonalitySum primitive_orthogonality_sum(const ArithmeticTables& t, const CharacterGroup& g, std::uint64_t p,
                                             std::uint64_t r) {
  const std::uint32_t q = g.modulus();
  if (std::gcd<std::uint64_t>(p * r, q) != 1) throw ConfigError("primitive_orthogonality_sum: gcd(pr, q) > 1");
  OrthogonalitySum out;
  for (const auto& chi : g.characters()) {
    if (!chi.is_primitive()) continue;
    out.direct += root_of_unity(static_cast<std::int64_t>(chi.exponent(static_cast<std::int64_t>(p % q))) -
                                    chi.exponent(static_cast<std::int64_t>(r % q)),
                                chi.order());
  }
  const std::uint64_t diff = p > r ? p - r : r - p;
  for (const std::uint32_t d : t.divisors(q))
    if (diff % d == 0) out.divisor += static_cast<double>(t.totient(d)) * t.moebius(q / d);
  if (std::abs(out.direct - std::complex<double>(out.divisor, 0.0)) > 1e-9) {
    std::ostringstream msg;
    msg << "primitive_orthogonality_sum mismatch at q=" << q << " p=" << p << " r=" << r;
    throw NumericalError(msg.str());
  }
  return out;
}

OrthogonalitySum primitive_orthogonality_sum(const ArithmeticTables& t, std::uint32_t q, std::uint64_t p,
                                             std::uint64_t r) {
  if (std::gcd<std::uint64_t>(p * r, q) != 1) throw ConfigError("primitive_orthogonality_sum: gcd(pr, q) > 1");
  return primitive_orthogonality_sum(t, CharacterGroup(q), p, r);
}

double delta_pr(const ArithmeticTables& t, std::uint64_t p, std::uint64_t r, double Q, const SmoothWeight& w,
                DeltaRoute route) {
  require_weight(w);
  require_limit(t, Q);
  const std::uint64_t pr = p * r;
  const std::uint64_t diff = p > r ? p - r : r - p;
  const auto qlo = static_cast<std::uint32_t>(std::max(1.0, std::floor(Q) + 1.0));
  const auto qhi = static_cast<std::uint32_t>(std::max(0.0, std::ceil(2.0 * Q) - 1.0));
  double total = 0.0;
  for (std::uint32_t q = qlo; q <= qhi; ++q) {
    if (std::gcd<std::uint64_t>(q, pr) != 1) continue;
    const double wq = w(q / Q);
    if (wq == 0.0) continue;
    double inner = 0.0;
    if (route == DeltaRoute::divisor) {
      for (const std::uint32_t d : t.divisors(q))
        if (diff % d == 0) inner += static_cast<double>(t.totient(d)) * t.moebius(q / d);
    } else {
      const CharacterGroup g(q);
      std::complex<double> s;
      for (const auto& chi : g.characters())
        if (chi.is_primitive()) s += chi(static_cast<std::int64_t>(p % q)) * std::conj(chi(static_cast<std::int64_t>(r % q)));
      check(std::abs(s.imag()) < 1e-9, "delta_pr: character sum not real");
      inner = s.real();
    }
    total += wq / t.totient(q) * inner;
  }
  return total;
}

DeltaSplit delta_split(const ArithmeticTables& t, std::uint64_t p, std::uint64_t r, double Q, const SmoothWeight& w,
                       double C) {
  require_weight(w);
  require_limit(t, Q);
  if (C < 0.0) throw ConfigError("delta_split: C must be nonnegative");
  const std::uint64_t pr = p * r;
  const std::uint64_t diff = p > r ? p - r : r - p;
  const auto qhi = static_cast<std::uint32_t>(std::max(0.0, std::ceil(2.0 * Q) - 1.0));
  DeltaSplit out;
  for (std::uint32_t d = 1; d <= qhi; ++d) {
    if (diff % d != 0) continue;
    if (std::gcd<std::uint64_t>(d, pr) != 1) continue;
    for (std::uint32_t c = 1; static_cast<std::uint64_t>(c) * d <= qhi; ++c) {
      const std::uint32_t q = c * d;
      if (q <= Q) continue;
      if (std::gcd<std::uint64_t>(c, pr) != 1) continue;
      const int mu = t.moebius(c);
      if (mu == 0) continue;
      const double term = static_cast<double>(t.totient(d)) * mu * w(q / Q) / t.totient(q);
      (c > C ? out.upper : out.lower) += term;
    }
  }
  return out;
}

MoebiusFlip moebius_flip(const ArithmeticTables& t, std::uint64_t p, std::uint64_t r, double Q, const SmoothWeight& w,
                         double C) {
  require_weight(w);
  require_limit(t, Q);
  const std::uint64_t pr = p * r;
  const auto qhi = static_cast<std::uint32_t>(std::max(0.0, std::ceil(2.0 * Q) - 1.0));
  MoebiusFlip out;
  for (std::uint32_t c = 1; c <= qhi; ++c) {
    const int mu = t.moebius(c);
    if (mu == 0 || std::gcd<std::uint64_t>(c, pr) != 1) continue;
    for (std::uint32_t d = 1; static_cast<std::uint64_t>(c) * d <= qhi; ++d) {
      const std::uint32_t q = c * d;
      if (q <= Q || std::gcd<std::uint64_t>(d, pr) != 1) continue;
      const double term = mu * w(q / Q) / t.totient(q);
      (c > C ? out.upper : out.lower) += term;
    }
  }
  return out;
}

}  // namespace lpair
