#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "lpair/characters.hpp"
#include "lpair/error.hpp"

using namespace lpair;

TEST_CASE("group shapes") {
  const CharacterGroup g1(1);
  REQUIRE(g1.size() == 1);
  CHECK(g1.characters()[0].is_principal());
  CHECK(g1.characters()[0].conductor() == 1);

  const CharacterGroup g5(5);
  std::vector<std::uint32_t> orders;
  for (const auto& c : g5.characters()) orders.push_back(c.order());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::uint32_t>{1, 2, 4, 4});

  const CharacterGroup g8(8);
  CHECK(g8.size() == 4);
  CHECK(g8.primitive_characters().size() == 2);

  CHECK_THROWS_AS(CharacterGroup(0), ConfigError);
}

TEST_CASE("multiplicativity, zeros off units, and χ(1) = 1") {
  for (std::uint32_t q : {7u, 12u, 16u, 45u, 64u, 99u}) {
    const CharacterGroup g(q);
    for (const auto& chi : g.characters()) {
      CHECK(chi.exponent(1) == 0);
      for (std::uint32_t a = 0; a < q; ++a) {
        const bool unit = std::gcd(a, q) == 1;
        REQUIRE((chi.exponent(a) == DirichletCharacter::kNonUnit) == !unit);
        if (!unit) continue;
        for (std::uint32_t b = 1; b < q; ++b) {
          if (std::gcd(b, q) != 1) continue;
          const auto m = static_cast<std::int64_t>(chi.order());
          REQUIRE((chi.exponent(a) + chi.exponent(b)) % m == chi.exponent(std::int64_t(a) * b % q));
        }
      }
    }
  }
}

TEST_CASE("conductors") {
  const CharacterGroup g3(3);
  for (const auto& c : g3.characters()) CHECK(conductor(c) == (c.is_principal() ? 1u : 3u));

  // the character mod 6 induced from the nontrivial character mod 3
  const CharacterGroup g6(6);
  int induced = 0;
  for (const auto& c : g6.characters()) {
    if (c.is_principal()) continue;
    CHECK(conductor(c) == 3);
    CHECK(c.inducing_primitive().modulus() == 3);
    ++induced;
  }
  CHECK(induced == 1);
}

TEST_CASE("factor-formula conductor agrees with the direct test for q <= 200") {
  for (std::uint32_t q = 1; q <= 200; ++q) {
    const CharacterGroup g(q);
    for (const auto& c : g.characters()) {
      REQUIRE(c.conductor() == conductor(c));
      REQUIRE(conductor_from_factors(c, g.factors()) == conductor(c));
    }
  }
}

TEST_CASE("inducing primitive agrees on units") {
  const CharacterGroup g(36);
  for (const auto& c : g.characters()) {
    const auto p = c.inducing_primitive();
    CHECK(p.is_primitive());
    for (std::int64_t a = 1; a < 36; ++a)
      if (std::gcd<std::int64_t>(a, 36) == 1) REQUIRE(std::abs(c(a) - p(a)) < 1e-12);
  }
}

TEST_CASE("full-group orthogonality, exact in exponents, q <= 50") {
  for (std::uint32_t q = 1; q <= 50; ++q) {
    const CharacterGroup g(q);
    for (std::uint32_t p = 1; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (std::uint32_t r = 1; r <= q; ++r) {
        if (std::gcd(r, q) != 1) continue;
        std::complex<double> s = 0.0;
        for (const auto& c : g.characters()) s += c(p) * std::conj(c(r));
        const double expect = (p % q == r % q) ? static_cast<double>(g.size()) : 0.0;
        REQUIRE(std::abs(s - expect) < 1e-9);
      }
    }
  }
}

TEST_CASE("closure under conjugation") {
  const CharacterGroup g(21);
  for (const auto& c : g.characters()) {
    const auto cb = c.conjugate();
    for (std::int64_t a = 1; a < 21; ++a) CHECK(std::abs(cb(a) - std::conj(c(a))) < 1e-12);
  }
}

TEST_CASE("primitive orthogonality examples") {
  const ArithmeticTables t(1000);
  auto s = primitive_orthogonality_sum(t, 5, 2, 3);
  CHECK(s.divisor == doctest::Approx(-1.0));
  CHECK(std::abs(s.direct - (-1.0)) < 1e-9);
  s = primitive_orthogonality_sum(t, 4, 5, 1);
  CHECK(s.divisor == doctest::Approx(1.0));
  s = primitive_orthogonality_sum(t, 12, 7, 7);
  CHECK(s.divisor == doctest::Approx(static_cast<double>(t.primitive_count(12))));
  CHECK_THROWS_AS(primitive_orthogonality_sum(t, 6, 3, 5), ConfigError);
}

TEST_CASE("Δ: empty support, symmetry, the two routes, and the diagonal formula") {
  const ArithmeticTables t(5000);
  const auto W = SmoothWeight::bump();
  CHECK(delta_pr(t, 3, 5, 0.4, W) == 0.0);
  CHECK(delta_pr(t, 3, 7, 60.0, W) == doctest::Approx(delta_pr(t, 7, 3, 60.0, W)).epsilon(1e-12));
  CHECK(delta_pr(t, 3, 7, 60.0, W) ==
        doctest::Approx(delta_pr(t, 3, 7, 60.0, W, DeltaRoute::characters)).epsilon(1e-10));

  // p = r: Σ_{(q,p)=1} φ*(q)/φ(q)·W(q/Q) summed here independently
  const double Q = 300.0;
  const std::uint32_t p = 11;
  double direct = 0.0;
  for (std::uint32_t q = 301; q < 600; ++q)
    if (q % p != 0) direct += W(q / Q) * double(t.primitive_count(q)) / t.totient(q);
  CHECK(delta_pr(t, p, p, Q, W) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("Δ(p,p)/Q tracks Ŵ(1)g(1)(1−1/p)/(local factor) at Q = 1000") {
  const ArithmeticTables t(5000);
  const auto W = SmoothWeight::bump();
  // g(1) = ∏(1 − 1/((p−1)p) + 1/((p−1)p²) − 1/p³), summed here to p < 10⁶
  const ArithmeticTables big(1000000);
  double g1 = 1.0;
  for (auto l : big.primes()) {
    const double x = l;
    g1 *= 1.0 - 1.0 / ((x - 1) * x) + 1.0 / ((x - 1) * x * x) - 1.0 / (x * x * x);
  }
  for (double p : {3.0, 7.0, 31.0}) {
    const double local = 1.0 - 1.0 / ((p - 1) * p) + 1.0 / ((p - 1) * p * p) - 1.0 / (p * p * p);
    const double main = W.hat_at_one() * g1 * (1.0 - 1.0 / p) / local;
    const double d = delta_pr(t, static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(p), 1000.0, W) / 1000.0;
    CHECK(std::abs(d / main - 1.0) < 0.15);
  }
}

TEST_CASE("U + L = Δ and the Möbius flip on random samples") {
  const ArithmeticTables t(2000);
  const auto W = SmoothWeight::bump();
  std::mt19937 rng(5);
  const auto primes = t.primes();
  std::uniform_int_distribution<std::size_t> pick(0, 40);
  std::uniform_real_distribution<double> qd(2.0, 500.0);
  for (int k = 0; k < 30; ++k) {
    const auto p = primes[pick(rng)], r = primes[pick(rng)];
    const double Q = qd(rng);
    const double C = std::uniform_real_distribution<double>(0.0, 2.5 * Q)(rng);
    const double d = delta_pr(t, p, r, Q, W);
    const auto s = delta_split(t, p, r, Q, W, C);
    REQUIRE(std::abs(s.upper + s.lower - d) < 1e-9);
    const auto f = moebius_flip(t, p, r, Q, W, C);
    REQUIRE(std::abs(f.upper + f.lower) < 1e-9);
  }
  const auto a = delta_split(t, 5, 7, 100.0, W, 250.0);
  CHECK(a.upper == 0.0);
  const auto b = delta_split(t, 5, 7, 100.0, W, 0.0);
  CHECK(b.lower == 0.0);
}
