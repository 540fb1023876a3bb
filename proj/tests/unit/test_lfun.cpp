#include <doctest.h>

#include <cmath>

#include "lpair/error.hpp"
#include "lpair/lfun.hpp"

using namespace lpair;

namespace {

DirichletCharacter nontrivial(std::uint32_t q) {
  const CharacterGroup g(q);
  for (const auto& c : g.characters())
    if (c.is_primitive() && c.is_real() && !c.is_principal()) return c;
  throw ConfigError("no real primitive character");
}

DirichletCharacter trivial() { return CharacterGroup(1).characters()[0]; }

}  // namespace

TEST_CASE("L-values") {
  // ζ(s) against its Dirichlet series with integral tail
  const cplx s(3.0, 1.0);
  cplx ref = 0.0;
  for (int n = 1; n <= 20000; ++n) ref += std::pow(double(n), -s);
  ref += std::pow(20000.5, 1.0 - s) / (s - 1.0);
  CHECK(std::abs(dirichlet_l(s, trivial()) - ref) < 1e-9);

  CHECK(std::abs(dirichlet_l(2.0, nontrivial(4)) - 0.91596559417721901505) < 1e-12);
  CHECK(std::abs(dirichlet_l(1.0, nontrivial(3)) - 0.60459978807807261686) < 1e-12);
  CHECK_THROWS_AS(dirichlet_l(1.0, trivial()), NumericalError);

  // complex character mod 5 with χ(2) = i
  const CharacterGroup g5(5);
  for (const auto& c : g5.characters()) {
    if (std::abs(c(2) - cplx(0, 1)) > 1e-12) continue;
    CHECK(std::abs(dirichlet_l(cplx(0.5, 3.0), c) - cplx(1.95568028443658707525, 0.14081207344324336423)) < 1e-10);
    CHECK(std::abs(gauss_sum(c) - cplx(-1.17557050458494625834, 1.90211303259030714423)) < 1e-12);
  }
}

TEST_CASE("Gauss sums and root numbers") {
  const LFunctionData z(trivial());
  CHECK(std::abs(z.gauss_sum() - 1.0) < 1e-14);
  CHECK(std::abs(z.root_number() - 1.0) < 1e-14);
  CHECK(std::abs(gauss_sum(nontrivial(4)) - cplx(0, 2)) < 1e-13);
  for (std::uint32_t q = 3; q <= 100; ++q) {
    for (const auto& c : CharacterGroup(q).primitive_characters()) {
      const LFunctionData d(c);
      REQUIRE(std::abs(std::norm(d.gauss_sum()) - q) < 1e-9);
      REQUIRE(std::abs(std::abs(d.root_number()) - 1.0) < 1e-10);
    }
  }
  const CharacterGroup g6(6);
  CHECK_THROWS_AS(LFunctionData(g6.characters()[0]), ConfigError);
}

TEST_CASE("functional equation, q <= 12") {
  for (std::uint32_t q = 1; q <= 12; ++q)
    for (const auto& c : CharacterGroup(q).primitive_characters()) {
      const LFunctionData d(c);
      for (double t = -30.0; t <= 30.0; t += 2.5) REQUIRE(functional_equation_residual(d, t) < 1e-8);
    }
}

TEST_CASE("Z on the critical line") {
  const LFunctionData z(trivial());
  CHECK(hardy_z(0.0, z) == doctest::Approx(-1.4603545088095868).epsilon(1e-10));
  CHECK(std::abs(hardy_z(14.134725141734693, z)) < 1e-6);
  // real to within the asserted tolerance across a sweep, any primitive χ
  for (const auto& c : CharacterGroup(7).primitive_characters()) {
    const LFunctionData d(c);
    for (double t = 0.0; t <= 50.0; t += 0.25) CHECK_NOTHROW(hardy_z(t, d));
  }
}

TEST_CASE("zero counting main term") {
  CHECK(zero_count_main_term(1, 100.0) == doctest::Approx(100.0 / M_PI * std::log(100.0 / (2 * M_PI * M_E))));
  CHECK(zero_count_main_term(1, 100.0) == doctest::Approx(56.2).epsilon(0.002));
  CHECK(zero_count_main_term(3, 50.0) == doctest::Approx(50.0 / M_PI * std::log(150.0 / (2 * M_PI * M_E))));
  double prev = zero_count_main_term(1, 18.0);
  for (double T = 20.0; T < 400.0; T += 10.0) {
    const double cur = zero_count_main_term(1, T);
    CHECK(cur > prev);
    prev = cur;
  }
  CHECK_THROWS_AS(zero_count_main_term(1, 0.5), ConfigError);
}

TEST_CASE("ζ zeros") {
  const LFunctionData z(trivial());
  CHECK(find_zeros(z, 0.0).zeros.empty());
  const auto s = find_zeros(z, 30.0);
  REQUIRE(s.zeros.size() == 6);
  const double expect[] = {14.134725141734694, 21.022039638771555, 25.010857580145689};
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(s.zeros[3 + k].ordinate - expect[k]) < 1e-8);
    CHECK(std::abs(s.zeros[2 - k].ordinate + expect[k]) < 1e-8);
  }
  for (const auto& r : s.zeros) {
    CHECK(r.bracket <= 1e-9);
    CHECK(hardy_z(r.ordinate - r.bracket, z) * hardy_z(r.ordinate + r.bracket, z) <= 0.0);
  }
  const auto s100 = find_zeros(z, 100.0);
  CHECK(s100.zeros.size() == 58);
  CHECK(s100.complete);
}

TEST_CASE("first zero of the character mod 4") {
  const auto s = find_zeros(LFunctionData(nontrivial(4)), 10.0);
  bool found = false;
  for (const auto& r : s.zeros) found |= std::abs(r.ordinate - 6.0209489046975966549) < 1e-8;
  CHECK(found);
}

TEST_CASE("scan_modulus: conjugate ordinates and shared grid") {
  const auto all = scan_modulus(13, 40.0, 0.05, 1);
  REQUIRE(all.size() == 11);
  for (const auto& cz : all) {
    CHECK(cz.scan.complete);
    // compare with an independent per-character scan
    const auto solo = find_zeros(LFunctionData(cz.chi), 40.0);
    REQUIRE(solo.zeros.size() == cz.scan.zeros.size());
    for (std::size_t i = 0; i < solo.zeros.size(); ++i)
      CHECK(std::abs(solo.zeros[i].ordinate - cz.scan.zeros[i].ordinate) < 1e-8);
    // conjugate's ordinates are the negatives
    const auto conj = cz.chi.conjugate();
    for (const auto& other : all) {
      if (other.chi.index() != conj.index()) continue;
      const auto& a = cz.scan.zeros;
      const auto& b = other.scan.zeros;
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i].ordinate + b[b.size() - 1 - i].ordinate) < 1e-8);
    }
  }
}

TEST_CASE("induced and primitive characters share zeros") {
  // characters mod 15 induced from mod 5 (conductor 5)
  const CharacterGroup g(15);
  int checked = 0;
  for (const auto& c : g.characters()) {
    if (c.conductor() != 5) continue;
    const auto p = c.inducing_primitive();
    const auto a = find_zeros(LFunctionData(p), 30.0);
    // L(s,χ) = L(s,χ*)(1 − χ*(3)3^{−s}); the Euler factor has no zeros on Re s = ½
    for (const auto& r : a.zeros) CHECK(std::abs(dirichlet_l(cplx(0.5, r.ordinate), c)) < 1e-7);
    ++checked;
  }
  CHECK(checked == 3);
}
