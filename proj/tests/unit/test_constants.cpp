#include <doctest.h>

#include <cmath>

#include "lpair/arith.hpp"
#include "lpair/constants.hpp"
#include "lpair/error.hpp"
#include "lpair/testfn.hpp"

using namespace lpair;

TEST_CASE("A0") {
  const auto two = euler_product(ProductKind::A0, 2);
  CHECK(two.value.real() == doctest::Approx(0.625).epsilon(1e-15));
  const auto big = euler_product(ProductKind::A0, 1000000);
  CHECK(big.tail_bound < 1e-6);
  CHECK(big.corrected_bound < 1e-10);
  const auto bigger = euler_product(ProductKind::A0, 2000000);
  CHECK(std::abs(std::log(bigger.value.real() / big.value.real())) <= big.tail_bound);
  CHECK(std::abs(bigger.corrected - big.corrected) < 1e-10);
}

TEST_CASE("K(0) is ζ(2)ζ(3)/ζ(6)") {
  const auto k = euler_product(ProductKind::K, 1000000, 0.0);
  CHECK(std::abs(k.corrected - 1.94359643682075920506) < 1e-10);
  CHECK_THROWS_AS(euler_product(ProductKind::K, 1000, -1.5), ConfigError);
  CHECK_THROWS_AS(euler_product(ProductKind::g, 1000, -0.1), ConfigError);
  CHECK_THROWS_AS(euler_product(ProductKind::A0, 1), ConfigError);
}

TEST_CASE("prime zeta") {
  // P(2) = 0.4522474200410654985...
  CHECK(std::abs(prime_zeta(2.0) - 0.45224742004106549851) < 1e-13);
}

TEST_CASE("B and R") {
  auto v = bsm_rsm(0.0, 1);
  CHECK(std::abs(v.B - 1.0) < 1e-15);
  CHECK(std::abs(v.R - 1.0) < 1e-15);
  v = bsm_rsm(0.0, 2);
  CHECK(std::abs(v.B - 0.5) < 1e-15);
  CHECK(std::abs(v.R - 2.0 / 3.0) < 1e-15);
  v = bsm_rsm(cplx(0.3, 1.0), 30);
  cplx B = 1.0, R = 1.0;
  for (double p : {2.0, 3.0, 5.0}) {
    B *= 1.0 - std::pow(p, -cplx(1.3, 1.0));
    R /= 1.0 + 1.0 / ((p - 1.0) * std::pow(p, cplx(1.3, 1.0)));
  }
  CHECK(std::abs(v.B - B) < 1e-14);
  CHECK(std::abs(v.R - R) < 1e-14);
}

TEST_CASE("Σ 1/(φ(ad)d^s) identity") {
  auto c = sum_varphi_identity_check(1, 1, 10.0, 1000);
  CHECK(std::abs(c.lhs - 1.0) < 1e-3);
  CHECK(std::abs(c.rhs - 1.0) < 1e-3);
  c = sum_varphi_identity_check(3, 2, 10.0, 1000);
  CHECK(std::abs(c.rhs - 0.5) < 1e-3);
  c = sum_varphi_identity_check(1, 1, 1.0, 100000);
  CHECK(std::abs(c.lhs_extrapolated - c.rhs) < 1e-4);
  CHECK_THROWS_AS(sum_varphi_identity_check(2, 4, 1.0, 100), ConfigError);
  CHECK_THROWS_AS(sum_varphi_identity_check(1, 1, cplx(0.0, 1.0), 100), ConfigError);
}

TEST_CASE("K(−s) factorization") {
  for (double x : {-0.1, -0.4, -0.8})
    for (double y : {0.0, 2.0}) {
      const auto k = k_minus_factorization(cplx(x, y), 200000);
      CHECK(std::abs(k.lhs - k.rhs) < 1e-8);
    }
}

TEST_CASE("inverse-totient series") {
  const auto one = inverse_totient_series(1);
  CHECK(one.partial == 1.0);
  CHECK(one.value - one.tail_bound <= 2.2038565964);
  CHECK(one.value + one.tail_bound >= 2.2038565964);
  const auto a = inverse_totient_series(1000000);
  const auto b = inverse_totient_series(2000000);
  CHECK(std::abs(a.value - b.value) <= a.tail_bound);
  // Σ 1/(dφ(d)) = ∏(1 + p/((p−1)(p²−1))) = 2.2038565964...
  CHECK(b.value == doctest::Approx(2.20385659).epsilon(1e-7));
}

TEST_CASE("g(1) composite against the family average") {
  const ArithmeticTables t(200000);
  const auto W = SmoothWeight::bump();
  const double Q = 1e5;
  double s = 0.0;
  for (std::uint32_t q = 100001; q < 200000; ++q) s += W(q / Q) * double(t.primitive_count(q)) / t.totient(q);
  const auto g1 = euler_product(ProductKind::g, 1000000, 1.0);
  CHECK(std::abs(s / Q / (W.hat_at_one() * g1.corrected.real()) - 1.0) < 0.01);
}
