#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lpair/error.hpp"
#include "lpair/testfn.hpp"

using namespace lpair;

TEST_CASE("Φ piecewise values and symmetry") {
  CHECK(phi_sinc(1.0) == 0.5);
  CHECK(phi_sinc(std::exp(2.0)) == doctest::Approx(0.0));
  CHECK(phi_sinc(10.0) == 0.0);
  for (double x : {0.2, 0.9, 1.7, 3.3, 7.0}) CHECK(phi_sinc(x) == doctest::Approx(phi_sinc(1.0 / x)).epsilon(1e-14));
  CHECK_THROWS_AS(phi_sinc(0.0), ConfigError);
}

TEST_CASE("Φ̂ values") {
  CHECK(std::abs(phi_hat_sinc(0.0) - 1.0) < 1e-15);
  CHECK(std::abs(phi_hat_sinc(cplx(0, M_PI))) < 1e-15);
  CHECK(std::abs(phi_hat_sinc(cplx(0, 1)) - std::pow(std::sin(1.0), 2)) < 1e-15);
  for (double x = -60.0; x <= 60.0; x += 0.37) {
    const double v = std::abs(phi_hat_sinc(cplx(0, x)));
    REQUIRE(v <= std::min(1.0, 1.0 / (x * x)) + 1e-15);
  }
}

TEST_CASE("numeric Mellin transform matches the closed form") {
  for (double x : {0.5, 1.0, 2.0, 5.0, 20.0, 50.0}) {
    const cplx m = mellin_numeric(phi_sinc, std::exp(-2.0), std::exp(2.0), cplx(0, x), {1.0});
    CHECK(std::abs(m - phi_hat_sinc(cplx(0, x))) < 1e-8);
  }
  CHECK(std::abs(mellin_numeric([](double) { return 0.0; }, 1.0, 2.0, cplx(0.3, 1.0))) == 0.0);
}

TEST_CASE("weight W") {
  CHECK(w_bump(1.0) == 0.0);
  CHECK(w_bump(2.0) == 0.0);
  CHECK(w_bump(1.5) == doctest::Approx(std::exp(-4.0)).epsilon(1e-14));
  const auto W = SmoothWeight::bump();
  CHECK(W.hat_at_one() == doctest::Approx(0.00702985840660965624).epsilon(1e-10));
  CHECK(std::abs(W.transform(cplx(0.5, 2.0)) - cplx(0.00396736186080314079, 0.00403497329754890860)) < 1e-12);
  CHECK(std::abs(w_hat(1.0) - W.hat_at_one()) < 1e-14);
  // Decay along vertical lines: the oscillation envelope times t⁵ peaks near
  // t = 60 for this bump and falls from there to t = 100.
  for (double sigma : {0.0, 1.0, 2.0}) {
    double prev = HUGE_VAL;
    for (double t = 60.0; t <= 100.0; t += 10.0) {
      double env = 0.0;
      for (double u = t - 5.0; u <= t + 5.0; u += 0.1) env = std::max(env, std::abs(W.transform(cplx(sigma, u))));
      const double scaled = env * std::pow(t, 5.0);
      CHECK(scaled < prev);
      prev = scaled;
    }
  }
  CHECK(SmoothWeight::zero().is_zero());
  CHECK_THROWS_AS(SmoothWeight::custom([](double) { return 1.0; }, 0.5, 2.0), ConfigError);
}

TEST_CASE("TestFunction kinds") {
  const auto s = TestFunction::sinc_squared();
  CHECK(s.support_lo() == doctest::Approx(std::exp(-2.0)));
  CHECK(s.decay_exponent() == 2.0);
  CHECK(s.hat_l2() == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(TestFunction::zero()(1.5) == 0.0);
  CHECK(TestFunction::zero().hat_l2() == 0.0);
  const auto c = s.scaled(3.0);
  CHECK(c(1.0) == doctest::Approx(1.5));
  CHECK(std::abs(c.transform(cplx(0, 2)) - 3.0 * s.transform(cplx(0, 2))) < 1e-14);
  TestFunction::CustomSpec bad;
  bad.phi = phi_sinc;
  bad.lo = 2.0;
  bad.hi = 1.0;
  CHECK_THROWS_AS(TestFunction::custom(bad), ConfigError);
}

TEST_CASE("Plancherel") {
  const auto r = plancherel_check(TestFunction::sinc_squared());
  CHECK(std::abs(r.lhs - 1.0 / 3.0) < 1e-6);
  CHECK(std::abs(r.rhs - 1.0 / 3.0) < 1e-6);
  const auto r2 = plancherel_check(TestFunction::sinc_squared().scaled(2.0));
  CHECK(r2.rhs == doctest::Approx(4.0 * r.rhs).epsilon(1e-10));
  const auto b = plancherel_check(TestFunction::log_bump(0.5));
  CHECK(std::abs(b.lhs - b.rhs) < 1e-6);

  TestFunction::CustomSpec slow;
  slow.phi = phi_sinc;
  slow.lo = std::exp(-2.0);
  slow.hi = std::exp(2.0);
  slow.decay_exponent = 1.2;
  CHECK_THROWS_AS(plancherel_check(TestFunction::custom(slow)), ConfigError);
  CHECK(std::abs(sinc4_integral() - 2.0 * M_PI / 3.0) < 1e-8);
}
