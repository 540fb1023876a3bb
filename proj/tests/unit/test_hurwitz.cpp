#include <doctest.h>

#include <cmath>

#include "lpair/error.hpp"
#include "lpair/hurwitz.hpp"

using namespace lpair;

namespace {
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("special values") {
  CHECK(rel(hurwitz_zeta(2.0, 1.0), M_PI * M_PI / 6) < 1e-13);
  CHECK(rel(hurwitz_zeta(2.0, 0.5), M_PI * M_PI / 2) < 1e-13);
  // Σ n⁻³ with an integral tail, as independent reference
  double s = 0.0;
  for (int n = 1; n <= 100000; ++n) s += 1.0 / (double(n) * n * n);
  s += 1.0 / (2.0 * 100000.5 * 100000.5);
  CHECK(rel(hurwitz_zeta(3.0, 1.0), s) < 1e-12);
  CHECK(rel(hurwitz_zeta(2.0, 0.25), 17.197329154507110739) < 1e-13);
  CHECK(rel(hurwitz_zeta(cplx(0.5, 10.0), 0.3), cplx(0.761253942356291023, -1.786322964876198387)) < 1e-10);
  CHECK(rel(hurwitz_zeta(0.5, 1.0), -1.4603545088095868129) < 1e-12);
}

TEST_CASE("tail form keeps relative accuracy") {
  const cplx s(40.0, 0.0);
  const cplx t = hurwitz_zeta_tail(s, 1.0);
  CHECK(rel(t, std::pow(2.0, -40.0) + std::pow(3.0, -40.0)) < 1e-10);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), NumericalError);
  CHECK_THROWS_AS(hurwitz_zeta(cplx(0.5, 2000.0), 0.5), NumericalError);
}

TEST_CASE("log_gamma") {
  CHECK(std::abs(log_gamma(5.0) - std::log(24.0)) < 1e-13);
  CHECK(std::abs(log_gamma(0.5) - 0.5 * std::log(M_PI)) < 1e-13);
  // continuity across a large imaginary sweep
  double prev = log_gamma(cplx(0.25, 0.0)).imag();
  for (double y = 0.5; y < 400.0; y += 0.5) {
    const double cur = log_gamma(cplx(0.25, y)).imag();
    REQUIRE(std::abs(cur - prev) < 4.0);
    prev = cur;
  }
}

TEST_CASE("half-line evaluator matches the general routine") {
  const HurwitzHalfLine line({0.2, 0.5, 1.0}, 500.0);
  std::vector<cplx> out(3);
  for (double t : {0.0, 3.7, 120.0, 499.0}) {
    line.evaluate(t, out);
    for (std::size_t j = 0; j < 3; ++j) {
      const cplx ref = hurwitz_zeta(cplx(0.5, t), line.shifts()[j]);
      CHECK(std::abs(out[j] - ref) < 1e-10 * std::max(1.0, std::abs(ref)));
    }
  }
}
