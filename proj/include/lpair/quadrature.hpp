#pragma once

#include <functional>
#include <span>

namespace lpair {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
};

// Adaptive Gauss–Kronrod (61-point) over [a, b]. The interval is first cut at
// every breakpoint inside it and into panels no wider than max_panel (0 means
// no width limit), so kinks and oscillation periods land on panel edges.
// Throws NumericalError when the summed error estimate exceeds abs_tol.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol = 1e-12,
                     std::span<const double> breakpoints = {}, double max_panel = 0.0);

// Composite Gauss–Legendre with `panels` equal panels of `order` nodes;
// fixed cost, used where a deterministic node set is wanted.
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int panels, int order = 20);

}  // namespace lpair
