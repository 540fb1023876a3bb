#include "lpair/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>
#include <vector>

#include "lpair/error.hpp"

namespace lpair {

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     std::span<const double> breakpoints, double max_panel) {
  if (!(b > a)) return {};
  std::vector<double> cuts{a};
  for (const double x : breakpoints)
    if (x > a && x < b) cuts.push_back(x);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());

  std::vector<double> edges;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    std::size_t pieces = 1;
    if (max_panel > 0.0) pieces = static_cast<std::size_t>(std::ceil((hi - lo) / max_panel));
    pieces = std::max<std::size_t>(pieces, 1);
    for (std::size_t k = 0; k < pieces; ++k) edges.push_back(lo + (hi - lo) * static_cast<double>(k) / pieces);
  }
  edges.push_back(b);

  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  QuadResult out;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    double err = 0.0;
    double l1 = 0.0;
    // Boost stops on a relative criterion; the absolute target is checked
    // on the summed estimate below.
    const double v = GK::integrate(f, edges[i], edges[i + 1], 12, 1e-11, &err, &l1);
    out.value += v;
    out.error += err;
  }
  if (!(out.error <= abs_tol) || !std::isfinite(out.value)) {
    std::ostringstream msg;
    msg << "quadrature on [" << a << ", " << b << "] did not converge: error estimate " << out.error
        << " > tolerance " << abs_tol;
    throw NumericalError(msg.str());
  }
  return out;
}

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int panels, int order) {
  if (panels < 1) throw ConfigError("gauss_legendre: need at least one panel");
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + h * p;
    const double hi = lo + h;
    double v = 0.0;
    switch (order) {
      case 10: v = boost::math::quadrature::gauss<double, 10>::integrate(f, lo, hi); break;
      case 20: v = boost::math::quadrature::gauss<double, 20>::integrate(f, lo, hi); break;
      case 30: v = boost::math::quadrature::gauss<double, 30>::integrate(f, lo, hi); break;
      default: throw ConfigError("gauss_legendre: order must be 10, 20 or 30");
    }
    total += v;
  }
  return total;
}

}  // namespace lpair
