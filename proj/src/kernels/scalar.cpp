#include "lpair/kernels.hpp"

#include <cmath>

namespace lpair::kernels::scalar {

std::complex<double> expsum(std::span<const double> w, std::span<const double> phase, double t) {
  // Four interleaved accumulators so the summation order matches the 4-lane
  // vector kernel.
  double re[4] = {0, 0, 0, 0};
  double im[4] = {0, 0, 0, 0};
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double x = t * phase[k];
    re[k & 3] += w[k] * std::cos(x);
    im[k & 3] += w[k] * std::sin(x);
  }
  return {(re[0] + re[2]) + (re[1] + re[3]), (im[0] + im[2]) + (im[1] + im[3])};
}

double fejer_row(std::span<const double> x, std::span<const double> w, double x0, double scale) {
  double acc[4] = {0, 0, 0, 0};
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double u = scale * (x0 - x[k]);
    double v = 1.0;
    if (std::abs(u) > 1e-8) {
      v = std::sin(u) / u;
      v *= v;
    }
    acc[k & 3] += w[k] * v;
  }
  return (acc[0] + acc[2]) + (acc[1] + acc[3]);
}

}  // namespace lpair::kernels::scalar
