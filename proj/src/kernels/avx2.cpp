// Compiled with -mavx2 -mfma; only reached when CPUID reports both.

#include "lpair/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace lpair::kernels::avx2 {
namespace {

// Cody-Waite split of pi/2; k * kPio2Hi is exact for |k| < 2^20.
constexpr double kPio2Hi = 1.57079632673412561417e+00;
constexpr double kPio2Mid = 6.07710050630396597660e-11;
constexpr double kPio2Lo = 2.02226624871116645580e-21;
constexpr double kTwoOverPi = 6.36619772367581382433e-01;
// Beyond this the three-part reduction loses accuracy; such lanes go scalar.
constexpr double kReductionLimit = 1.0e5;

// fdlibm kernel polynomials on [-pi/4, pi/4].
constexpr double S1 = -1.66666666666666324348e-01;
constexpr double S2 = 8.33333333332248946124e-03;
constexpr double S3 = -1.98412698298579493134e-04;
constexpr double S4 = 2.75573137070700676789e-06;
constexpr double S5 = -2.50507602534068634195e-08;
constexpr double S6 = 1.58969099521155010221e-10;
constexpr double C1 = 4.16666666666666019037e-02;
constexpr double C2 = -1.38888888888741095749e-03;
constexpr double C3 = 2.48015872894767294178e-05;
constexpr double C4 = -2.75573143513906633035e-07;
constexpr double C5 = 2.08757232129817482790e-09;
constexpr double C6 = -1.13596475577881948265e-11;

struct SinCos {
  __m256d s;
  __m256d c;
};

inline SinCos sincos4(__m256d x) {
  const __m256d kq = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kTwoOverPi)),
                                     _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(kq, _mm256_set1_pd(kPio2Hi), x);
  r = _mm256_fnmadd_pd(kq, _mm256_set1_pd(kPio2Mid), r);
  r = _mm256_fnmadd_pd(kq, _mm256_set1_pd(kPio2Lo), r);

  const __m256d z = _mm256_mul_pd(r, r);

  __m256d ps = _mm256_set1_pd(S6);
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(S5));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(S4));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(S3));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(S2));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(S1));
  const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(ps, z), r, r);

  __m256d pc = _mm256_set1_pd(C6);
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(C5));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(C4));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(C3));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(C2));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(C1));
  const __m256d hz = _mm256_mul_pd(z, _mm256_set1_pd(0.5));
  const __m256d one_minus_hz = _mm256_sub_pd(_mm256_set1_pd(1.0), hz);
  const __m256d cos_r = _mm256_fmadd_pd(_mm256_mul_pd(z, z), pc, one_minus_hz);

  // Quadrant q = k mod 4: swap on odd q, negate sin for q in {2,3},
  // negate cos for q in {1,2}.
  const __m128i q32 = _mm256_cvtpd_epi32(kq);
  const __m256i q = _mm256_cvtepi32_epi64(q32);
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i two = _mm256_set1_epi64x(2);
  const __m256d swap = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q, one), one));
  const __m256d sin_neg = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q, two), two));
  const __m256i q1 = _mm256_add_epi64(q, one);
  const __m256d cos_neg = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q1, two), two));

  __m256d s = _mm256_blendv_pd(sin_r, cos_r, swap);
  __m256d c = _mm256_blendv_pd(cos_r, sin_r, swap);
  const __m256d sign = _mm256_set1_pd(-0.0);
  s = _mm256_xor_pd(s, _mm256_and_pd(sin_neg, sign));
  c = _mm256_xor_pd(c, _mm256_and_pd(cos_neg, sign));
  return {s, c};
}

inline double hsum(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
}

inline bool in_range(__m256d x) {
  const __m256d ax = _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
  return _mm256_movemask_pd(_mm256_cmp_pd(ax, _mm256_set1_pd(kReductionLimit), _CMP_GT_OQ)) == 0;
}

}  // namespace

std::complex<double> expsum(std::span<const double> w, std::span<const double> phase, double t) {
  const std::size_t n = w.size();
  const std::size_t n4 = n & ~std::size_t{3};
  const __m256d tv = _mm256_set1_pd(t);
  __m256d re = _mm256_setzero_pd();
  __m256d im = _mm256_setzero_pd();
  alignas(32) double re_tail[4] = {0, 0, 0, 0};
  alignas(32) double im_tail[4] = {0, 0, 0, 0};

  for (std::size_t k = 0; k < n4; k += 4) {
    const __m256d x = _mm256_mul_pd(tv, _mm256_loadu_pd(phase.data() + k));
    const __m256d wv = _mm256_loadu_pd(w.data() + k);
    if (in_range(x)) [[likely]] {
      const SinCos sc = sincos4(x);
      re = _mm256_fmadd_pd(wv, sc.c, re);
      im = _mm256_fmadd_pd(wv, sc.s, im);
    } else {
      for (std::size_t j = 0; j < 4; ++j) {
        const double xj = t * phase[k + j];
        re_tail[j] += w[k + j] * std::cos(xj);
        im_tail[j] += w[k + j] * std::sin(xj);
      }
    }
  }
  for (std::size_t k = n4; k < n; ++k) {
    const double x = t * phase[k];
    re_tail[k & 3] += w[k] * std::cos(x);
    im_tail[k & 3] += w[k] * std::sin(x);
  }
  re = _mm256_add_pd(re, _mm256_load_pd(re_tail));
  im = _mm256_add_pd(im, _mm256_load_pd(im_tail));
  return {hsum(re), hsum(im)};
}

double fejer_row(std::span<const double> x, std::span<const double> w, double x0, double scale) {
  const std::size_t n = w.size();
  const std::size_t n4 = n & ~std::size_t{3};
  const __m256d x0v = _mm256_set1_pd(x0);
  const __m256d sv = _mm256_set1_pd(scale);
  const __m256d tiny = _mm256_set1_pd(1e-8);
  const __m256d absmask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  alignas(32) double tail[4] = {0, 0, 0, 0};

  for (std::size_t k = 0; k < n4; k += 4) {
    const __m256d u = _mm256_mul_pd(sv, _mm256_sub_pd(x0v, _mm256_loadu_pd(x.data() + k)));
    const __m256d wv = _mm256_loadu_pd(w.data() + k);
    if (in_range(u)) [[likely]] {
      const SinCos sc = sincos4(u);
      const __m256d small = _mm256_cmp_pd(_mm256_andnot_pd(absmask, u), tiny, _CMP_LE_OQ);
      const __m256d safe_u = _mm256_blendv_pd(u, _mm256_set1_pd(1.0), small);
      __m256d v = _mm256_div_pd(sc.s, safe_u);
      v = _mm256_blendv_pd(v, _mm256_set1_pd(1.0), small);
      acc = _mm256_fmadd_pd(wv, _mm256_mul_pd(v, v), acc);
    } else {
      for (std::size_t j = 0; j < 4; ++j) {
        const double uj = scale * (x0 - x[k + j]);
        const double v = std::sin(uj) / uj;
        tail[j] += w[k + j] * v * v;
      }
    }
  }
  for (std::size_t k = n4; k < n; ++k) {
    const double u = scale * (x0 - x[k]);
    double v = 1.0;
    if (std::abs(u) > 1e-8) {
      v = std::sin(u) / u;
      v *= v;
    }
    tail[k & 3] += w[k] * v;
  }
  acc = _mm256_add_pd(acc, _mm256_load_pd(tail));
  return hsum(acc);
}

}  // namespace lpair::kernels::avx2
