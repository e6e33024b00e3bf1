// AVX2 variants of the pairwise kernels.  This file is compiled with -mavx2
// only; callers must check CPU support before using the table.  Lanes that
// would divide by zero are masked to contribute exactly nothing, matching the
// scalar semantics; only summation order differs (four partial sums).

#include <immintrin.h>

#include <cmath>

#include "glay/kernels.hpp"

namespace glay::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(s, s);
  return _mm_cvtsd_f64(_mm_add_sd(s, sh));
}

Force2 repel_all_avx2(const double* xs, const double* ys, std::size_t n, std::size_t v,
                      double k2) {
  const __m256d px = _mm256_set1_pd(xs[v]);
  const __m256d py = _mm256_set1_pd(ys[v]);
  const __m256d vk2 = _mm256_set1_pd(k2);
  const __m256d zero = _mm256_setzero_pd();
  __m256d ax = zero, ay = zero;
  std::size_t u = 0;
  for (; u + 4 <= n; u += 4) {
    __m256d dx = _mm256_sub_pd(px, _mm256_loadu_pd(xs + u));
    __m256d dy = _mm256_sub_pd(py, _mm256_loadu_pd(ys + u));
    __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    __m256d mask = _mm256_cmp_pd(d2, zero, _CMP_GT_OQ);
    __m256d w = _mm256_and_pd(_mm256_div_pd(vk2, d2), mask);
    ax = _mm256_add_pd(ax, _mm256_mul_pd(dx, w));
    ay = _mm256_add_pd(ay, _mm256_mul_pd(dy, w));
  }
  Force2 f{hsum(ax), hsum(ay)};
  for (; u < n; ++u) {
    double dx = xs[v] - xs[u];
    double dy = ys[v] - ys[u];
    double d2 = dx * dx + dy * dy;
    if (d2 > 0.0) {
      double w = k2 / d2;
      f.x += dx * w;
      f.y += dy * w;
    }
  }
  return f;
}

Force2 repel_weighted_avx2(const double* xs, const double* ys, const double* w, std::size_t n,
                           std::size_t v, double ck2) {
  const __m256d px = _mm256_set1_pd(xs[v]);
  const __m256d py = _mm256_set1_pd(ys[v]);
  const __m256d vc = _mm256_set1_pd(ck2);
  const __m256d zero = _mm256_setzero_pd();
  __m256d ax = zero, ay = zero;
  std::size_t u = 0;
  for (; u + 4 <= n; u += 4) {
    __m256d dx = _mm256_sub_pd(px, _mm256_loadu_pd(xs + u));
    __m256d dy = _mm256_sub_pd(py, _mm256_loadu_pd(ys + u));
    __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    __m256d mask = _mm256_cmp_pd(d2, zero, _CMP_GT_OQ);
    __m256d wu = _mm256_mul_pd(vc, _mm256_loadu_pd(w + u));
    __m256d s = _mm256_and_pd(_mm256_div_pd(wu, d2), mask);
    ax = _mm256_add_pd(ax, _mm256_mul_pd(dx, s));
    ay = _mm256_add_pd(ay, _mm256_mul_pd(dy, s));
  }
  Force2 f{hsum(ax), hsum(ay)};
  for (; u < n; ++u) {
    double dx = xs[v] - xs[u];
    double dy = ys[v] - ys[u];
    double d2 = dx * dx + dy * dy;
    if (d2 > 0.0) {
      double s = ck2 * w[u] / d2;
      f.x += dx * s;
      f.y += dy * s;
    }
  }
  return f;
}

template <bool kInverseSquare>
double stress_terms_impl(const double* xs, const double* ys, const double* drow, std::size_t i,
                         std::size_t n) {
  const __m256d px = _mm256_set1_pd(xs[i]);
  const __m256d py = _mm256_set1_pd(ys[i]);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = i + 1;
  for (; j + 4 <= n; j += 4) {
    __m256d dx = _mm256_sub_pd(px, _mm256_loadu_pd(xs + j));
    __m256d dy = _mm256_sub_pd(py, _mm256_loadu_pd(ys + j));
    __m256d dist = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
    __m256d d = _mm256_loadu_pd(drow + j);
    __m256d diff = _mm256_sub_pd(dist, d);
    __m256d w = kInverseSquare ? _mm256_div_pd(one, _mm256_mul_pd(d, d)) : one;
    acc = _mm256_add_pd(acc, _mm256_mul_pd(half, _mm256_mul_pd(w, _mm256_mul_pd(diff, diff))));
  }
  double total = hsum(acc);
  for (; j < n; ++j) {
    double dx = xs[i] - xs[j];
    double dy = ys[i] - ys[j];
    double dist = std::sqrt(dx * dx + dy * dy);
    double diff = dist - drow[j];
    double w = kInverseSquare ? 1.0 / (drow[j] * drow[j]) : 1.0;
    total += 0.5 * w * diff * diff;
  }
  return total;
}

double stress_terms_avx2(const double* xs, const double* ys, const double* drow, std::size_t i,
                         std::size_t n, bool inverse_square) {
  return inverse_square ? stress_terms_impl<true>(xs, ys, drow, i, n)
                        : stress_terms_impl<false>(xs, ys, drow, i, n);
}

template <bool kInverseSquare>
SmacofAccum smacof_terms_impl(const double* xs, const double* ys, const double* drow,
                              std::size_t i, std::size_t n) {
  const __m256d px = _mm256_set1_pd(xs[i]);
  const __m256d py = _mm256_set1_pd(ys[i]);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d anx = zero, any = zero, aden = zero;
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d xj = _mm256_loadu_pd(xs + j);
    __m256d yj = _mm256_loadu_pd(ys + j);
    __m256d dx = _mm256_sub_pd(px, xj);
    __m256d dy = _mm256_sub_pd(py, yj);
    __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    __m256d mask = _mm256_cmp_pd(d2, zero, _CMP_GT_OQ);
    __m256d dist = _mm256_sqrt_pd(d2);
    __m256d d = _mm256_loadu_pd(drow + j);
    __m256d w = kInverseSquare ? _mm256_div_pd(one, _mm256_mul_pd(d, d)) : one;
    w = _mm256_and_pd(w, mask);
    __m256d ratio = _mm256_and_pd(_mm256_div_pd(d, dist), mask);
    anx = _mm256_add_pd(anx, _mm256_mul_pd(w, _mm256_add_pd(xj, _mm256_mul_pd(ratio, dx))));
    any = _mm256_add_pd(any, _mm256_mul_pd(w, _mm256_add_pd(yj, _mm256_mul_pd(ratio, dy))));
    aden = _mm256_add_pd(aden, w);
  }
  SmacofAccum a{hsum(anx), hsum(any), hsum(aden)};
  for (; j < n; ++j) {
    double dx = xs[i] - xs[j];
    double dy = ys[i] - ys[j];
    double d2 = dx * dx + dy * dy;
    if (d2 > 0.0) {
      double dist = std::sqrt(d2);
      double w = kInverseSquare ? 1.0 / (drow[j] * drow[j]) : 1.0;
      double ratio = drow[j] / dist;
      a.num_x += w * (xs[j] + ratio * dx);
      a.num_y += w * (ys[j] + ratio * dy);
      a.den += w;
    }
  }
  return a;
}

SmacofAccum smacof_terms_avx2(const double* xs, const double* ys, const double* drow,
                              std::size_t i, std::size_t n, bool inverse_square) {
  return inverse_square ? smacof_terms_impl<true>(xs, ys, drow, i, n)
                        : smacof_terms_impl<false>(xs, ys, drow, i, n);
}

KkDerivatives kk_derivatives_avx2(const double* xs, const double* ys, const double* krow,
                                  const double* lrow, std::size_t m, std::size_t n) {
  const __m256d px = _mm256_set1_pd(xs[m]);
  const __m256d py = _mm256_set1_pd(ys[m]);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d aex = zero, aey = zero, aexx = zero, aexy = zero, aeyy = zero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d dx = _mm256_sub_pd(px, _mm256_loadu_pd(xs + i));
    __m256d dy = _mm256_sub_pd(py, _mm256_loadu_pd(ys + i));
    __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    __m256d mask = _mm256_cmp_pd(d2, zero, _CMP_GT_OQ);
    __m256d dist = _mm256_sqrt_pd(d2);
    __m256d k = _mm256_and_pd(_mm256_loadu_pd(krow + i), mask);
    __m256d r = _mm256_and_pd(_mm256_div_pd(_mm256_loadu_pd(lrow + i), dist), mask);
    __m256d q = _mm256_and_pd(_mm256_div_pd(r, d2), mask);
    __m256d omr = _mm256_sub_pd(one, r);
    aex = _mm256_add_pd(aex, _mm256_mul_pd(k, _mm256_mul_pd(dx, omr)));
    aey = _mm256_add_pd(aey, _mm256_mul_pd(k, _mm256_mul_pd(dy, omr)));
    __m256d qdy2 = _mm256_mul_pd(q, _mm256_mul_pd(dy, dy));
    __m256d qdx2 = _mm256_mul_pd(q, _mm256_mul_pd(dx, dx));
    aexx = _mm256_add_pd(aexx, _mm256_mul_pd(k, _mm256_sub_pd(one, qdy2)));
    aeyy = _mm256_add_pd(aeyy, _mm256_mul_pd(k, _mm256_sub_pd(one, qdx2)));
    aexy = _mm256_add_pd(aexy, _mm256_mul_pd(k, _mm256_mul_pd(q, _mm256_mul_pd(dx, dy))));
  }
  KkDerivatives out{hsum(aex), hsum(aey), hsum(aexx), hsum(aexy), hsum(aeyy)};
  for (; i < n; ++i) {
    double dx = xs[m] - xs[i];
    double dy = ys[m] - ys[i];
    double d2 = dx * dx + dy * dy;
    if (d2 > 0.0) {
      double dist = std::sqrt(d2);
      double k = krow[i];
      double r = lrow[i] / dist;
      double q = r / d2;
      out.ex += k * dx * (1.0 - r);
      out.ey += k * dy * (1.0 - r);
      out.exx += k * (1.0 - q * dy * dy);
      out.eyy += k * (1.0 - q * dx * dx);
      out.exy += k * q * dx * dy;
    }
  }
  return out;
}

double kk_vertex_energy_avx2(const double* xs, const double* ys, const double* krow,
                             const double* lrow, std::size_t m, std::size_t n) {
  const __m256d px = _mm256_set1_pd(xs[m]);
  const __m256d py = _mm256_set1_pd(ys[m]);
  const __m256d half = _mm256_set1_pd(0.5);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d dx = _mm256_sub_pd(px, _mm256_loadu_pd(xs + i));
    __m256d dy = _mm256_sub_pd(py, _mm256_loadu_pd(ys + i));
    __m256d dist = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
    __m256d diff = _mm256_sub_pd(dist, _mm256_loadu_pd(lrow + i));
    __m256d k = _mm256_loadu_pd(krow + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(half, _mm256_mul_pd(k, _mm256_mul_pd(diff, diff))));
  }
  double total = hsum(acc);
  for (; i < n; ++i) {
    double dx = xs[m] - xs[i];
    double dy = ys[m] - ys[i];
    double dist = std::sqrt(dx * dx + dy * dy);
    double diff = dist - lrow[i];
    total += 0.5 * krow[i] * diff * diff;
  }
  return total;
}

}  // namespace

namespace detail {
const KernelTable* avx2_table() {
  static const KernelTable table{
      "avx2",
      repel_all_avx2,
      repel_weighted_avx2,
      stress_terms_avx2,
      smacof_terms_avx2,
      kk_derivatives_avx2,
      kk_vertex_energy_avx2,
  };
  return &table;
}
}  // namespace detail

}  // namespace glay::kernels
