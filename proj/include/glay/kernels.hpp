#pragma once

#include <cstddef>

namespace glay::kernels {

// Pairwise inner loops shared by the force and stress engines, in scalar and
// AVX2 forms.  Both variants implement exactly the semantics documented here;
// the SIMD versions may reassociate sums, so results agree to ~1e-14
// relatively, not bitwise.  All position input is structure-of-arrays.

struct Force2 {
  double x = 0.0, y = 0.0;
};

struct SmacofAccum {
  double num_x = 0.0, num_y = 0.0, den = 0.0;
};

struct KkDerivatives {
  double ex = 0.0, ey = 0.0;          // gradient of the spring energy at m
  double exx = 0.0, exy = 0.0, eyy = 0.0;  // Hessian entries
};

struct KernelTable {
  const char* name;

  // Inverse-distance repulsion summed over every u with |p_v - p_u| > 0:
  //   sum (p_v - p_u) * k2 / |p_v - p_u|^2
  // (v itself and exact-coincident points contribute nothing).
  Force2 (*repel_all)(const double* xs, const double* ys, std::size_t n, std::size_t v,
                      double k2);

  // Same shape with a per-source weight:  sum (p_v - p_u) * ck2 * w[u] / d2.
  Force2 (*repel_weighted)(const double* xs, const double* ys, const double* w, std::size_t n,
                           std::size_t v, double ck2);

  // Row i of the stress sum over j > i:  0.5 * w_ij * (|p_i - p_j| - drow[j])^2
  // with w_ij = 1 or 1 / drow[j]^2.  drow[j] must be positive for j > i.
  double (*stress_terms)(const double* xs, const double* ys, const double* drow, std::size_t i,
                         std::size_t n, bool inverse_square);

  // Majorization update terms for point i over every j with |p_i - p_j| > 0:
  //   num += w_ij * (p_j + drow[j] * (p_i - p_j) / |p_i - p_j|),  den += w_ij.
  // The diagonal excludes itself via the distance test.
  SmacofAccum (*smacof_terms)(const double* xs, const double* ys, const double* drow,
                              std::size_t i, std::size_t n, bool inverse_square);

  // First and second partials of  E_m = sum_i 0.5 * k[i] * (|p_m - p_i| - l[i])^2
  // at vertex m.  krow/lrow are dense rows with krow[m] == 0; coincident
  // points (distance exactly 0) contribute nothing.
  KkDerivatives (*kk_derivatives)(const double* xs, const double* ys, const double* krow,
                                  const double* lrow, std::size_t m, std::size_t n);

  // E_m itself (well defined at distance 0, so nothing is masked beyond
  // krow[m] == 0).
  double (*kk_vertex_energy)(const double* xs, const double* ys, const double* krow,
                             const double* lrow, std::size_t m, std::size_t n);
};

const KernelTable& scalar_kernels();

// Null when the build or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

// Best table for this machine, chosen once; set GLAY_SIMD=scalar to force the
// reference path.
const KernelTable& active_kernels();

}  // namespace glay::kernels
