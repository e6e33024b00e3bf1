#include <cmath>

#include "glay/kernels.hpp"

namespace glay::kernels {
namespace {

Force2 repel_all_scalar(const double* xs, const double* ys, std::size_t n, std::size_t v,
                        double k2) {
  const double px = xs[v], py = ys[v];
  Force2 f;
  for (std::size_t u = 0; u < n; ++u) {
    double dx = px - xs[u];
    double dy = py - ys[u];
    double d2 = dx * dx + dy * dy;
    if (d2 > 0.0) {
      double w = k2 / d2;
      f.x += dx * w;
      f.y += dy * w;
    }
  }
  return f;
}

Force2 repel_weighted_scalar(const double* xs, const double* ys, const double* w, std::size_t n,
                             std::size_t v, double ck2) {
  const double px = xs[v], py = ys[v];
  Force2 f;
  for (std::size_t u = 0; u < n; ++u) {
    double dx = px - xs[u];
    double dy = py - ys[u];
    double d2 = dx * dx + dy * dy;
    if (d2 > 0.0) {
      double s = ck2 * w[u] / d2;
      f.x += dx * s;
      f.y += dy * s;
    }
  }
  return f;
}

double stress_terms_scalar(const double* xs, const double* ys, const double* drow, std::size_t i,
                           std::size_t n, bool inverse_square) {
  const double px = xs[i], py = ys[i];
  double acc = 0.0;
  for (std::size_t j = i + 1; j < n; ++j) {
    double dx = px - xs[j];
    double dy = py - ys[j];
    double dist = std::sqrt(dx * dx + dy * dy);
    double diff = dist - drow[j];
    double w = inverse_square ? 1.0 / (drow[j] * drow[j]) : 1.0;
    acc += 0.5 * w * diff * diff;
  }
  return acc;
}

SmacofAccum smacof_terms_scalar(const double* xs, const double* ys, const double* drow,
                                std::size_t i, std::size_t n, bool inverse_square) {
  const double px = xs[i], py = ys[i];
  SmacofAccum a;
  for (std::size_t j = 0; j < n; ++j) {
    double dx = px - xs[j];
    double dy = py - ys[j];
    double d2 = dx * dx + dy * dy;
    if (d2 > 0.0) {
      double dist = std::sqrt(d2);
      double w = inverse_square ? 1.0 / (drow[j] * drow[j]) : 1.0;
      double ratio = drow[j] / dist;
      a.num_x += w * (xs[j] + ratio * dx);
      a.num_y += w * (ys[j] + ratio * dy);
      a.den += w;
    }
  }
  return a;
}

KkDerivatives kk_derivatives_scalar(const double* xs, const double* ys, const double* krow,
                                    const double* lrow, std::size_t m, std::size_t n) {
  const double px = xs[m], py = ys[m];
  KkDerivatives d;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = px - xs[i];
    double dy = py - ys[i];
    double d2 = dx * dx + dy * dy;
    if (d2 > 0.0) {
      double dist = std::sqrt(d2);
      double k = krow[i];
      double r = lrow[i] / dist;     // l / dist
      double q = r / d2;             // l / dist^3
      d.ex += k * dx * (1.0 - r);
      d.ey += k * dy * (1.0 - r);
      d.exx += k * (1.0 - q * dy * dy);
      d.eyy += k * (1.0 - q * dx * dx);
      d.exy += k * q * dx * dy;
    }
  }
  return d;
}

double kk_vertex_energy_scalar(const double* xs, const double* ys, const double* krow,
                               const double* lrow, std::size_t m, std::size_t n) {
  const double px = xs[m], py = ys[m];
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = px - xs[i];
    double dy = py - ys[i];
    double dist = std::sqrt(dx * dx + dy * dy);
    double diff = dist - lrow[i];
    acc += 0.5 * krow[i] * diff * diff;
  }
  return acc;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{
      "scalar",
      repel_all_scalar,
      repel_weighted_scalar,
      stress_terms_scalar,
      smacof_terms_scalar,
      kk_derivatives_scalar,
      kk_vertex_energy_scalar,
  };
  return table;
}

}  // namespace glay::kernels
