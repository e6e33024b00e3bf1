#include "glay/pivot.hpp"

#include <algorithm>
#include <cmath>

#include "glay/error.hpp"
#include "glay/rng.hpp"

namespace glay {

namespace {

// y <- M v for the n x h column-centered matrix held column-major.
void apply_ctc(const std::vector<double>& c, std::size_t n, std::size_t h,
               const std::vector<double>& v, std::vector<double>& tmp_n,
               std::vector<double>& out_h) {
  for (std::size_t i = 0; i < n; ++i) tmp_n[i] = 0.0;
  for (std::size_t j = 0; j < h; ++j) {
    const double* col = c.data() + j * n;
    double vj = v[j];
    if (vj == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) tmp_n[i] += col[i] * vj;
  }
  for (std::size_t j = 0; j < h; ++j) {
    const double* col = c.data() + j * n;
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += col[i] * tmp_n[i];
    out_h[j] = s;
  }
}

double normalize(std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  double len = std::sqrt(s);
  if (len > 0.0)
    for (double& x : v) x /= len;
  return len;
}

}  // namespace

PivotInitResult pivot_init(const Graph& g, vertex_t h, std::uint64_t seed) {
  if (h < 3) throw precondition_error("need at least 3 pivots");
  if (h > g.n) throw precondition_error("pivot count exceeds vertex count");
  const std::size_t n = g.n;
  Rng rng(seed);

  // farthest-first traversal; the seeded start is only a vantage point and is
  // not itself kept (it may be re-chosen later on merit)
  std::vector<vertex_t> pivots;
  std::vector<double> best_d(n, 0.0);
  vertex_t start = static_cast<vertex_t>(rng.below(n));
  {
    DistanceMatrix row = bfs_apsp(g, std::vector<vertex_t>{start});
    vertex_t far = 0;
    double fd = -1.0;
    for (vertex_t v = 0; v < n; ++v) {
      double d = row.rows[0][v];
      if (d == DistanceMatrix::kUnreachable)
        throw precondition_error("pivot placement undefined on a disconnected graph");
      if (d > fd) {
        fd = d;
        far = v;
      }
    }
    pivots.push_back(far);
  }
  std::vector<std::vector<double>> pivot_rows;
  while (true) {
    DistanceMatrix row = bfs_apsp(g, std::vector<vertex_t>{pivots.back()});
    pivot_rows.push_back(row.rows[0]);
    if (pivots.size() == h) break;
    const auto& r = pivot_rows.back();
    for (vertex_t v = 0; v < n; ++v)
      best_d[v] = pivot_rows.size() == 1 ? r[v] : std::min(best_d[v], r[v]);
    vertex_t far = 0;
    double fd = -1.0;
    for (vertex_t v = 0; v < n; ++v)
      if (best_d[v] > fd) {
        fd = best_d[v];
        far = v;
      }
    pivots.push_back(far);
  }

  // column-major n x h matrix of -0.5 * d^2, then double-center it
  std::vector<double> c(n * static_cast<std::size_t>(h));
  for (std::size_t j = 0; j < h; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      double d = pivot_rows[j][i];
      c[j * n + i] = -0.5 * d * d;
    }
  std::vector<double> row_mean(n, 0.0), col_mean(h, 0.0);
  double grand = 0.0;
  for (std::size_t j = 0; j < h; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      double v = c[j * n + i];
      row_mean[i] += v;
      col_mean[j] += v;
      grand += v;
    }
  for (double& v : row_mean) v /= static_cast<double>(h);
  for (double& v : col_mean) v /= static_cast<double>(n);
  grand /= static_cast<double>(n) * static_cast<double>(h);
  for (std::size_t j = 0; j < h; ++j)
    for (std::size_t i = 0; i < n; ++i) c[j * n + i] += grand - row_mean[i] - col_mean[j];

  // top two eigenpairs of C^T C by power iteration with deflation
  std::vector<double> v1(h), v2(h), tmp_n(n), out(h);
  for (std::size_t j = 0; j < h; ++j) v1[j] = rng.uniform() - 0.5;
  for (std::size_t j = 0; j < h; ++j) v2[j] = rng.uniform() - 0.5;
  normalize(v1);
  double mu1 = 0.0;
  for (int it = 0; it < 500; ++it) {
    apply_ctc(c, n, h, v1, tmp_n, out);
    std::swap(v1, out);
    double len = normalize(v1);
    if (std::fabs(len - mu1) <= 1e-14 * std::max(1.0, len) && it > 2) {
      mu1 = len;
      break;
    }
    mu1 = len;
  }
  auto deflate = [&](std::vector<double>& v) {
    double dot = 0.0;
    for (std::size_t j = 0; j < h; ++j) dot += v[j] * v1[j];
    for (std::size_t j = 0; j < h; ++j) v[j] -= dot * v1[j];
  };
  deflate(v2);
  normalize(v2);
  double mu2 = 0.0;
  for (int it = 0; it < 500; ++it) {
    apply_ctc(c, n, h, v2, tmp_n, out);
    std::swap(v2, out);
    deflate(v2);
    double len = normalize(v2);
    if (std::fabs(len - mu2) <= 1e-14 * std::max(1.0, len) && it > 2) {
      mu2 = len;
      break;
    }
    mu2 = len;
  }

  // coordinates = C v_k / mu_k^(1/4); with h = n this equals classical
  // scaling's sqrt(lambda) * u since mu = lambda^2 for symmetric C
  PivotInitResult res;
  res.pivots = pivots;
  res.layout.resize(n);
  auto emit = [&](const std::vector<double>& v, double mu, std::vector<double>& coord) {
    if (mu <= 1e-12) return;  // flat direction: leave zeros
    double s = 1.0 / std::pow(mu, 0.25);
    for (std::size_t j = 0; j < h; ++j) {
      const double* col = c.data() + j * n;
      double vj = v[j] * s;
      if (vj == 0.0) continue;
      for (std::size_t i = 0; i < n; ++i) coord[i] += col[i] * vj;
    }
  };
  emit(v1, mu1, res.layout.x);
  emit(v2, mu2, res.layout.y);
  double ext = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    ext = std::max({ext, std::fabs(res.layout.x[i]), std::fabs(res.layout.y[i])});
  res.layout.frame_w = res.layout.frame_h = std::max(1.0, 2.0 * ext);
  return res;
}

}  // namespace glay
