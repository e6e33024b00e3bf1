#pragma once

// Shared test utilities.  Oracles here are deliberately written from first
// principles (plain loops, no library kernels) so they check the production
// code by an independent route.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "glay/graph.hpp"
#include "glay/layout.hpp"
#include "glay/rng.hpp"

namespace testutil {

using glay::edge_t;
using glay::Graph;
using glay::vertex_t;

// Random connected graph: a random recursive tree plus `extra` sprinkled
// edges (duplicates skipped), deterministic in the rng state.
inline Graph random_connected_graph(vertex_t n, std::size_t extra, glay::Rng& rng) {
  std::set<edge_t> edges;
  for (vertex_t v = 1; v < n; ++v)
    edges.insert({static_cast<vertex_t>(rng.below(v)), v});
  for (std::size_t i = 0; i < extra; ++i) {
    auto u = static_cast<vertex_t>(rng.below(n));
    auto v = static_cast<vertex_t>(rng.below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    edges.insert({u, v});
  }
  return Graph::build(n, {edges.begin(), edges.end()});
}

// All-pairs shortest hops by Floyd-Warshall; -1 marks unreachable.
inline std::vector<std::vector<double>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.n;
  const double inf = 1e18;
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (auto [u, v] : g.edges) d[u][v] = d[v][u] = 1.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1.0;
  return d;
}

// Proper segment crossing by the parametric method (solve for s, t in
// (0, 1)), independent of the orientation-predicate implementation.
inline bool segments_cross_parametric(double ax, double ay, double bx, double by, double cx,
                                      double cy, double dx, double dy) {
  double rx = bx - ax, ry = by - ay;
  double sx = dx - cx, sy = dy - cy;
  double denom = rx * sy - ry * sx;
  if (denom == 0.0) return false;  // parallel or collinear: not a proper crossing
  double t = ((cx - ax) * sy - (cy - ay) * sx) / denom;
  double u = ((cx - ax) * ry - (cy - ay) * rx) / denom;
  const double eps = 1e-12;
  return t > eps && t < 1.0 - eps && u > eps && u < 1.0 - eps;
}

inline long long brute_force_crossings(const glay::Layout& l, const Graph& g) {
  long long total = 0;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      auto [a, b] = g.edges[i];
      auto [c, d] = g.edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (segments_cross_parametric(l.x[a], l.y[a], l.x[b], l.y[b], l.x[c], l.y[c], l.x[d],
                                    l.y[d]))
        ++total;
    }
  return total;
}

// Cyclic Jacobi eigendecomposition of a small symmetric matrix; returns
// (eigenvalues, eigenvectors as columns), unsorted.
inline void jacobi_eigen(std::vector<std::vector<double>> a, std::vector<double>& values,
                         std::vector<std::vector<double>>& vectors) {
  const std::size_t n = a.size();
  vectors.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) vectors[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-30) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          double aip = a[i][p], aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          double api = a[p][i], aqi = a[q][i];
          a[p][i] = c * api - s * aqi;
          a[q][i] = s * api + c * aqi;
        }
        for (std::size_t i = 0; i < n; ++i) {
          double vip = vectors[i][p], viq = vectors[i][q];
          vectors[i][p] = c * vip - s * viq;
          vectors[i][q] = s * vip + c * viq;
        }
      }
  }
  values.resize(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a[i][i];
}

// Classical multidimensional scaling of a full hop-distance matrix into the
// plane: eigendecomposition of the double-centered squared-distance Gram
// matrix, top two directions scaled by sqrt(eigenvalue).
inline glay::Layout classical_scaling(const std::vector<std::vector<double>>& d) {
  const std::size_t n = d.size();
  std::vector<std::vector<double>> b(n, std::vector<double>(n, 0.0));
  std::vector<double> row_mean(n, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row_mean[i] += d[i][j] * d[i][j];
    row_mean[i] /= static_cast<double>(n);
    grand += row_mean[i];
  }
  grand /= static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b[i][j] = -0.5 * (d[i][j] * d[i][j] - row_mean[i] - row_mean[j] + grand);
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
  jacobi_eigen(b, values, vectors);
  std::size_t top1 = 0, top2 = 1;
  if (values[top2] > values[top1]) std::swap(top1, top2);
  for (std::size_t i = 2; i < n; ++i) {
    if (values[i] > values[top1]) {
      top2 = top1;
      top1 = i;
    } else if (values[i] > values[top2]) {
      top2 = i;
    }
  }
  glay::Layout l;
  l.resize(n);
  double s1 = std::sqrt(std::max(0.0, values[top1]));
  double s2 = std::sqrt(std::max(0.0, values[top2]));
  for (std::size_t i = 0; i < n; ++i) {
    l.x[i] = vectors[i][top1] * s1;
    l.y[i] = vectors[i][top2] * s2;
  }
  return l;
}

// Plain-loop stress evaluation (sum over i<j of 0.5*w*(dist-ideal)^2).
inline double naive_stress(const glay::Layout& l, const std::vector<std::vector<double>>& d,
                           bool inverse_square) {
  double total = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      double dx = l.x[i] - l.x[j], dy = l.y[i] - l.y[j];
      double dist = std::sqrt(dx * dx + dy * dy);
      double w = inverse_square ? 1.0 / (d[i][j] * d[i][j]) : 1.0;
      double diff = dist - d[i][j];
      total += 0.5 * w * diff * diff;
    }
  return total;
}

inline double max_coord_diff(const glay::Layout& a, const glay::Layout& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::fabs(a.x[i] - b.x[i]));
    worst = std::max(worst, std::fabs(a.y[i] - b.y[i]));
    if (!a.z.empty() && !b.z.empty())
      worst = std::max(worst, std::fabs(a.z[i] - b.z[i]));
  }
  return worst;
}

}  // namespace testutil
