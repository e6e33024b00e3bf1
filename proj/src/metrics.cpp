#include "glay/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "glay/error.hpp"
#include "glay/kernels.hpp"
#include "glay/manifold.hpp"

namespace glay {

namespace {

void require_full_reachable(const Layout& l, const DistanceMatrix& dm) {
  if (dm.n != l.size() || !dm.full())
    throw precondition_error("stress needs a full distance matrix over the layout");
  for (const auto& row : dm.rows)
    for (double d : row)
      if (d == DistanceMatrix::kUnreachable)
        throw precondition_error("stress undefined on a disconnected graph");
}

}  // namespace

double stress(const Layout& l, const DistanceMatrix& dm, Weighting w) {
  require_full_reachable(l, dm);
  const auto& k = kernels::active_kernels();
  const std::size_t n = l.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    total += k.stress_terms(l.x.data(), l.y.data(), dm.rows[i].data(), i, n,
                            w == Weighting::inverse_square);
  return total;
}

double normalized_stress(const Layout& l, const DistanceMatrix& dm) {
  require_full_reachable(l, dm);
  const std::size_t n = l.size();
  if (n < 2) return 0.0;
  double a = 0.0, b = 0.0, c = 0.0;  // sum delta^2, sum delta*d, sum d^2
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double dx = l.x[i] - l.x[j];
      double dy = l.y[i] - l.y[j];
      double delta = std::sqrt(dx * dx + dy * dy);
      double d = dm.rows[i][j];
      a += delta * delta;
      b += delta * d;
      c += d * d;
    }
  if (c == 0.0) return 0.0;
  if (a == 0.0) return 1.0;
  return std::max(0.0, 1.0 - (b * b) / (a * c));
}

namespace {

double orient(double ax, double ay, double bx, double by, double cx, double cy) {
  return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

}  // namespace

long long count_crossings(const Layout& l, const Graph& g) {
  long long count = 0;
  const auto& e = g.edges;
  for (std::size_t i = 0; i < e.size(); ++i) {
    auto [a, b] = e[i];
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      auto [c, d] = e[j];
      if (a == c || a == d || b == c || b == d) continue;
      double o1 = orient(l.x[a], l.y[a], l.x[b], l.y[b], l.x[c], l.y[c]);
      double o2 = orient(l.x[a], l.y[a], l.x[b], l.y[b], l.x[d], l.y[d]);
      double o3 = orient(l.x[c], l.y[c], l.x[d], l.y[d], l.x[a], l.y[a]);
      double o4 = orient(l.x[c], l.y[c], l.x[d], l.y[d], l.x[b], l.y[b]);
      if (o1 * o2 < 0.0 && o3 * o4 < 0.0) ++count;
    }
  }
  return count;
}

EdgeLengthStats edge_length_stats(const Layout& l, const Graph& g) {
  if (g.edges.empty()) throw precondition_error("edge statistics need at least one edge");
  EdgeLengthStats s;
  double sum = 0.0, sum2 = 0.0;
  for (auto [u, v] : g.edges) {
    double len;
    if (l.space == Space::euclidean2d) {
      double dx = l.x[u] - l.x[v];
      double dy = l.y[u] - l.y[v];
      len = std::sqrt(dx * dx + dy * dy);
    } else {
      len = geodesic_distance(manifold_point(l, u), manifold_point(l, v));
    }
    sum += len;
    sum2 += len * len;
  }
  double m = static_cast<double>(g.edges.size());
  s.mean = sum / m;
  double var = std::max(0.0, sum2 / m - s.mean * s.mean);
  s.rel_std = s.mean > 0.0 ? std::sqrt(var) / s.mean : 0.0;
  return s;
}

double min_vertex_separation(const Layout& l) {
  const std::size_t n = l.size();
  if (n < 2) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double dx = l.x[i] - l.x[j];
      double dy = l.y[i] - l.y[j];
      best = std::min(best, dx * dx + dy * dy);
    }
  return std::sqrt(best);
}

}  // namespace glay
