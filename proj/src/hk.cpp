#include "glay/hk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "glay/error.hpp"
#include "glay/rng.hpp"

namespace glay {

std::vector<vertex_t> k_centers(const Graph& g, vertex_t k, const DistanceMatrix& d,
                                std::uint64_t seed) {
  if (k < 1 || k > g.n) throw precondition_error("center count out of range");
  if (!d.full() || d.n != g.n) throw precondition_error("k_centers needs full distances");
  Rng rng(seed);
  std::vector<vertex_t> centers;
  centers.reserve(k);
  centers.push_back(static_cast<vertex_t>(rng.below(g.n)));
  std::vector<double> nearest(g.n);
  for (vertex_t v = 0; v < g.n; ++v) nearest[v] = d.rows[centers[0]][v];
  while (centers.size() < k) {
    vertex_t far = 0;
    double fd = -1.0;
    for (vertex_t v = 0; v < g.n; ++v)
      if (nearest[v] > fd) {
        fd = nearest[v];
        far = v;
      }
    centers.push_back(far);
    for (vertex_t v = 0; v < g.n; ++v) nearest[v] = std::min(nearest[v], d.rows[far][v]);
  }
  return centers;
}

double covering_radius(const DistanceMatrix& d, const std::vector<vertex_t>& centers) {
  double worst = 0.0;
  for (vertex_t v = 0; v < d.n; ++v) {
    double best = std::numeric_limits<double>::infinity();
    for (vertex_t c : centers) best = std::min(best, d.rows[c][v]);
    worst = std::max(worst, best);
  }
  return worst;
}

Layout hk_local_layout(const DistanceMatrix& d, Layout l, double radius, int iterations,
                       std::vector<KkMove>* trace) {
  if (l.size() != d.n) throw precondition_error("layout size mismatch");
  KkModel m = kk_build_restricted(d, radius);
  long rounds = static_cast<long>(iterations) * static_cast<long>(d.n);
  for (long r = 0; r < rounds; ++r) {
    auto stats = kk_round(l.x, l.y, m, trace);
    if (stats.delta_before <= m.epsilon) break;
    if (stats.moves == 0) break;
  }
  return l;
}

Layout hk_layout(const Graph& g, const HkParams& p, std::uint64_t seed) {
  if (g.n == 0) return Layout{};
  if (g.n > p.max_n)
    throw precondition_error("graph too large for the dense distance matrix (n > " +
                             std::to_string(p.max_n) + "); use the filtration method instead");
  DistanceMatrix dm = bfs_apsp(g);
  for (const auto& row : dm.rows)
    for (double v : row)
      if (v == DistanceMatrix::kUnreachable)
        throw precondition_error("multiscale layout needs a connected graph");

  double frame = std::max(1.0, dm.max_finite());
  Layout l = init_random(g.n, seed, frame, frame);

  vertex_t k = std::min<vertex_t>(p.min_size, g.n);
  int level = 0;
  while (true) {
    auto centers = k_centers(g, k, dm, mix64(seed ^ (0x9e37u + level)));

    // radius: how far apart the centers sit, times the neighborhood factor
    double maxmin = 0.0;
    if (centers.size() > 1) {
      for (vertex_t c : centers) {
        double best = std::numeric_limits<double>::infinity();
        for (vertex_t o : centers)
          if (o != c) best = std::min(best, dm.rows[c][o]);
        maxmin = std::max(maxmin, best);
      }
    }
    double radius = std::max(1.0, maxmin) * p.rad;

    // relax the centers against their own distance submatrix
    DistanceMatrix dsub;
    dsub.n = static_cast<vertex_t>(centers.size());
    dsub.sources.resize(centers.size());
    dsub.rows.assign(centers.size(), std::vector<double>(centers.size()));
    for (std::size_t i = 0; i < centers.size(); ++i) {
      dsub.sources[i] = static_cast<vertex_t>(i);
      for (std::size_t j = 0; j < centers.size(); ++j)
        dsub.rows[i][j] = dm.rows[centers[i]][centers[j]];
    }
    Layout sub;
    sub.resize(centers.size());
    for (std::size_t i = 0; i < centers.size(); ++i) {
      sub.x[i] = l.x[centers[i]];
      sub.y[i] = l.y[centers[i]];
    }
    separate_coincident(sub.x, sub.y, 1e-6, mix64(seed ^ (0xc01du + level)));
    sub = hk_local_layout(dsub, std::move(sub), radius, p.iterations);
    for (std::size_t i = 0; i < centers.size(); ++i) {
      l.x[centers[i]] = sub.x[i];
      l.y[centers[i]] = sub.y[i];
    }

    // everyone else piles in near their nearest center, lightly scattered
    std::vector<vertex_t> sorted_centers = centers;
    std::sort(sorted_centers.begin(), sorted_centers.end());
    std::vector<char> is_center(g.n, 0);
    for (vertex_t c : centers) is_center[c] = 1;
    Rng scatter(mix64(seed ^ (0x5ca77e8u + level)));
    for (vertex_t v = 0; v < g.n; ++v) {
      if (is_center[v]) continue;
      vertex_t best_c = sorted_centers[0];
      double best_d = std::numeric_limits<double>::infinity();
      for (vertex_t c : sorted_centers)
        if (dm.rows[c][v] < best_d) {
          best_d = dm.rows[c][v];
          best_c = c;
        }
      double mag = p.jitter_frac * radius * std::sqrt(scatter.uniform());
      auto [ux, uy] = scatter.unit_vec();
      l.x[v] = l.x[best_c] + mag * ux;
      l.y[v] = l.y[best_c] + mag * uy;
    }

    if (k == g.n) break;
    k = std::min<vertex_t>(g.n, k * static_cast<vertex_t>(p.ratio));
    ++level;
  }

  double ext = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i)
    ext = std::max({ext, std::fabs(l.x[i]), std::fabs(l.y[i])});
  l.frame_w = l.frame_h = std::max(1.0, 2.0 * ext);
  return l;
}

}  // namespace glay
