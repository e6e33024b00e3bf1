#include "glay/walshaw.hpp"

#include <algorithm>
#include <cmath>

#include "glay/error.hpp"
#include "glay/kernels.hpp"
#include "glay/rng.hpp"

namespace glay {

CoarsenStep match_coarsen(const WeightedGraph& wg, std::uint64_t seed) {
  const Graph& g = wg.g;
  if (g.n < 2) throw precondition_error("coarsening needs at least 2 vertices");
  Rng rng(seed);
  std::vector<vertex_t> order(g.n);
  for (vertex_t v = 0; v < g.n; ++v) order[v] = v;
  rng.shuffle(order);
  std::vector<vertex_t> rank(g.n);
  for (vertex_t i = 0; i < g.n; ++i) rank[order[i]] = i;

  constexpr vertex_t kNone = static_cast<vertex_t>(-1);
  std::vector<vertex_t> mate(g.n, kNone);
  for (vertex_t v : order) {
    if (mate[v] != kNone) continue;
    vertex_t best = kNone;
    for (vertex_t u : g.adj[v])
      if (mate[u] == kNone && (best == kNone || rank[u] < rank[best])) best = u;
    if (best != kNone) {
      mate[v] = best;
      mate[best] = v;
    }
  }

  CoarsenStep step;
  step.projection.assign(g.n, kNone);
  std::vector<double> weight;
  vertex_t next = 0;
  for (vertex_t v = 0; v < g.n; ++v) {
    if (step.projection[v] != kNone) continue;
    step.projection[v] = next;
    double w = wg.weight[v];
    if (mate[v] != kNone) {
      step.projection[mate[v]] = next;
      w += wg.weight[mate[v]];
    }
    weight.push_back(w);
    ++next;
  }

  std::vector<edge_t> edges;
  for (auto [u, v] : g.edges) {
    vertex_t pu = step.projection[u], pv = step.projection[v];
    if (pu == pv) continue;
    edges.emplace_back(std::min(pu, pv), std::max(pu, pv));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  step.coarse.g = Graph::build(next, std::move(edges));
  step.coarse.weight = std::move(weight);
  return step;
}

CoarseHierarchy build_hierarchy(const Graph& g, vertex_t min_size, int max_levels,
                                std::uint64_t seed) {
  CoarseHierarchy h;
  h.levels.push_back(WeightedGraph{g, std::vector<double>(g.n, 1.0)});
  for (int lv = 0; lv < max_levels; ++lv) {
    const WeightedGraph& cur = h.levels.back();
    if (cur.g.n <= min_size) break;
    CoarsenStep step = match_coarsen(cur, mix64(seed ^ (0xc0a5ull + lv)));
    if (step.coarse.g.n >= cur.g.n) break;  // no edge matched; nothing to gain
    h.projections.push_back(std::move(step.projection));
    h.levels.push_back(std::move(step.coarse));
  }
  return h;
}

WalshawForces walshaw_forces(double x, double d, double w, double k, double C) {
  WalshawForces f;
  f.global = -C * w * k * k / x;
  f.local = (x - k) / d - f.global;
  return f;
}

namespace {

// Alg-style single-level relaxation: sequential sweeps on the live position
// array, displacement capped by a per-sweep temperature, until every move in
// a sweep is within k * tol (or the sweep budget is spent).
void walshaw_level(const WeightedGraph& wg, std::vector<double>& xs, std::vector<double>& ys,
                   double k, const WalshawParams& p, std::uint64_t salt) {
  const Graph& g = wg.g;
  const std::size_t n = g.n;
  if (n < 2) return;
  const auto& kt = kernels::active_kernels();
  const double ck2 = p.C * k * k;
  double t = p.t0_factor * k;
  for (int sweep = 0; sweep < p.max_sweeps; ++sweep) {
    separate_coincident(xs, ys, 1e-9 * k, mix64(salt ^ (0x3a11ull + sweep)));
    bool converged = true;
    for (std::size_t v = 0; v < n; ++v) {
      double old_x = xs[v], old_y = ys[v];
      // global repulsion from every other vertex, weighted by cluster size
      auto f = kt.repel_weighted(xs.data(), ys.data(), wg.weight.data(), n, v, ck2);
      // neighbors add the spring part: (x - k) / deg plus cancellation of
      // their share of the repulsion
      double deg = static_cast<double>(g.degree(v));
      for (vertex_t u : g.adj[v]) {
        double dx = xs[u] - xs[v];
        double dy = ys[u] - ys[v];
        double x = std::sqrt(dx * dx + dy * dy);
        if (x <= 0.0) continue;
        double fl = (x - k) / deg + p.C * wg.weight[u] * k * k / x;
        f.x += dx / x * fl;
        f.y += dy / x * fl;
      }
      double len = std::sqrt(f.x * f.x + f.y * f.y);
      if (len > 0.0) {
        double step = std::min(len, t);
        xs[v] += f.x / len * step;
        ys[v] += f.y / len * step;
      }
      double mx = xs[v] - old_x, my = ys[v] - old_y;
      if (std::sqrt(mx * mx + my * my) > k * p.tol) converged = false;
    }
    t *= p.cool;
    if (converged) break;
  }
}

}  // namespace

Layout walshaw_layout(const Graph& g, const WalshawParams& p, std::uint64_t seed) {
  if (g.n == 0) return Layout{};
  Layout l;
  if (g.n == 1) {
    l.resize(1);
    return l;
  }
  CoarseHierarchy h = build_hierarchy(g, p.min_coarse, p.max_levels, seed);
  const int top = static_cast<int>(h.levels.size()) - 1;

  // spring length per level: shrinks by level_scale at each refinement
  std::vector<double> k_of(h.levels.size());
  for (int lv = 0; lv <= top; ++lv)
    k_of[lv] = p.k_finest * std::pow(1.0 / p.level_scale, lv);

  // coarsest: random box sized to hold its clusters at natural spacing
  {
    const WeightedGraph& coarse = h.levels[top];
    double side = std::max(1.0, std::sqrt(static_cast<double>(coarse.g.n)) * k_of[top]);
    Layout init = init_random(coarse.g.n, mix64(seed ^ 0x1417ull), side, side);
    walshaw_level(coarse, init.x, init.y, k_of[top], p, mix64(seed ^ (0xbeull + top)));
    l = std::move(init);
  }

  for (int lv = top - 1; lv >= 0; --lv) {
    const auto& proj = h.projections[lv];
    const WeightedGraph& fine = h.levels[lv];
    Layout next;
    next.resize(fine.g.n);
    for (vertex_t v = 0; v < fine.g.n; ++v) {
      next.x[v] = l.x[proj[v]];
      next.y[v] = l.y[proj[v]];
    }
    // matched siblings land on the same spot; nudge them apart at spring scale
    separate_coincident(next.x, next.y, 0.05 * k_of[lv], mix64(seed ^ (0x51eull + lv)));
    walshaw_level(fine, next.x, next.y, k_of[lv], p, mix64(seed ^ (0xbeull + lv)));
    l = std::move(next);
  }

  double ext = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i)
    ext = std::max({ext, std::fabs(l.x[i]), std::fabs(l.y[i])});
  l.frame_w = l.frame_h = std::max(1.0, 2.0 * ext);
  return l;
}

}  // namespace glay
