#include "glay/grip.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "glay/error.hpp"
#include "glay/rng.hpp"

namespace glay {

namespace {

// true when some marked vertex lies within `radius` hops of v
bool marked_within(const Graph& g, vertex_t v, int radius, const std::vector<char>& marked,
                   std::vector<int>& dist, std::vector<vertex_t>& touched) {
  bool hit = marked[v];
  std::deque<vertex_t> queue;
  dist[v] = 0;
  touched.push_back(v);
  queue.push_back(v);
  while (!queue.empty() && !hit) {
    vertex_t u = queue.front();
    queue.pop_front();
    if (dist[u] == radius) continue;
    for (vertex_t w : g.adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        touched.push_back(w);
        queue.push_back(w);
        if (marked[w]) {
          hit = true;
          break;
        }
      }
  }
  for (vertex_t t : touched) dist[t] = -1;
  touched.clear();
  return hit;
}

}  // namespace

Filtration mis_filtration(const Graph& g, std::uint64_t seed) {
  if (g.n == 0) throw precondition_error("empty graph");
  Filtration f;
  Rng rng(seed);
  std::vector<vertex_t> order(g.n);
  for (vertex_t v = 0; v < g.n; ++v) order[v] = v;
  rng.shuffle(order);
  f.levels.push_back(order);

  int level_cap = 2 * eccentricity(g, 0);  // diameter <= twice any eccentricity
  std::vector<int> dist(g.n, -1);
  std::vector<vertex_t> touched;
  touched.reserve(g.n);
  int i = 1;
  while (f.levels.back().size() > 3) {
    int bound = i >= 31 ? level_cap + 1 : (1 << i);  // required pairwise distance 2^i
    if (bound > level_cap) break;
    std::vector<vertex_t> scan = f.levels.back();
    rng.shuffle(scan);
    std::vector<char> chosen(g.n, 0);
    std::vector<vertex_t> level;
    for (vertex_t v : scan)
      if (!marked_within(g, v, bound - 1, chosen, dist, touched)) {
        chosen[v] = 1;
        level.push_back(v);
      }
    f.levels.push_back(std::move(level));
    ++i;
  }
  f.level_of.assign(g.n, 0);
  for (std::size_t lv = 1; lv < f.levels.size(); ++lv)
    for (vertex_t v : f.levels[lv]) f.level_of[v] = static_cast<int>(lv);
  return f;
}

std::vector<std::pair<vertex_t, int>> grip_neighborhood(const Graph& g, vertex_t v,
                                                        const std::vector<char>& in_level,
                                                        std::size_t cap) {
  std::vector<int> dist(g.n, -1);
  std::deque<vertex_t> queue;
  dist[v] = 0;
  queue.push_back(v);
  std::vector<std::pair<vertex_t, int>> out;
  while (!queue.empty() && out.size() < cap) {
    vertex_t u = queue.front();
    queue.pop_front();
    if (u != v && in_level[u]) out.emplace_back(u, dist[u]);
    for (vertex_t w : g.adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return out;
}

namespace {

// the `want` placed vertices closest to v, nearest first, with hop distances
std::vector<std::pair<vertex_t, int>> k_nearest_placed(const Graph& g, vertex_t v,
                                                       const std::vector<char>& placed,
                                                       std::size_t want) {
  std::vector<int> dist(g.n, -1);
  std::deque<vertex_t> queue;
  dist[v] = 0;
  queue.push_back(v);
  std::vector<std::pair<vertex_t, int>> out;
  while (!queue.empty() && out.size() < want) {
    vertex_t u = queue.front();
    queue.pop_front();
    if (u != v && placed[u]) out.emplace_back(u, dist[u]);
    for (vertex_t w : g.adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return out;
}

// least-squares point matching three hop distances to placed anchors
void trilaterate(const Layout& l, const std::vector<std::pair<vertex_t, int>>& anchors,
                 double& out_x, double& out_y, Rng& rng) {
  auto [a0, d0] = anchors[0];
  auto [a1, d1] = anchors[1];
  auto [a2, d2] = anchors[2];
  double x0 = l.x[a0], y0 = l.y[a0];
  // subtracting |p - p0|^2 = d0^2 from the other two equations linearizes
  double m00 = 2.0 * (l.x[a1] - x0), m01 = 2.0 * (l.y[a1] - y0);
  double m10 = 2.0 * (l.x[a2] - x0), m11 = 2.0 * (l.y[a2] - y0);
  double r1 = static_cast<double>(d0) * d0 - static_cast<double>(d1) * d1 +
              (l.x[a1] * l.x[a1] + l.y[a1] * l.y[a1]) - (x0 * x0 + y0 * y0);
  double r2 = static_cast<double>(d0) * d0 - static_cast<double>(d2) * d2 +
              (l.x[a2] * l.x[a2] + l.y[a2] * l.y[a2]) - (x0 * x0 + y0 * y0);
  double det = m00 * m11 - m01 * m10;
  double scale = std::fabs(m00) + std::fabs(m01) + std::fabs(m10) + std::fabs(m11);
  if (std::fabs(det) > 1e-9 * scale * scale) {
    out_x = (r1 * m11 - r2 * m01) / det;
    out_y = (m00 * r2 - m10 * r1) / det;
    return;
  }
  // collinear anchors: settle near the closest one
  double mag = 0.25 * (1.0 + d0) * std::sqrt(rng.uniform());
  auto [ux, uy] = rng.unit_vec();
  out_x = x0 + mag * ux;
  out_y = y0 + mag * uy;
}

}  // namespace

Layout grip_layout(const Graph& g, const GripParams& p, std::uint64_t seed) {
  if (g.n == 0) return Layout{};
  for (const auto& comp : connected_components(g))
    if (comp.size() != g.n) throw precondition_error("filtration layout needs a connected graph");

  Filtration f = mis_filtration(g, seed);
  const int top = static_cast<int>(f.levels.size()) - 1;

  Layout l;
  l.resize(g.n);
  std::vector<char> placed(g.n, 0);

  // coarsest level: direct construction from pairwise distances
  {
    const auto& lv = f.levels[top];
    std::vector<vertex_t> srcs(lv.begin(), lv.end());
    DistanceMatrix d = bfs_apsp(g, srcs);
    if (lv.size() >= 1) {
      l.x[lv[0]] = 0.0;
      l.y[lv[0]] = 0.0;
      placed[lv[0]] = 1;
    }
    if (lv.size() >= 2) {
      double d01 = d.rows[0][lv[1]];
      l.x[lv[1]] = d01;
      l.y[lv[1]] = 0.0;
      placed[lv[1]] = 1;
    }
    if (lv.size() >= 3) {
      double d01 = d.rows[0][lv[1]];
      double d02 = d.rows[0][lv[2]];
      double d12 = d.rows[1][lv[2]];
      double x = d01 > 0.0 ? (d02 * d02 + d01 * d01 - d12 * d12) / (2.0 * d01) : 0.0;
      double y2 = d02 * d02 - x * x;
      l.x[lv[2]] = x;
      l.y[lv[2]] = y2 > 0.0 ? std::sqrt(y2) : 0.0;
      placed[lv[2]] = 1;
    }
  }

  Rng rng(mix64(seed ^ 0x917bull));
  std::vector<double> heat(g.n), px(g.n, 0.0), py(g.n, 0.0);  // heat + previous disp
  std::vector<double> dx(g.n), dy(g.n);

  for (int lv = top; lv >= 0; --lv) {
    const auto& members = f.levels[lv];
    std::vector<char> in_level(g.n, 0);
    for (vertex_t v : members) in_level[v] = 1;

    // bring in this level's new vertices near their graph-distance position
    for (vertex_t v : members) {
      if (placed[v]) continue;
      auto anchors = k_nearest_placed(g, v, placed, 3);
      if (anchors.size() >= 3) {
        trilaterate(l, anchors, l.x[v], l.y[v], rng);
      } else if (!anchors.empty()) {
        double bx = 0.0, by = 0.0;
        for (auto [u, du] : anchors) {
          bx += l.x[u];
          by += l.y[u];
        }
        bx /= anchors.size();
        by /= anchors.size();
        double mag = 0.25 * (1.0 + anchors[0].second) * std::sqrt(rng.uniform());
        auto [ux, uy] = rng.unit_vec();
        l.x[v] = bx + mag * ux;
        l.y[v] = by + mag * uy;
      }
      placed[v] = 1;
    }

    // per-level force model over capped in-level neighborhoods
    std::vector<std::vector<std::pair<vertex_t, int>>> hood(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      hood[i] = grip_neighborhood(g, members[i], in_level, p.neighborhood_cap);

    double heat_init = p.heat0 * std::pow(4.0, lv);
    for (vertex_t v : members) {
      heat[v] = heat_init;
      px[v] = 0.0;
      py[v] = 0.0;
    }

    for (int round = 0; round < p.rounds; ++round) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        vertex_t v = members[i];
        double fx = 0.0, fy = 0.0;
        for (auto [u, hops] : hood[i]) {
          double ddx = l.x[u] - l.x[v];
          double ddy = l.y[u] - l.y[v];
          double dist = std::sqrt(ddx * ddx + ddy * ddy);
          if (dist <= 0.0) continue;
          double ideal = static_cast<double>(hops);
          double k = 1.0 / (ideal * ideal);
          double s = k * (dist - ideal) / dist;  // spring toward ideal spacing
          fx += s * ddx;
          fy += s * ddy;
        }
        dx[v] = heat[v] * fx;
        dy[v] = heat[v] * fy;
      }
      for (vertex_t v : members) {
        double dot = dx[v] * px[v] + dy[v] * py[v];
        double na = std::sqrt(dx[v] * dx[v] + dy[v] * dy[v]);
        double nb = std::sqrt(px[v] * px[v] + py[v] * py[v]);
        if (na > 0.0 && nb > 0.0) {
          double c = dot / (na * nb);
          if (c > 0.5) heat[v] *= p.grow;
          if (c < -0.5) heat[v] *= p.shrink;
          heat[v] = std::clamp(heat[v], p.heat_min * heat_init, p.heat_max * heat_init);
        }
        l.x[v] += dx[v];
        l.y[v] += dy[v];
        px[v] = dx[v];
        py[v] = dy[v];
      }
    }
  }

  double ext = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i)
    ext = std::max({ext, std::fabs(l.x[i]), std::fabs(l.y[i])});
  l.frame_w = l.frame_h = std::max(1.0, 2.0 * ext);
  return l;
}

Layout grip_layout(const Graph& g, int rounds, std::uint64_t seed) {
  GripParams p;
  if (rounds > 0) p.rounds = rounds;
  return grip_layout(g, p, seed);
}

}  // namespace glay
