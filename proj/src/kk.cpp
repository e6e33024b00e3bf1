#include "glay/kk.hpp"

#include <cmath>

#include "glay/error.hpp"
#include "glay/kernels.hpp"
#include "glay/rng.hpp"

namespace glay {

namespace {

void require_full_finite(const DistanceMatrix& dm) {
  if (!dm.full()) throw precondition_error("need a full distance matrix");
  for (const auto& row : dm.rows)
    for (double d : row)
      if (d == DistanceMatrix::kUnreachable)
        throw precondition_error("spring model undefined on a disconnected graph");
}

}  // namespace

KkModel kk_build(const DistanceMatrix& dm, double L0, double K) {
  require_full_finite(dm);
  const std::size_t n = dm.n;
  double diameter = dm.max_finite();
  double L = diameter > 0.0 ? L0 / diameter : L0;
  KkModel m;
  m.n = n;
  m.display_length = L0;
  m.strength = K;
  m.k.assign(n * n, 0.0);
  m.l.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double d = dm.rows[i][j];
      m.k[i * n + j] = K / (d * d);
      m.l[i * n + j] = L * d;
    }
  return m;
}

KkModel kk_build_restricted(const DistanceMatrix& dm, double radius) {
  require_full_finite(dm);
  const std::size_t n = dm.n;
  KkModel m;
  m.n = n;
  m.display_length = dm.max_finite();
  m.strength = 1.0;
  m.k.assign(n * n, 0.0);
  m.l.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double d = dm.rows[i][j];
      m.l[i * n + j] = d;
      m.k[i * n + j] = (radius < 0.0 || d <= radius) ? 1.0 / (d * d) : 0.0;
    }
  return m;
}

double kk_energy(const Layout& l, const KkModel& m) {
  // sum vertex energies and halve: each unordered pair appears twice
  double total = 0.0;
  const auto& kt = kernels::active_kernels();
  for (std::size_t v = 0; v < m.n; ++v)
    total += kt.kk_vertex_energy(l.x.data(), l.y.data(), m.krow(v), m.lrow(v), v, m.n);
  return 0.5 * total;
}

double kk_vertex_energy(const std::vector<double>& xs, const std::vector<double>& ys,
                        const KkModel& m, std::size_t v) {
  return kernels::active_kernels().kk_vertex_energy(xs.data(), ys.data(), m.krow(v), m.lrow(v),
                                                    v, m.n);
}

double kk_delta(const std::vector<double>& xs, const std::vector<double>& ys, const KkModel& m,
                std::size_t v) {
  auto d = kernels::active_kernels().kk_derivatives(xs.data(), ys.data(), m.krow(v), m.lrow(v),
                                                    v, m.n);
  return std::sqrt(d.ex * d.ex + d.ey * d.ey);
}

double kk_delta(const Layout& l, const KkModel& m, vertex_t v) {
  return kk_delta(l.x, l.y, m, v);
}

namespace {

constexpr int kInnerCap = 50;
constexpr int kMaxHalvings = 50;

// One damped update of vertex v; returns false when no acceptable step exists.
bool kk_update_vertex(std::vector<double>& xs, std::vector<double>& ys, const KkModel& m,
                      std::size_t v) {
  const auto& kt = kernels::active_kernels();
  auto d = kt.kk_derivatives(xs.data(), ys.data(), m.krow(v), m.lrow(v), v, m.n);
  double det = d.exx * d.eyy - d.exy * d.exy;
  double sx, sy;
  double scale = std::fabs(d.exx) + std::fabs(d.eyy) + std::fabs(d.exy);
  if (std::isfinite(det) && std::fabs(det) > 1e-12 * scale * scale) {
    sx = (-d.ex * d.eyy + d.ey * d.exy) / det;
    sy = (-d.ey * d.exx + d.ex * d.exy) / det;
  } else {
    // near-singular curvature: damped gradient descent
    double eta = 1.0 / (std::fabs(d.exx) + std::fabs(d.eyy) + 1e-12);
    sx = -eta * d.ex;
    sy = -eta * d.ey;
  }
  if (!std::isfinite(sx) || !std::isfinite(sy)) return false;
  double e0 = kt.kk_vertex_energy(xs.data(), ys.data(), m.krow(v), m.lrow(v), v, m.n);
  double ox = xs[v], oy = ys[v];
  for (int h = 0; h <= kMaxHalvings; ++h) {
    xs[v] = ox + sx;
    ys[v] = oy + sy;
    double e1 = kt.kk_vertex_energy(xs.data(), ys.data(), m.krow(v), m.lrow(v), v, m.n);
    if (e1 <= e0 && (xs[v] != ox || ys[v] != oy)) return true;
    sx *= 0.5;
    sy *= 0.5;
  }
  xs[v] = ox;
  ys[v] = oy;
  return false;
}

}  // namespace

KkRoundStats kk_round(std::vector<double>& xs, std::vector<double>& ys, const KkModel& m,
                      std::vector<KkMove>* trace) {
  KkRoundStats stats;
  double best = -1.0;
  for (std::size_t v = 0; v < m.n; ++v) {
    double dv = kk_delta(xs, ys, m, v);
    if (dv > best) {  // strict: lowest id wins ties
      best = dv;
      stats.vertex = v;
    }
  }
  stats.delta_before = best;
  if (best <= m.epsilon) return stats;
  std::size_t v = stats.vertex;
  for (int inner = 0; inner < kInnerCap; ++inner) {
    if (kk_delta(xs, ys, m, v) <= m.epsilon) break;
    if (!kk_update_vertex(xs, ys, m, v)) break;
    stats.moves += 1;
    if (trace) trace->push_back(KkMove{v, xs[v], ys[v]});
  }
  return stats;
}

Layout kk_layout_from(const Graph& g, const KkParams& p, Layout init,
                      std::vector<KkMove>* trace) {
  if (init.size() != g.n) throw precondition_error("initial layout size mismatch");
  DistanceMatrix dm = bfs_apsp(g);
  KkModel m = kk_build(dm, p.L0, p.K);
  m.epsilon = p.epsilon;
  long budget = p.max_rounds >= 0 ? p.max_rounds : 20L * std::max<std::size_t>(1, g.n);
  separate_coincident(init.x, init.y, 1e-9 * p.L0, mix64(0x6b6bu));
  for (long r = 0; r < budget; ++r) {
    auto stats = kk_round(init.x, init.y, m, trace);
    if (stats.delta_before <= m.epsilon) break;
    if (stats.moves == 0) break;  // best vertex is stuck; no progress possible
  }
  double ext = 0.0;
  for (std::size_t i = 0; i < init.size(); ++i)
    ext = std::max({ext, std::fabs(init.x[i]), std::fabs(init.y[i])});
  init.frame_w = init.frame_h = std::max(p.L0, 2.0 * ext);
  return init;
}

Layout kk_layout(const Graph& g, const KkParams& p, std::uint64_t seed) {
  if (g.n == 0) return Layout{};
  return kk_layout_from(g, p, init_random(g.n, seed, p.L0, p.L0));
}

}  // namespace glay
