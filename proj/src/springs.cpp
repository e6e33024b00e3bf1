#include "glay/springs.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "glay/error.hpp"
#include "glay/kernels.hpp"
#include "glay/quadtree.hpp"
#include "glay/rng.hpp"

namespace glay {

double eades_attraction(double d, const EadesParams& p) { return p.c1 * std::log(d / p.c2); }

double eades_repulsion(double d, const EadesParams& p) {
  return p.inverse_square_repulsion ? p.c3 / (d * d) : p.c3 / std::sqrt(d);
}

Layout eades_layout(const Graph& g, const EadesParams& p, std::uint64_t seed) {
  return eades_layout_from(g, p, init_random(g.n, seed, p.frame, p.frame));
}

Layout eades_layout_from(const Graph& g, const EadesParams& p, Layout l) {
  if (l.size() != g.n) throw precondition_error("initial layout size mismatch");
  const std::size_t n = g.n;
  std::vector<double> fx(n), fy(n), sx(n), sy(n);
  for (int it = 0; it < p.iterations; ++it) {
    separate_coincident(l.x, l.y, 1e-9, mix64(0x5eade5u ^ static_cast<std::uint64_t>(it)));
    sx = l.x;
    sy = l.y;
    std::fill(fx.begin(), fx.end(), 0.0);
    std::fill(fy.begin(), fy.end(), 0.0);
    for (vertex_t v = 0; v < n; ++v) {
      for (vertex_t u = 0; u < n; ++u) {
        if (u == v) continue;
        double dx = sx[u] - sx[v];
        double dy = sy[u] - sy[v];
        double d = std::sqrt(dx * dx + dy * dy);
        if (d <= 0.0) continue;
        double m = g.has_edge(u, v) ? eades_attraction(d, p) : -eades_repulsion(d, p);
        fx[v] += m * dx / d;
        fy[v] += m * dy / d;
      }
    }
    for (vertex_t v = 0; v < n; ++v) {
      l.x[v] += p.c4 * fx[v];
      l.y[v] += p.c4 * fy[v];
    }
  }
  return l;
}

double fr_ideal_length(const FrParams& p, std::size_t n) {
  return p.c * std::sqrt(p.width * p.length / static_cast<double>(n == 0 ? 1 : n));
}

namespace {

// One full annealing run; `repel` fills disp[] from the frozen positions.
template <class Repel>
Layout fr_run(const Graph& g, const FrParams& p, Layout l, Repel&& repel) {
  const std::size_t n = g.n;
  if (l.size() != n) throw precondition_error("initial layout size mismatch");
  const double k = fr_ideal_length(p, n);
  const double half_w = p.width * 0.5;
  const double half_l = p.length * 0.5;
  Temperature t = Temperature::inverse_linear(p.t0 < 0.0 ? p.width / 10.0 : p.t0, p.iterations);
  std::vector<double> sx(n), sy(n), dx(n), dy(n);
  for (int it = 0; it < p.iterations; ++it) {
    separate_coincident(l.x, l.y, 1e-9 * k, mix64(0xf90000u ^ static_cast<std::uint64_t>(it)));
    sx = l.x;
    sy = l.y;
    repel(sx.data(), sy.data(), dx, dy);
    for (auto [u, v] : g.edges) {
      double ddx = sx[v] - sx[u];
      double ddy = sy[v] - sy[u];
      double d = std::sqrt(ddx * ddx + ddy * ddy);
      if (d <= 0.0) continue;
      double fa = d * d / k;   // magnitude of the pull
      double ux = ddx / d, uy = ddy / d;
      dx[v] -= ux * fa;
      dy[v] -= uy * fa;
      dx[u] += ux * fa;
      dy[u] += uy * fa;
    }
    for (std::size_t v = 0; v < n; ++v) {
      double len = std::sqrt(dx[v] * dx[v] + dy[v] * dy[v]);
      if (len > 0.0) {
        double step = std::min(len, t.value);
        l.x[v] += dx[v] / len * step;
        l.y[v] += dy[v] / len * step;
      }
      l.x[v] = std::min(half_w, std::max(-half_w, l.x[v]));
      l.y[v] = std::min(half_l, std::max(-half_l, l.y[v]));
    }
    t = cool(t);
  }
  return l;
}

}  // namespace

Layout fr_layout_from(const Graph& g, const FrParams& p, Layout init) {
  const double k2 = fr_ideal_length(p, g.n) * fr_ideal_length(p, g.n);
  const auto& kt = kernels::active_kernels();
  const std::size_t n = g.n;
  return fr_run(g, p, std::move(init),
                [&](const double* sx, const double* sy, std::vector<double>& dx,
                    std::vector<double>& dy) {
                  for (std::size_t v = 0; v < n; ++v) {
                    auto f = kt.repel_all(sx, sy, n, v, k2);
                    dx[v] = f.x;
                    dy[v] = f.y;
                  }
                });
}

Layout fr_layout(const Graph& g, const FrParams& p, std::uint64_t seed) {
  return fr_layout_from(g, p, init_random(g.n, seed, p.width, p.length));
}

Layout fr_grid_layout(const Graph& g, const FrParams& p, double cutoff, std::uint64_t seed) {
  const double k = fr_ideal_length(p, g.n);
  const double r = cutoff > 0.0 ? cutoff : 2.0 * k;
  const double k2 = k * k;
  const double r2 = r * r;
  const std::size_t n = g.n;
  Layout init = init_random(n, seed, p.width, p.length);
  // a cutoff covering the frame diagonal can exclude nothing: the radius
  // test is vacuous, so take the exact all-pairs path
  if (r2 >= p.width * p.width + p.length * p.length)
    return fr_layout_from(g, p, std::move(init));
  // cell grid over the frame; positions stay clamped inside it
  const int cols = std::max(1, static_cast<int>(std::ceil(p.width / r)));
  const int rows = std::max(1, static_cast<int>(std::ceil(p.length / r)));
  std::vector<std::vector<int>> cells(static_cast<std::size_t>(cols) * rows);
  auto cell_of = [&](double x, double y) {
    int cx = std::clamp(static_cast<int>((x + p.width * 0.5) / r), 0, cols - 1);
    int cy = std::clamp(static_cast<int>((y + p.length * 0.5) / r), 0, rows - 1);
    return cy * cols + cx;
  };
  return fr_run(g, p, std::move(init),
                [&, cols, rows](const double* sx, const double* sy, std::vector<double>& dx,
                                std::vector<double>& dy) {
                  for (auto& c : cells) c.clear();
                  for (std::size_t v = 0; v < n; ++v)
                    cells[cell_of(sx[v], sy[v])].push_back(static_cast<int>(v));
                  for (std::size_t v = 0; v < n; ++v) {
                    double fx = 0.0, fy = 0.0;
                    int cx = std::clamp(static_cast<int>((sx[v] + p.width * 0.5) / r), 0, cols - 1);
                    int cy = std::clamp(static_cast<int>((sy[v] + p.length * 0.5) / r), 0, rows - 1);
                    for (int gy = std::max(0, cy - 1); gy <= std::min(rows - 1, cy + 1); ++gy)
                      for (int gx = std::max(0, cx - 1); gx <= std::min(cols - 1, cx + 1); ++gx)
                        for (int u : cells[static_cast<std::size_t>(gy) * cols + gx]) {
                          double ddx = sx[v] - sx[u];
                          double ddy = sy[v] - sy[u];
                          double d2 = ddx * ddx + ddy * ddy;
                          if (d2 > 0.0 && d2 <= r2) {
                            double w = k2 / d2;
                            fx += ddx * w;
                            fy += ddy * w;
                          }
                        }
                    dx[v] = fx;
                    dy[v] = fy;
                  }
                });
}

Layout fr_bh_layout_from(const Graph& g, const FrParams& p, double theta, Layout init) {
  const double k = fr_ideal_length(p, g.n);
  const double k2 = k * k;
  const std::size_t n = g.n;
  return fr_run(g, p, std::move(init),
                [&, theta](const double* sx, const double* sy, std::vector<double>& dx,
                           std::vector<double>& dy) {
                  QuadTree tree = QuadTree::build(sx, sy, n);
                  for (std::size_t v = 0; v < n; ++v) {
                    auto f = tree.repulsion(sx[v], sy[v], theta, k2);
                    dx[v] = f.x;
                    dy[v] = f.y;
                  }
                });
}

Layout fr_bh_layout(const Graph& g, const FrParams& p, double theta, std::uint64_t seed) {
  return fr_bh_layout_from(g, p, theta, init_random(g.n, seed, p.width, p.length));
}

}  // namespace glay
