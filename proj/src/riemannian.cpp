#include "glay/riemannian.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "glay/error.hpp"
#include "glay/kernels.hpp"
#include "glay/manifold.hpp"
#include "glay/rng.hpp"

namespace glay {

namespace {

constexpr double kSphereCap = 3.141592653589793 - 1e-3;  // stay off the cut locus

struct LiftedNeighborhood {
  std::vector<double> qx, qy;  // tangent-plane images, v itself at the origin
};

// project every vertex into the tangent plane at v
void lift_all(const Layout& l, std::size_t v, LiftedNeighborhood& out) {
  const std::size_t n = l.size();
  out.qx.resize(n);
  out.qy.resize(n);
  ManifoldPoint base = manifold_point(l, v);
  for (std::size_t u = 0; u < n; ++u) {
    if (u == v) {
      out.qx[u] = 0.0;
      out.qy[u] = 0.0;
      continue;
    }
    TangentVector t = log_map(base, manifold_point(l, u));
    out.qx[u] = t.u;
    out.qy[u] = t.v;
  }
}

}  // namespace

Layout riemannian_layout(const Graph& g, const RiemannParams& p, std::uint64_t seed) {
  if (p.space == Space::euclidean2d)
    throw precondition_error("tangent-space layout targets the sphere or hyperbolic plane");
  const std::size_t n = g.n;
  Layout l = p.space == Space::sphere ? init_random_sphere(n, seed)
                                      : init_random_disk(n, seed, 0.5);
  if (n <= 1) return l;

  DistanceMatrix dm = bfs_apsp(g);
  for (const auto& row : dm.rows)
    for (double d : row)
      if (d == DistanceMatrix::kUnreachable)
        throw precondition_error("curved-space layout needs a connected graph");
  double diameter = std::max(1.0, dm.max_finite());
  const double l0 = p.l0 > 0.0 ? p.l0 : (p.space == Space::sphere ? 0.9 * 3.141592653589793
                                                                  : 4.0);
  const double scale = l0 / diameter;  // graph hop -> arc length

  const double cap = p.space == Space::sphere ? kSphereCap : 17.0;
  const auto& kt = kernels::active_kernels();
  LiftedNeighborhood lift;

  if (p.stepper == RiemannStepper::fr) {
    const double k = p.c * std::sqrt(4.0 * 3.141592653589793 / static_cast<double>(n));
    const double k2 = k * k;
    Temperature t = Temperature::inverse_linear(p.t0 > 0.0 ? p.t0 : 0.3 * l0, p.iterations);
    for (int it = 0; it < p.iterations; ++it) {
      for (std::size_t v = 0; v < n; ++v) {
        lift_all(l, v, lift);
        auto f = kt.repel_all(lift.qx.data(), lift.qy.data(), n, v, k2);
        for (vertex_t u : g.adj[static_cast<vertex_t>(v)]) {
          double dx = lift.qx[u], dy = lift.qy[u];
          double d = std::sqrt(dx * dx + dy * dy);
          if (d <= 0.0) continue;
          double fa = d * d / k;
          f.x += dx / d * fa;
          f.y += dy / d * fa;
        }
        double len = std::sqrt(f.x * f.x + f.y * f.y);
        if (len <= 0.0) continue;
        double step = std::min({len, t.value, cap});
        TangentVector dv;
        dv.base = manifold_point(l, v);
        dv.u = f.x / len * step;
        dv.v = f.y / len * step;
        set_manifold_point(l, v, exp_map(dv));
      }
      t = cool(t);
    }
    return l;
  }

  // one damped Newton update per vertex per sweep against the lifted model
  std::vector<double> kr(n), lr(n);
  for (int it = 0; it < p.iterations; ++it) {
    for (std::size_t v = 0; v < n; ++v) {
      lift_all(l, v, lift);
      for (std::size_t u = 0; u < n; ++u) {
        double d = dm.rows[v][u];
        if (u == v || d <= 0.0) {
          kr[u] = 0.0;
          lr[u] = 0.0;
        } else {
          kr[u] = 1.0 / (d * d);
          lr[u] = scale * d;
        }
      }
      auto der = kt.kk_derivatives(lift.qx.data(), lift.qy.data(), kr.data(), lr.data(), v, n);
      double det = der.exx * der.eyy - der.exy * der.exy;
      double sx, sy;
      double sz = std::fabs(der.exx) + std::fabs(der.eyy) + std::fabs(der.exy);
      if (std::isfinite(det) && std::fabs(det) > 1e-12 * sz * sz) {
        sx = (-der.ex * der.eyy + der.ey * der.exy) / det;
        sy = (-der.ey * der.exx + der.ex * der.exy) / det;
      } else {
        double eta = 1.0 / (std::fabs(der.exx) + std::fabs(der.eyy) + 1e-12);
        sx = -eta * der.ex;
        sy = -eta * der.ey;
      }
      if (!std::isfinite(sx) || !std::isfinite(sy)) continue;
      double e0 = kt.kk_vertex_energy(lift.qx.data(), lift.qy.data(), kr.data(), lr.data(), v, n);
      for (int h = 0; h <= 50; ++h) {
        double r = std::sqrt(sx * sx + sy * sy);
        if (r == 0.0) break;
        if (r <= cap) {
          lift.qx[v] = sx;
          lift.qy[v] = sy;
          double e1 =
              kt.kk_vertex_energy(lift.qx.data(), lift.qy.data(), kr.data(), lr.data(), v, n);
          lift.qx[v] = 0.0;
          lift.qy[v] = 0.0;
          if (e1 <= e0) {
            TangentVector dv;
            dv.base = manifold_point(l, v);
            dv.u = sx;
            dv.v = sy;
            set_manifold_point(l, v, exp_map(dv));
            break;
          }
        }
        sx *= 0.5;
        sy *= 0.5;
      }
    }
  }
  return l;
}

double geodesic_stress(const Layout& l, const DistanceMatrix& dm, double l0) {
  const std::size_t n = l.size();
  if (dm.n != n || !dm.full()) throw precondition_error("need full distances");
  double diameter = std::max(1.0, dm.max_finite());
  double scale = (l0 > 0.0 ? l0 : (l.space == Space::sphere ? 0.9 * 3.141592653589793 : 4.0)) /
                 diameter;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ManifoldPoint a = manifold_point(l, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      double drawn = geodesic_distance(a, manifold_point(l, j));
      double diff = drawn - scale * dm.rows[i][j];
      total += 0.5 * diff * diff;
    }
  }
  return total;
}

}  // namespace glay
