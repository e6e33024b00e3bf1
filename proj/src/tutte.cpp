#include "glay/tutte.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "glay/error.hpp"

namespace glay {

std::vector<std::pair<double, double>> regular_polygon(std::size_t m, double r) {
  std::vector<std::pair<double, double>> poly;
  poly.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    double a = 6.283185307179586476925287 * static_cast<double>(i) / static_cast<double>(m);
    poly.emplace_back(r * std::cos(a), r * std::sin(a));
  }
  return poly;
}

namespace {

void require_strictly_convex(const std::vector<std::pair<double, double>>& poly) {
  const std::size_t m = poly.size();
  double sign = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    auto [ax, ay] = poly[i];
    auto [bx, by] = poly[(i + 1) % m];
    auto [cx, cy] = poly[(i + 2) % m];
    double cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    if (cross == 0.0) throw precondition_error("pinned polygon is not strictly convex");
    if (sign == 0.0)
      sign = cross;
    else if (sign * cross < 0.0)
      throw precondition_error("pinned polygon is not convex");
  }
}

// Dense Gaussian elimination with partial pivoting; b has two columns.
void solve_two_rhs(std::vector<std::vector<double>>& a, std::vector<double>& bx,
                   std::vector<double>& by) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (a[piv][col] == 0.0) throw precondition_error("singular barycentric system");
    std::swap(a[col], a[piv]);
    std::swap(bx[col], bx[piv]);
    std::swap(by[col], by[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      bx[r] -= f * bx[col];
      by[r] -= f * by[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double sx = bx[i], sy = by[i];
    for (std::size_t c = i + 1; c < n; ++c) {
      sx -= a[i][c] * bx[c];
      sy -= a[i][c] * by[c];
    }
    bx[i] = sx / a[i][i];
    by[i] = sy / a[i][i];
  }
}

}  // namespace

Layout tutte_layout(const Graph& g, std::span<const vertex_t> fixed, const TutteOptions& opt) {
  if (fixed.size() < 3) throw precondition_error("need at least 3 pinned vertices");
  std::set<vertex_t> fixed_set;
  for (vertex_t v : fixed) {
    if (v >= g.n) throw precondition_error("pinned vertex out of range");
    if (!fixed_set.insert(v).second) throw precondition_error("pinned vertex repeated");
  }
  auto poly = opt.polygon.empty() ? regular_polygon(fixed.size(), 0.5) : opt.polygon;
  if (poly.size() != fixed.size())
    throw precondition_error("polygon size does not match pinned vertex count");
  require_strictly_convex(poly);

  // every free vertex must have a path to the pinned set, else its position
  // is undetermined
  {
    std::vector<char> reach(g.n, 0);
    std::deque<vertex_t> queue;
    for (vertex_t v : fixed) {
      reach[v] = 1;
      queue.push_back(v);
    }
    while (!queue.empty()) {
      vertex_t u = queue.front();
      queue.pop_front();
      for (vertex_t w : g.adj[u])
        if (!reach[w]) {
          reach[w] = 1;
          queue.push_back(w);
        }
    }
    for (vertex_t v = 0; v < g.n; ++v)
      if (!reach[v])
        throw precondition_error("vertex " + std::to_string(v) +
                                 " has no path to the pinned face");
  }

  Layout l;
  l.resize(g.n);
  std::vector<char> is_fixed(g.n, 0);
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    is_fixed[fixed[i]] = 1;
    l.x[fixed[i]] = poly[i].first;
    l.y[fixed[i]] = poly[i].second;
  }
  std::vector<vertex_t> free_verts;
  for (vertex_t v = 0; v < g.n; ++v)
    if (!is_fixed[v]) free_verts.push_back(v);

  if (opt.direct) {
    // deg(v) * p_v - sum_{u free neighbor} p_u = sum_{u pinned neighbor} p_u
    const std::size_t f = free_verts.size();
    if (f > 1200)
      throw precondition_error("direct solve capped at 1200 free vertices; use sweeps");
    std::vector<std::size_t> index(g.n, 0);
    for (std::size_t i = 0; i < f; ++i) index[free_verts[i]] = i;
    std::vector<std::vector<double>> a(f, std::vector<double>(f, 0.0));
    std::vector<double> bx(f, 0.0), by(f, 0.0);
    for (std::size_t i = 0; i < f; ++i) {
      vertex_t v = free_verts[i];
      a[i][i] = static_cast<double>(g.degree(v));
      for (vertex_t u : g.adj[v]) {
        if (is_fixed[u]) {
          bx[i] += l.x[u];
          by[i] += l.y[u];
        } else {
          a[i][index[u]] -= 1.0;
        }
      }
    }
    solve_two_rhs(a, bx, by);
    for (std::size_t i = 0; i < f; ++i) {
      l.x[free_verts[i]] = bx[i];
      l.y[free_verts[i]] = by[i];
    }
  } else {
    const auto& order = opt.sweep_order.empty() ? free_verts : opt.sweep_order;
    for (vertex_t v : order)
      if (v >= g.n || is_fixed[v]) throw precondition_error("bad sweep order entry");
    for (long sweep = 0; sweep < opt.max_sweeps; ++sweep) {
      double worst = 0.0;
      for (vertex_t v : order) {
        double sx = 0.0, sy = 0.0;
        for (vertex_t u : g.adj[v]) {
          sx += l.x[u];
          sy += l.y[u];
        }
        double deg = static_cast<double>(g.degree(v));
        double nx = sx / deg, ny = sy / deg;
        worst = std::max({worst, std::fabs(nx - l.x[v]), std::fabs(ny - l.y[v])});
        l.x[v] = nx;
        l.y[v] = ny;
      }
      if (worst < opt.tol) break;
    }
  }

  double ext = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i)
    ext = std::max({ext, std::fabs(l.x[i]), std::fabs(l.y[i])});
  l.frame_w = l.frame_h = std::max(1.0, 2.0 * ext);
  return l;
}

}  // namespace glay
