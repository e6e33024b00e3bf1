#include "glay/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "glay/error.hpp"

namespace glay {

namespace {

constexpr double kCanvas = 1000.0;
constexpr double kMargin = 0.05 * kCanvas;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Projected {
  std::vector<double> px, py;
  std::vector<bool> back;  // far hemisphere (sphere only)
  double ring_cx = 0.0, ring_cy = 0.0, ring_r = -1.0;  // boundary circle, if any
};

// Maps layout coordinates onto the canvas: spherical layouts are rotated so
// the view direction looks down +z and dropped to (x, y); everything is then
// scaled uniformly to fit the margin box.
Projected project(const Layout& l, const SvgOptions& opt) {
  const std::size_t n = l.size();
  Projected out;
  out.px.resize(n);
  out.py.resize(n);
  std::vector<double> u(n), v(n);
  double lo_u = -1.0, hi_u = 1.0, lo_v = -1.0, hi_v = 1.0;

  if (l.space == Space::sphere) {
    out.back.assign(n, false);
    const double deg = 3.141592653589793 / 180.0;
    const double cl = std::cos(opt.view_lon * deg), sl = std::sin(opt.view_lon * deg);
    const double cp = std::cos(opt.view_lat * deg), sp = std::sin(opt.view_lat * deg);
    for (std::size_t i = 0; i < n; ++i) {
      // rotate longitude about z, then latitude about the new y axis
      double x1 = cl * l.x[i] + sl * l.y[i];
      double y1 = -sl * l.x[i] + cl * l.y[i];
      double z1 = l.z[i];
      double x2 = cp * x1 + sp * z1;
      double z2 = -sp * x1 + cp * z1;
      u[i] = y1;
      v[i] = z2;
      out.back[i] = x2 < 0.0;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = l.x[i];
      v[i] = l.y[i];
    }
    if (l.space == Space::euclidean2d) {
      if (n > 0) {
        lo_u = hi_u = u[0];
        lo_v = hi_v = v[0];
        for (std::size_t i = 1; i < n; ++i) {
          lo_u = std::min(lo_u, u[i]);
          hi_u = std::max(hi_u, u[i]);
          lo_v = std::min(lo_v, v[i]);
          hi_v = std::max(hi_v, v[i]);
        }
      } else {
        lo_u = lo_v = 0.0;
        hi_u = hi_v = 0.0;
      }
    }
  }

  const double span = std::max({hi_u - lo_u, hi_v - lo_v, 1e-12});
  const double scale = (kCanvas - 2.0 * kMargin) / span;
  const double cx = 0.5 * (lo_u + hi_u), cy = 0.5 * (lo_v + hi_v);
  for (std::size_t i = 0; i < n; ++i) {
    out.px[i] = kCanvas / 2.0 + (u[i] - cx) * scale;
    out.py[i] = kCanvas / 2.0 - (v[i] - cy) * scale;  // y up in layout, down in SVG
  }
  if (l.space != Space::euclidean2d) {
    out.ring_cx = kCanvas / 2.0 - cx * scale;
    out.ring_cy = kCanvas / 2.0 + cy * scale;
    out.ring_r = scale;  // unit circle: sphere silhouette / disk boundary
  }
  return out;
}

}  // namespace

std::string render_svg(const Layout& l, const Graph& g, const SvgOptions& opt) {
  if (l.size() != g.n) throw precondition_error("layout and graph sizes differ");
  Projected p = project(l, opt);

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
       "viewBox=\"0 0 1000 1000\">\n";
  s += "<rect width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";
  if (p.ring_r > 0.0)
    s += "<circle cx=\"" + num(p.ring_cx) + "\" cy=\"" + num(p.ring_cy) + "\" r=\"" +
         num(p.ring_r) + "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

  s += "<g stroke=\"#4a5568\" stroke-width=\"" + num(opt.stroke_width) + "\">\n";
  for (auto [a, b] : g.edges) {
    s += "<line x1=\"" + num(p.px[a]) + "\" y1=\"" + num(p.py[a]) + "\" x2=\"" +
         num(p.px[b]) + "\" y2=\"" + num(p.py[b]) + "\"";
    if (!p.back.empty() && p.back[a] && p.back[b]) s += " stroke-opacity=\"0.3\"";
    s += "/>\n";
  }
  s += "</g>\n<g fill=\"#c53030\">\n";
  for (std::size_t i = 0; i < l.size(); ++i) {
    s += "<circle cx=\"" + num(p.px[i]) + "\" cy=\"" + num(p.py[i]) + "\" r=\"" +
         num(opt.vertex_radius) + "\"";
    if (!p.back.empty() && p.back[i]) s += " fill-opacity=\"0.3\"";
    s += "/>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace glay
