#include "glay/manifold.hpp"

#include <algorithm>
#include <cmath>

#include "glay/error.hpp"

namespace glay {

namespace {

using V3 = std::array<double, 3>;

double dot3(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

V3 cross3(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm3(const V3& a) { return std::sqrt(dot3(a, a)); }

V3 scaled(const V3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

V3 add3(const V3& a, const V3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

// Minkowski form with signature (-, +, +); the hyperboloid sheet has
// <x, x> = -1 and its tangent vectors have positive norm.
double mdot(const V3& a, const V3& b) { return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

constexpr double kMaxReach = 18.0;  // hyperbolic arc length cap (disk saturates)

}  // namespace

std::array<double, 3> disk_to_hyperboloid(double px, double py) {
  double r2 = px * px + py * py;
  double s = 1.0 - r2;
  if (s <= 0.0) throw precondition_error("point outside the open unit disk");
  return {(1.0 + r2) / s, 2.0 * px / s, 2.0 * py / s};
}

std::array<double, 2> hyperboloid_to_disk(const std::array<double, 3>& h) {
  double denom = 1.0 + h[0];
  return {h[1] / denom, h[2] / denom};
}

ManifoldPoint manifold_point(const Layout& l, std::size_t i) {
  ManifoldPoint p;
  p.space = l.space;
  if (l.space == Space::sphere) {
    p.c = {l.x[i], l.y[i], l.z[i]};
    double n = norm3(p.c);
    if (n > 0.0) p.c = scaled(p.c, 1.0 / n);
  } else {
    p.c = {l.x[i], l.y[i], 0.0};
  }
  return p;
}

void set_manifold_point(Layout& l, std::size_t i, const ManifoldPoint& p) {
  l.x[i] = p.c[0];
  l.y[i] = p.c[1];
  if (l.space == Space::sphere) l.z[i] = p.c[2];
}

double geodesic_distance(const ManifoldPoint& a, const ManifoldPoint& b) {
  if (a.space != b.space) throw precondition_error("points live in different spaces");
  if (a.space == Space::sphere) {
    double c = norm3(cross3(a.c, b.c));
    double d = dot3(a.c, b.c);
    return std::atan2(c, d);
  }
  V3 ha = disk_to_hyperboloid(a.c[0], a.c[1]);
  V3 hb = disk_to_hyperboloid(b.c[0], b.c[1]);
  double m = -mdot(ha, hb);
  return std::acosh(std::max(1.0, m));
}

void tangent_frame(const ManifoldPoint& x, V3& e1, V3& e2) {
  if (x.space == Space::sphere) {
    // most-orthogonal coordinate axis, projected onto the tangent plane
    int k = 0;
    double best = std::fabs(x.c[0]);
    for (int i = 1; i < 3; ++i)
      if (std::fabs(x.c[i]) < best) {
        best = std::fabs(x.c[i]);
        k = i;
      }
    V3 axis{0.0, 0.0, 0.0};
    axis[k] = 1.0;
    V3 proj = add3(axis, scaled(x.c, -dot3(axis, x.c)));
    e1 = scaled(proj, 1.0 / norm3(proj));
    e2 = cross3(x.c, e1);
    return;
  }
  // hyperboloid: project spatial axes onto the tangent plane at h, then
  // Minkowski Gram-Schmidt (tangent vectors have positive Minkowski norm)
  V3 h = disk_to_hyperboloid(x.c[0], x.c[1]);
  V3 a1{0.0, 1.0, 0.0}, a2{0.0, 0.0, 1.0};
  V3 p1 = add3(a1, scaled(h, mdot(a1, h)));  // subtracting (m/<h,h>)h with <h,h> = -1
  e1 = scaled(p1, 1.0 / std::sqrt(mdot(p1, p1)));
  V3 p2 = add3(a2, scaled(h, mdot(a2, h)));
  p2 = add3(p2, scaled(e1, -mdot(p2, e1)));
  e2 = scaled(p2, 1.0 / std::sqrt(mdot(p2, p2)));
}

double TangentVector::norm() const { return std::sqrt(u * u + v * v); }

TangentVector log_map(const ManifoldPoint& x, const ManifoldPoint& y) {
  if (x.space != y.space) throw precondition_error("points live in different spaces");
  TangentVector t;
  t.base = x;
  double d = geodesic_distance(x, y);
  if (d == 0.0) return t;
  V3 e1, e2;
  tangent_frame(x, e1, e2);
  if (x.space == Space::sphere) {
    V3 u3 = add3(y.c, scaled(x.c, -dot3(x.c, y.c)));  // y minus its x-component
    double n = norm3(u3);
    if (n <= 1e-15) {  // antipodal: any direction is a geodesic; pick e1
      t.u = d;
      return t;
    }
    V3 dir = scaled(u3, 1.0 / n);
    t.u = d * dot3(dir, e1);
    t.v = d * dot3(dir, e2);
    return t;
  }
  V3 hx = disk_to_hyperboloid(x.c[0], x.c[1]);
  V3 hy = disk_to_hyperboloid(y.c[0], y.c[1]);
  V3 u3 = add3(hy, scaled(hx, mdot(hx, hy)));  // tangent component of y at x
  double n2 = mdot(u3, u3);
  if (n2 <= 1e-30) {
    t.u = d;
    return t;
  }
  V3 dir = scaled(u3, 1.0 / std::sqrt(n2));
  t.u = d * mdot(dir, e1);
  t.v = d * mdot(dir, e2);
  return t;
}

ManifoldPoint exp_map(const TangentVector& t) {
  const ManifoldPoint& x = t.base;
  double r = t.norm();
  if (r == 0.0) return x;
  V3 e1, e2;
  tangent_frame(x, e1, e2);
  ManifoldPoint out;
  out.space = x.space;
  if (x.space == Space::sphere) {
    V3 dir = add3(scaled(e1, t.u / r), scaled(e2, t.v / r));
    V3 p = add3(scaled(x.c, std::cos(r)), scaled(dir, std::sin(r)));
    out.c = scaled(p, 1.0 / norm3(p));
    return out;
  }
  double rr = std::min(r, kMaxReach);
  V3 hx = disk_to_hyperboloid(x.c[0], x.c[1]);
  V3 dir = add3(scaled(e1, t.u / r), scaled(e2, t.v / r));
  V3 p = add3(scaled(hx, std::cosh(rr)), scaled(dir, std::sinh(rr)));
  double nn = -mdot(p, p);
  if (nn > 0.0) p = scaled(p, 1.0 / std::sqrt(nn));  // settle back onto the sheet
  auto disk = hyperboloid_to_disk(p);
  double dn = std::sqrt(disk[0] * disk[0] + disk[1] * disk[1]);
  const double lim = 1.0 - 1e-12;
  if (dn >= lim) {
    disk[0] *= lim / dn;
    disk[1] *= lim / dn;
  }
  out.c = {disk[0], disk[1], 0.0};
  return out;
}

}  // namespace glay
