#pragma once

#include <array>

#include "glay/layout.hpp"

namespace glay {

// A point of the sphere (unit 3-vector) or the hyperbolic plane (Poincare
// disk pair; c[2] unused).  Layout storage matches: sphere keeps x/y/z,
// hyperbolic keeps disk coordinates in x/y.
struct ManifoldPoint {
  Space space = Space::sphere;
  std::array<double, 3> c{0.0, 0.0, 0.0};
};

// Components of a tangent vector in the canonical orthonormal frame at its
// base point.  The frame is a deterministic function of the base alone, so
// lifting and unlifting through the same base is exactly consistent.
struct TangentVector {
  ManifoldPoint base;
  double u = 0.0, v = 0.0;

  double norm() const;
};

ManifoldPoint manifold_point(const Layout& l, std::size_t i);
void set_manifold_point(Layout& l, std::size_t i, const ManifoldPoint& p);

// Geodesic distance: great-circle angle on the sphere, Poincare metric in
// the disk.  Throws precondition_error when the spaces differ.
double geodesic_distance(const ManifoldPoint& a, const ManifoldPoint& b);

// The lift: maps y to the tangent plane at x, preserving distance from the
// origin (|log_map(x,y)| = d(x,y)) and angles about it.  At the cut locus of
// the sphere (y antipodal to x) the direction is ambiguous; the frame's first
// axis is chosen.
TangentVector log_map(const ManifoldPoint& x, const ManifoldPoint& y);

// The inverse: walks from the base along the geodesic the components point
// at, for arc length |t|.  exp_map(log_map(x, y)) == y up to roundoff.
ManifoldPoint exp_map(const TangentVector& t);

// The canonical frame at x as two ambient vectors (sphere: tangent 3-vectors;
// hyperbolic: hyperboloid-model tangent vectors).  Exposed for tests.
void tangent_frame(const ManifoldPoint& x, std::array<double, 3>& e1, std::array<double, 3>& e2);

// Hyperboloid <-> Poincare disk conversions (hyperbolic internals, exposed
// for tests): the hyperboloid sheet is {x : -x0^2 + x1^2 + x2^2 = -1, x0 > 0}.
std::array<double, 3> disk_to_hyperboloid(double px, double py);
std::array<double, 2> hyperboloid_to_disk(const std::array<double, 3>& h);

}  // namespace glay
