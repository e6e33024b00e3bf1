#pragma once

#include <cstdint>

#include "glay/graph.hpp"
#include "glay/layout.hpp"
#include "glay/metrics.hpp"

namespace glay {

enum class RiemannStepper { fr, kk };

// Curved-space layout by tangent-plane lifting: each sweep visits every
// vertex, projects all others into the tangent plane at that vertex via the
// log map, computes a single-vertex Euclidean displacement there (spring
// forces or one damped Newton step), and maps the result back with the exp
// map.  Works on the unit sphere and the hyperbolic plane.
struct RiemannParams {
  Space space = Space::sphere;
  RiemannStepper stepper = RiemannStepper::fr;
  int iterations = 100;
  double c = 1.0;    // scales the natural spring length
  double t0 = -1.0;  // initial step cap; < 0 picks a per-space default
  double l0 = -1.0;  // ideal drawing diameter; < 0 picks a per-space default
};

Layout riemannian_layout(const Graph& g, const RiemannParams& p, std::uint64_t seed);

// Stress of a curved-space drawing: like the Euclidean metric but with
// geodesic distances, rescaled so graph distances map onto the drawing's
// natural scale (l0 / graph diameter).
double geodesic_stress(const Layout& l, const DistanceMatrix& dm, double l0);

}  // namespace glay
