#pragma once

#include <span>
#include <utility>
#include <vector>

#include "glay/graph.hpp"
#include "glay/layout.hpp"

namespace glay {

// Barycentric layout: a chosen face is pinned to a strictly convex polygon
// and every free vertex ends at the average of its neighbors.  For a planar
// 3-connected graph with a face pinned this gives a planar straight-line
// drawing with convex faces; the solution of the underlying linear system is
// unique whenever every free vertex can reach the pinned set.
struct TutteOptions {
  bool direct = false;       // solve the system by elimination instead of sweeps
  double tol = 1e-10;        // sweep convergence: largest coordinate move
  long max_sweeps = 1000000;
  // Optional positions for the pinned vertices (same order as `fixed`);
  // empty = regular polygon of circumradius 0.5.  Must be strictly convex
  // and given in boundary order.
  std::vector<std::pair<double, double>> polygon;
  // Optional update order for the relaxation sweeps (free vertices only);
  // empty = ascending id.  The fixed point reached is the same either way.
  std::vector<vertex_t> sweep_order;
};

Layout tutte_layout(const Graph& g, std::span<const vertex_t> fixed,
                    const TutteOptions& opt = {});

// Positions of a regular m-gon, circumradius r, counterclockwise from (r, 0).
std::vector<std::pair<double, double>> regular_polygon(std::size_t m, double r);

}  // namespace glay
