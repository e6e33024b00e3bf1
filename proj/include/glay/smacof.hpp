#pragma once

#include <cstdint>

#include "glay/graph.hpp"
#include "glay/layout.hpp"
#include "glay/metrics.hpp"

namespace glay {

// One majorization update of the stress function: every point moves to
//   p_i' = sum_j w_ij * (p_j + d_ij * (p_i - p_j) / |p_i - p_j|) / sum_j w_ij
// evaluated against the incoming positions (all points move simultaneously).
// This is the minimizer of the standard majorizing quadratic, so
// stress(new) <= stress(old) always.  Exactly coincident pairs are nudged
// apart deterministically before the update.
Layout smacof_step(const Layout& l, const DistanceMatrix& dm, Weighting w);

struct StressResult {
  Layout layout;
  int iterations = 0;
  double final_stress = 0.0;
};

// Majorization from `init` until the relative stress drop falls below tol.
StressResult stress_layout(const Graph& g, Weighting w, double tol, int max_iters,
                           Layout init);

// Same, starting from a seeded random layout in a diameter-sized frame.
StressResult stress_layout(const Graph& g, Weighting w, double tol, int max_iters,
                           std::uint64_t seed);

}  // namespace glay
