#pragma once

#include <cstdint>
#include <vector>

#include "glay/graph.hpp"
#include "glay/layout.hpp"

namespace glay {

struct WeightedGraph {
  Graph g;
  std::vector<double> weight;  // how many original vertices each one carries
};

struct CoarsenStep {
  WeightedGraph coarse;
  std::vector<vertex_t> projection;  // fine vertex -> coarse vertex
};

// Seeded random maximal matching; matched pairs merge (weights add, parallel
// edges collapse), unmatched vertices copy through.  Scan order is a seeded
// shuffle; each vertex pairs with its unmatched neighbor earliest in that
// shuffle.  Coarse ids are assigned by ascending fine id of first encounter.
CoarsenStep match_coarsen(const WeightedGraph& wg, std::uint64_t seed);

struct CoarseHierarchy {
  std::vector<WeightedGraph> levels;  // [0] = the input graph
  std::vector<std::vector<vertex_t>> projections;  // [i]: level i id -> level i+1 id
};

// Coarsen until at most `min_size` vertices remain, a step stops shrinking
// the graph, or `max_levels` is reached.
CoarseHierarchy build_hierarchy(const Graph& g, vertex_t min_size, int max_levels,
                                std::uint64_t seed);

// The two force magnitudes of the multilevel spring model, exactly:
//   global:  f_g(x, w) = -C * w * k^2 / x          (repulsion, hence < 0)
//   local:   f_l(x, d, w) = (x - k) / d - f_g(x, w)
struct WalshawForces {
  double global = 0.0;
  double local = 0.0;
};
WalshawForces walshaw_forces(double x, double d, double w, double k, double C);

struct WalshawParams {
  double C = 0.2;
  double t0_factor = 1.0;    // initial temperature = factor * k at each level
  double tol = 0.01;         // converged when every move is <= k * tol
  double cool = 0.9;         // temperature decay per sweep
  int max_sweeps = 100;      // per level
  vertex_t min_coarse = 2;
  int max_levels = 40;
  double k_finest = 1.0;     // natural spring length at the finest level
  double level_scale = 0.7559289460184544;  // sqrt(4/7): k shrink per refinement
};

// Multilevel layout: coarsen by matching, lay out the coarsest level with
// temperature-capped sweeps of the combined force, then interpolate through
// each projection and re-run the sweeps with the spring length scaled down
// per level.
Layout walshaw_layout(const Graph& g, const WalshawParams& p, std::uint64_t seed);

}  // namespace glay
