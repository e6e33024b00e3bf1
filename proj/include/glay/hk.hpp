#pragma once

#include <cstdint>
#include <vector>

#include "glay/graph.hpp"
#include "glay/kk.hpp"
#include "glay/layout.hpp"

namespace glay {

// Farthest-first traversal: start from a seeded vertex, repeatedly add the
// vertex maximizing distance to the chosen set (lowest id on ties).  The
// start stays in the set.  Covering radius is at most twice the optimum.
std::vector<vertex_t> k_centers(const Graph& g, vertex_t k, const DistanceMatrix& d,
                                std::uint64_t seed);

// Largest distance from any vertex to its nearest member of `centers`.
double covering_radius(const DistanceMatrix& d, const std::vector<vertex_t>& centers);

// Neighborhood-restricted relaxation: iterations * |V| rounds of kk_round on
// the model with l = d, k = 1/d^2, and pairs beyond `radius` dropped.  Stops
// early once every gradient is within the model epsilon.  radius < 0 means
// unrestricted, in which case the rounds replay exactly what the global
// spring layout would do from the same start.
Layout hk_local_layout(const DistanceMatrix& d, Layout l, double radius, int iterations,
                       std::vector<KkMove>* trace = nullptr);

// Coarse-to-fine layout: lay out k centers with radius-restricted rounds,
// scatter everyone else around their nearest center, grow k by `ratio` until
// it covers the whole graph.
struct HkParams {
  int iterations = 4;
  int ratio = 3;
  double rad = 7.0;          // neighborhood radius multiplier
  vertex_t min_size = 10;    // starting center count
  vertex_t max_n = 3000;     // the dense distance matrix is n^2; refuse above
  double jitter_frac = 0.05; // scatter magnitude as a fraction of the radius
};

Layout hk_layout(const Graph& g, const HkParams& p, std::uint64_t seed);

}  // namespace glay
