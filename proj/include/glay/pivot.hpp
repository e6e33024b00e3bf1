#pragma once

#include <cstdint>
#include <vector>

#include "glay/graph.hpp"
#include "glay/layout.hpp"

namespace glay {

// Farthest-first pivot choice followed by classical scaling on the n x h
// pivot-distance matrix: square it, double-center it, and extract the two
// dominant directions by power iteration.  With h = n this reproduces full
// classical MDS coordinates.  Pivots: the first is the vertex farthest from a
// seeded start, each next maximizes distance to the chosen set (lowest id on
// ties).
struct PivotInitResult {
  Layout layout;
  std::vector<vertex_t> pivots;
};

PivotInitResult pivot_init(const Graph& g, vertex_t h, std::uint64_t seed);

}  // namespace glay
