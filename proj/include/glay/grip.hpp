#pragma once

#include <cstdint>
#include <vector>

#include "glay/graph.hpp"
#include "glay/layout.hpp"

namespace glay {

// Nested vertex subsets V0 (everything) down to a handful, where level i's
// members sit pairwise at graph distance >= 2^i and no further vertex of the
// previous level could join without breaking that bound.
struct Filtration {
  // levels[i] holds V_i in the order the greedy scan accepted its members
  // (level 0 keeps the seeded scan order of all vertices).
  std::vector<std::vector<vertex_t>> levels;
  std::vector<int> level_of;  // deepest level containing each vertex
};

// Greedy per level over a seeded shuffle of the previous level; candidate
// acceptance is checked with a breadth-first search truncated at depth
// 2^i - 1.  Construction stops once a level has <= 3 vertices or the distance
// bound exceeds the graph diameter.
Filtration mis_filtration(const Graph& g, std::uint64_t seed);

struct GripParams {
  int rounds = 30;                  // force rounds per level
  std::size_t neighborhood_cap = 50;
  double heat0 = 0.10;              // initial heat = heat0 * 4^level
  double grow = 1.3, shrink = 0.7;  // heat response to displacement alignment
  double heat_min = 0.01, heat_max = 4.0;  // bounds as multiples of initial
};

// Filtration-based layout: place levels coarsest-to-finest (each new vertex
// positioned from graph distances to its 3 nearest already-placed vertices),
// then relax each level with heat-scaled spring forces over capped
// neighborhoods within the level.
Layout grip_layout(const Graph& g, const GripParams& p, std::uint64_t seed);
Layout grip_layout(const Graph& g, int rounds, std::uint64_t seed);

// The force targets used at one level: members of `members` within reach of
// v by BFS, nearest first, truncated to `cap`; second of each pair is the hop
// distance.  Exposed for verification against plain BFS.
std::vector<std::pair<vertex_t, int>> grip_neighborhood(const Graph& g, vertex_t v,
                                                        const std::vector<char>& in_level,
                                                        std::size_t cap);

}  // namespace glay
