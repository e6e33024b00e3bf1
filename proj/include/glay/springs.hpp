#pragma once

#include <cstdint>

#include "glay/graph.hpp"
#include "glay/layout.hpp"

namespace glay {

// Logarithmic-spring layout: adjacent pairs feel c1*log(d/c2) along the edge
// (attractive past c2, repulsive inside), nonadjacent pairs repel with
// c3/sqrt(d) (or c3/d^2), and every vertex moves c4 times its net force each
// round.  All forces in a round are computed before anyone moves.
struct EadesParams {
  double c1 = 2.0;
  double c2 = 1.0;
  double c3 = 1.0;
  double c4 = 0.1;
  int iterations = 100;
  bool inverse_square_repulsion = false;
  double frame = 1.0;  // initial placement square
};

double eades_attraction(double d, const EadesParams& p);  // signed, >0 pulls together
double eades_repulsion(double d, const EadesParams& p);

Layout eades_layout(const Graph& g, const EadesParams& p, std::uint64_t seed);
Layout eades_layout_from(const Graph& g, const EadesParams& p, Layout init);

// Frame-bound spring embedder: attraction d^2/k on edges, repulsion k^2/d
// between all pairs, k = c * sqrt(frame area / n).  Displacements are capped
// by a temperature that anneals to zero and positions are clamped to the
// frame.  Forces in one round are evaluated against frozen start-of-round
// positions.
struct FrParams {
  double width = 1.0;
  double length = 1.0;
  double c = 1.0;
  int iterations = 50;
  double t0 = -1.0;  // < 0: width / 10
};

double fr_ideal_length(const FrParams& p, std::size_t n);

Layout fr_layout(const Graph& g, const FrParams& p, std::uint64_t seed);
Layout fr_layout_from(const Graph& g, const FrParams& p, Layout init);

// Same schedule, but repulsion only within `cutoff` (< 0: 2k), found through
// a uniform grid of cutoff-sized cells (9-cell neighborhood scan).
Layout fr_grid_layout(const Graph& g, const FrParams& p, double cutoff, std::uint64_t seed);

// Same schedule with tree-approximated repulsion: boxes subtending less than
// `theta` act as one mass at their centroid.  theta <= 0 is exact.
Layout fr_bh_layout(const Graph& g, const FrParams& p, double theta, std::uint64_t seed);
Layout fr_bh_layout_from(const Graph& g, const FrParams& p, double theta, Layout init);

}  // namespace glay
