#pragma once

#include <cstdint>

#include "glay/graph.hpp"
#include "glay/layout.hpp"

namespace glay {

enum class Weighting { uniform, inverse_square };

// Distance-scaling energy of a Euclidean drawing against graph distances:
//   sum_{i<j} 0.5 * w_ij * (|p_i - p_j| - d_ij)^2
// with w_ij = 1 (uniform) or d_ij^-2.  Requires a full matrix over a
// connected graph; throws precondition_error otherwise.
double stress(const Layout& l, const DistanceMatrix& dm, Weighting w = Weighting::uniform);

// Scale-free drawing badness in [0, 1]: the uniform stress after the drawing
// is rescaled by its optimal factor s* = sum(delta*d) / sum(delta^2), divided
// by the stress of a drawing collapsed to a point (0.5 * sum d^2).  Closed
// form 1 - B^2/(A*C) with A = sum delta^2, B = sum delta*d, C = sum d^2.
// 0 means perfectly proportional distances; 1 means no correlation at all.
double normalized_stress(const Layout& l, const DistanceMatrix& dm);

// Number of unordered edge pairs that properly cross (interiors intersect at
// one point).  Pairs sharing an endpoint, touching configurations, and
// collinear overlaps count as zero.
long long count_crossings(const Layout& l, const Graph& g);

struct EdgeLengthStats {
  double mean = 0.0;
  double rel_std = 0.0;  // standard deviation / mean (0 when mean == 0)
};

EdgeLengthStats edge_length_stats(const Layout& l, const Graph& g);

// Smallest pairwise distance between drawn vertices (0 for n < 2).
double min_vertex_separation(const Layout& l);

struct QualityReport {
  double stress_value = -1.0;        // -1 = not computed
  double normalized = -1.0;          // -1 = not computed
  double initial_stress = -1.0;      // -1 = unknown
  double geodesic = -1.0;            // curved-space stress; -1 = not computed
  long long crossings = -1;          // -1 = not computed
  double edge_mean = 0.0;
  double edge_rel_std = 0.0;
  double min_separation = -1.0;      // -1 = not computed
  long long runtime_ms = 0;
};

}  // namespace glay
