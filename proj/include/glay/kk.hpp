#pragma once

#include <cstdint>
#include <vector>

#include "glay/graph.hpp"
#include "glay/layout.hpp"

namespace glay {

// Pairwise spring model: ideal length l_ij = L * d_ij with L = L0 / diameter,
// strength k_ij = K / d_ij^2, energy E = sum_{i<j} 0.5 * k_ij (|p_i-p_j| - l_ij)^2.
// Rows are dense with zero diagonal so the pairwise kernels can stream them.
struct KkModel {
  std::size_t n = 0;
  std::vector<double> k, l;  // n*n row-major
  double display_length = 1.0;  // L0
  double strength = 1.0;        // K
  double epsilon = 1e-4;

  const double* krow(std::size_t i) const { return k.data() + i * n; }
  const double* lrow(std::size_t i) const { return l.data() + i * n; }
};

// Throws precondition_error unless dm is full and finite.
KkModel kk_build(const DistanceMatrix& dm, double L0, double K);

// Neighborhood-limited variant used by the multiscale refiner: l_ij = d_ij,
// k_ij = 1 / d_ij^2, and pairs beyond `radius` get k_ij = 0 so they drop out
// of the energy, gradient, and Hessian entirely.  radius < 0 means no limit.
KkModel kk_build_restricted(const DistanceMatrix& dm, double radius);

double kk_energy(const Layout& l, const KkModel& m);
double kk_vertex_energy(const std::vector<double>& xs, const std::vector<double>& ys,
                        const KkModel& m, std::size_t v);

// Gradient magnitude sqrt((dE/dx_v)^2 + (dE/dy_v)^2).
double kk_delta(const Layout& l, const KkModel& m, vertex_t v);
double kk_delta(const std::vector<double>& xs, const std::vector<double>& ys, const KkModel& m,
                std::size_t v);

// Position of a vertex after one accepted update (recorded for replay tests).
struct KkMove {
  std::size_t vertex;
  double x, y;
};

// One relaxation round: pick the vertex with the largest gradient (lowest id
// wins ties), then apply damped Newton updates to it until its gradient drops
// to eps or the inner cap (50) is hit.  Near-singular 2x2 systems fall back
// to a damped gradient step; each update halves its step until the vertex
// energy does not increase and is discarded after 50 halvings.
struct KkRoundStats {
  std::size_t vertex = 0;
  double delta_before = 0.0;  // the round's max gradient magnitude
  int moves = 0;
};
KkRoundStats kk_round(std::vector<double>& xs, std::vector<double>& ys, const KkModel& m,
                      std::vector<KkMove>* trace = nullptr);

struct KkParams {
  double L0 = 1.0;
  double K = 1.0;
  double epsilon = 1e-4;
  long max_rounds = -1;  // < 0: 20 * n
};

// Rounds of kk_round until every gradient is at most epsilon (or the round
// budget runs out).  Init is uniform in an L0 x L0 square from the seed.
Layout kk_layout(const Graph& g, const KkParams& p, std::uint64_t seed);
Layout kk_layout_from(const Graph& g, const KkParams& p, Layout init,
                      std::vector<KkMove>* trace = nullptr);

}  // namespace glay
