#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glay/graph.hpp"

namespace glay {

enum class Space { euclidean2d, sphere, hyperbolic };

std::string space_name(Space s);
Space space_from_name(std::string_view name);  // throws parse_error

// Positions in structure-of-arrays form so the pairwise kernels can stream
// them.  Euclidean and hyperbolic (Poincare disk) layouts use x/y; spherical
// layouts additionally use z and keep (x, y, z) on the unit sphere.
struct Layout {
  Space space = Space::euclidean2d;
  std::vector<double> x, y, z;
  double frame_w = 1.0, frame_h = 1.0;  // Euclidean drawing frame

  std::size_t size() const { return x.size(); }
  void resize(std::size_t n) {
    x.assign(n, 0.0);
    y.assign(n, 0.0);
    if (space == Space::sphere) z.assign(n, 0.0);
  }
};

enum class CoolingKind { inverse_linear, geometric };

// Step-size schedule shared by the annealed algorithms.
struct Temperature {
  double value = 0.0;
  CoolingKind kind = CoolingKind::inverse_linear;
  double initial = 0.0;
  double factor = 0.9;  // geometric only
  int step = 0;
  int total = 1;  // inverse-linear only

  static Temperature inverse_linear(double t0, int total_steps);
  static Temperature geometric(double t0, double factor);
};

// One cooling step; inverse-linear reaches ~0 after `total` steps, geometric
// multiplies by `factor`.  Never goes negative.
Temperature cool(Temperature t);

// Uniform positions in the W x L frame centered on the origin; consumes two
// draws per vertex in vertex order, so a given seed pins every coordinate.
Layout init_random(std::size_t n, std::uint64_t seed, double frame_w, double frame_h);

// Uniform on the unit sphere (area element): z = 2u-1, azimuth = 2*pi*u.
Layout init_random_sphere(std::size_t n, std::uint64_t seed);

// Uniform over a centered disk of the given radius (Poincare coordinates).
Layout init_random_disk(std::size_t n, std::uint64_t seed, double radius);

// Nudges the later member of every exactly-coincident pair by `eps` in a
// direction derived from (salt, index), so force laws that divide by pairwise
// distance stay finite.  Returns the number of vertices moved.
std::size_t separate_coincident(std::vector<double>& xs, std::vector<double>& ys, double eps,
                                std::uint64_t salt);

}  // namespace glay
