#pragma once

#include <cstddef>
#include <vector>

#include "glay/kernels.hpp"

namespace glay {

// Region quadtree over a point set, with per-node counts and position sums so
// distant subtrees can act as one super-node at their centroid.
class QuadTree {
 public:
  struct Node {
    double cx, cy, half;        // square: [cx-half, cx+half] x [cy-half, cy+half]
    double sx = 0.0, sy = 0.0;  // sum of member positions
    int count = 0;
    int child[4] = {-1, -1, -1, -1};
    int point = -1;                  // single resident when an ordinary leaf
    std::vector<int> bucket;         // residents at max depth only
    bool leaf() const { return child[0] < 0 && child[1] < 0 && child[2] < 0 && child[3] < 0; }
  };

  static QuadTree build(const double* xs, const double* ys, std::size_t n);

  // Repulsion exerted on the point at (px, py):
  //   exact   sum (p - q) * k2 / |p - q|^2           over leaf residents,
  //   grouped count * (p - c) * k2 / |p - c|^2       for boxes whose
  // side / distance-to-centroid < theta.  theta <= 0 degenerates to the exact
  // all-pairs sum.  Coincident points contribute nothing.
  kernels::Force2 repulsion(double px, double py, double theta, double k2) const;

  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  std::vector<Node> nodes_;
  const double* xs_ = nullptr;
  const double* ys_ = nullptr;
  void insert(int node, int pt, int depth);
  int quadrant(int node, double x, double y) const;
  int make_child(int node, int q);
};

}  // namespace glay
