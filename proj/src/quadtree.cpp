#include "glay/quadtree.hpp"

#include <algorithm>
#include <cmath>

namespace glay {

namespace {
constexpr int kMaxDepth = 48;
}

int QuadTree::quadrant(int node, double x, double y) const {
  const Node& nd = nodes_[node];
  return (x >= nd.cx ? 1 : 0) + (y >= nd.cy ? 2 : 0);
}

int QuadTree::make_child(int node, int q) {
  Node& nd = nodes_[node];
  if (nd.child[q] >= 0) return nd.child[q];
  double h = nd.half * 0.5;
  double cx = nd.cx + (q & 1 ? h : -h);
  double cy = nd.cy + (q & 2 ? h : -h);
  int idx = static_cast<int>(nodes_.size());
  nd.child[q] = idx;
  nodes_.push_back(Node{cx, cy, h});
  return idx;
}

void QuadTree::insert(int node, int pt, int depth) {
  while (true) {
    Node& nd = nodes_[node];
    nd.count += 1;
    nd.sx += xs_[pt];
    nd.sy += ys_[pt];
    if (depth >= kMaxDepth) {
      nd.bucket.push_back(pt);
      return;
    }
    if (nd.leaf()) {
      if (nd.point < 0 && nd.count == 1) {
        nd.point = pt;
        return;
      }
      // occupied leaf: push the resident down, then continue with pt
      int old = nd.point;
      nd.point = -1;
      int q_old = quadrant(node, xs_[old], ys_[old]);
      int child_old = make_child(node, q_old);
      Node& co = nodes_[child_old];
      co.count += 1;
      co.sx += xs_[old];
      co.sy += ys_[old];
      if (depth + 1 >= kMaxDepth)
        co.bucket.push_back(old);
      else
        co.point = old;
    }
    int q = quadrant(node, xs_[pt], ys_[pt]);
    int child = make_child(node, q);
    node = child;
    depth += 1;
    // count/sums for the child are applied at the top of the loop
  }
}

QuadTree QuadTree::build(const double* xs, const double* ys, std::size_t n) {
  QuadTree t;
  t.xs_ = xs;
  t.ys_ = ys;
  if (n == 0) {
    t.nodes_.push_back(Node{0.0, 0.0, 0.5});
    return t;
  }
  double min_x = xs[0], max_x = xs[0], min_y = ys[0], max_y = ys[0];
  for (std::size_t i = 1; i < n; ++i) {
    min_x = std::min(min_x, xs[i]);
    max_x = std::max(max_x, xs[i]);
    min_y = std::min(min_y, ys[i]);
    max_y = std::max(max_y, ys[i]);
  }
  double cx = 0.5 * (min_x + max_x);
  double cy = 0.5 * (min_y + max_y);
  double half = 0.5 * std::max(max_x - min_x, max_y - min_y);
  half = half > 0.0 ? half * 1.0000001 : 0.5;
  t.nodes_.reserve(2 * n);
  t.nodes_.push_back(Node{cx, cy, half});
  for (std::size_t i = 0; i < n; ++i) t.insert(0, static_cast<int>(i), 0);
  return t;
}

kernels::Force2 QuadTree::repulsion(double px, double py, double theta, double k2) const {
  kernels::Force2 f;
  const double theta2 = theta * theta;
  std::vector<int> stack;
  stack.reserve(64);
  stack.push_back(0);
  while (!stack.empty()) {
    const Node& nd = nodes_[stack.back()];
    stack.pop_back();
    if (nd.count == 0) continue;
    if (nd.leaf()) {
      auto add_point = [&](int pt) {
        double dx = px - xs_[pt];
        double dy = py - ys_[pt];
        double d2 = dx * dx + dy * dy;
        if (d2 > 0.0) {
          double w = k2 / d2;
          f.x += dx * w;
          f.y += dy * w;
        }
      };
      if (nd.point >= 0) add_point(nd.point);
      for (int pt : nd.bucket) add_point(pt);
      continue;
    }
    double cx = nd.sx / nd.count;
    double cy = nd.sy / nd.count;
    double dx = px - cx;
    double dy = py - cy;
    double d2 = dx * dx + dy * dy;
    double side = 2.0 * nd.half;
    if (side * side < theta2 * d2) {  // side / dist < theta: treat as one mass
      double w = nd.count * k2 / d2;
      f.x += dx * w;
      f.y += dy * w;
      continue;
    }
    for (int c : nd.child)
      if (c >= 0) stack.push_back(c);
  }
  return f;
}

}  // namespace glay
