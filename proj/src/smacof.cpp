#include "glay/smacof.hpp"

#include <algorithm>
#include <cmath>

#include "glay/error.hpp"
#include "glay/kernels.hpp"
#include "glay/rng.hpp"

namespace glay {

Layout smacof_step(const Layout& l, const DistanceMatrix& dm, Weighting w) {
  if (dm.n != l.size() || !dm.full())
    throw precondition_error("majorization needs a full distance matrix");
  const std::size_t n = l.size();
  Layout out = l;
  if (n < 2) return out;
  separate_coincident(out.x, out.y, 1e-9, 0x5aacu);
  const auto& kt = kernels::active_kernels();
  std::vector<double> nx(n), ny(n);
  const bool inv = w == Weighting::inverse_square;
  for (std::size_t i = 0; i < n; ++i) {
    auto a = kt.smacof_terms(out.x.data(), out.y.data(), dm.rows[i].data(), i, n, inv);
    if (a.den > 0.0) {
      nx[i] = a.num_x / a.den;
      ny[i] = a.num_y / a.den;
    } else {
      nx[i] = out.x[i];
      ny[i] = out.y[i];
    }
  }
  out.x = std::move(nx);
  out.y = std::move(ny);
  return out;
}

namespace {

StressResult run_majorization(const DistanceMatrix& dm, Weighting w, double tol, int max_iters,
                              Layout init) {
  StressResult res;
  double prev = stress(init, dm, w);
  int it = 0;
  for (; it < max_iters; ++it) {
    Layout next = smacof_step(init, dm, w);
    double cur = stress(next, dm, w);
    init = std::move(next);
    double drop = prev - cur;
    bool done = !(drop > tol * std::max(prev, 1e-300));
    prev = cur;
    if (done) {
      ++it;
      break;
    }
  }
  double ext = 0.0;
  for (std::size_t i = 0; i < init.size(); ++i)
    ext = std::max({ext, std::fabs(init.x[i]), std::fabs(init.y[i])});
  init.frame_w = init.frame_h = std::max(1.0, 2.0 * ext);
  res.layout = std::move(init);
  res.iterations = it;
  res.final_stress = prev;
  return res;
}

}  // namespace

StressResult stress_layout(const Graph& g, Weighting w, double tol, int max_iters, Layout init) {
  if (init.size() != g.n) throw precondition_error("initial layout size mismatch");
  DistanceMatrix dm = bfs_apsp(g);
  return run_majorization(dm, w, tol, max_iters, std::move(init));
}

StressResult stress_layout(const Graph& g, Weighting w, double tol, int max_iters,
                           std::uint64_t seed) {
  DistanceMatrix dm = bfs_apsp(g);
  double frame = std::max(1.0, dm.max_finite());
  return run_majorization(dm, w, tol, max_iters, init_random(g.n, seed, frame, frame));
}

}  // namespace glay
