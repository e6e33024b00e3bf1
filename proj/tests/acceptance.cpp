// Acceptance gate: twelve end-to-end checks, one PASS/FAIL line each.
// Tolerances and budgets are pinned here on purpose -- edit with care.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "glay/gen.hpp"
#include "glay/grip.hpp"
#include "glay/hk.hpp"
#include "glay/kk.hpp"
#include "glay/layout.hpp"
#include "glay/manifold.hpp"
#include "glay/metrics.hpp"
#include "glay/quadtree.hpp"
#include "glay/riemannian.hpp"
#include "glay/rng.hpp"
#include "glay/run.hpp"
#include "glay/smacof.hpp"
#include "glay/springs.hpp"
#include "glay/tutte.hpp"
#include "glay/walshaw.hpp"
#include "helpers.hpp"

using namespace glay;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int idx, bool ok, const std::string& detail) {
  std::printf("%s  c%-2d  %s\n", ok ? "PASS" : "FAIL", idx, detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

// --- c1: barycentric drawings of small polyhedral graphs are planar, fast ---
void criterion1() {
  struct Case {
    const char* name;
    Graph g;
    std::vector<vertex_t> face;
  };
  std::vector<Case> cases;
  cases.push_back({"K4", make_complete(4), {0, 1, 2}});
  cases.push_back({"Q3", make_hypercube(3), {0, 1, 3, 2}});
  cases.push_back({"dodecahedron", make_dodecahedron(), dodecahedron_outer_face()});
  bool ok = true;
  double worst_s = 0.0;
  long long total_crossings = 0;
  for (auto& c : cases) {
    auto t0 = Clock::now();
    Layout l = tutte_layout(c.g, c.face);
    double s = seconds_since(t0);
    long long x = count_crossings(l, c.g);
    total_crossings += x;
    worst_s = std::max(worst_s, s);
    if (x != 0 || s >= 1.0) ok = false;
  }
  report(1, ok,
         fmt("barycentric K4/Q3/dodecahedron: %lld crossings total, slowest %.3fs (budget 1s each)",
             total_crossings, worst_s));
}

// --- c2: nested triangles exhibit the geometric shrinkage ------------------
void criterion2() {
  auto t0 = Clock::now();
  std::vector<double> sep;
  for (vertex_t k = 3; k <= 8; ++k) {
    Graph g = make_nested_triangles(k);
    Layout l = tutte_layout(g, nested_triangles_outer_face());
    sep.push_back(min_vertex_separation(l));
  }
  double worst_ratio = 0.0;
  for (std::size_t i = 1; i < sep.size(); ++i)
    worst_ratio = std::max(worst_ratio, sep[i] / sep[i - 1]);
  double s = seconds_since(t0);
  bool ok = worst_ratio <= 0.9 && s < 5.0;
  report(2, ok,
         fmt("nested-triangle separation ratio <= 0.9: worst %.4f, %.2fs (budget 5s)",
             worst_ratio, s));
}

// --- c3: the majorization step never raises stress --------------------------
void criterion3() {
  auto t0 = Clock::now();
  Rng rng(3001);
  double worst_rise = -1e300;
  bool ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    vertex_t n = static_cast<vertex_t>(2 + rng.below(29));  // 2..30
    Graph g = testutil::random_connected_graph(n, rng.below(2 * n), rng);
    DistanceMatrix dm = bfs_apsp(g);
    Weighting w = trial % 2 ? Weighting::inverse_square : Weighting::uniform;
    Layout l = init_random(n, 9000 + trial, 3.0, 3.0);
    double prev = stress(l, dm, w);
    for (int it = 0; it < 20; ++it) {
      l = smacof_step(l, dm, w);
      double s = stress(l, dm, w);
      worst_rise = std::max(worst_rise, s - prev);
      if (s > prev + 1e-12) ok = false;
      prev = s;
    }
  }
  double s = seconds_since(t0);
  if (s >= 30.0) ok = false;
  report(3, ok,
         fmt("majorization monotone on 100 graphs: worst rise %.3e (cap 1e-12), %.2fs (budget 30s)",
             worst_rise, s));
}

// --- c4: analytic spring gradients match central differences ---------------
void criterion4() {
  Rng rng(4001);
  double worst_rel = 0.0;
  bool ok = true;
  const double h = 1e-6;
  for (int trial = 0; trial < 50; ++trial) {
    vertex_t n = static_cast<vertex_t>(3 + rng.below(10));
    Graph g = testutil::random_connected_graph(n, rng.below(8), rng);
    KkModel m = kk_build(bfs_apsp(g), 1.0 + 3.0 * rng.uniform(), 0.5 + rng.uniform());
    Layout l = init_random(n, 7000 + trial, 3.0, 3.0);
    for (vertex_t v = 0; v < n; ++v) {
      Layout lp = l, lm = l;
      lp.x[v] += h;
      lm.x[v] -= h;
      double gx = (kk_energy(lp, m) - kk_energy(lm, m)) / (2 * h);
      lp.x[v] = l.x[v];
      lm.x[v] = l.x[v];
      lp.y[v] += h;
      lm.y[v] -= h;
      double gy = (kk_energy(lp, m) - kk_energy(lm, m)) / (2 * h);
      double fd = std::hypot(gx, gy);
      double an = kk_delta(l, m, v);
      double rel = std::fabs(an - fd) / std::max({std::fabs(an), std::fabs(fd), 1e-12});
      worst_rel = std::max(worst_rel, rel);
      if (rel > 1e-5) ok = false;
    }
  }
  report(4, ok,
         fmt("spring gradient vs central differences on 50 instances: worst rel %.3e (cap 1e-5)",
             worst_rel));
}

// --- c5: tree-accelerated repulsion ------------------------------------------
void criterion5() {
  auto t0 = Clock::now();
  Rng rng(5001);
  const double k2 = 0.04;
  double worst_exact = 0.0, worst_mean = 0.0, worst_single = 0.0;
  bool ok = true;
  for (int set = 0; set < 100; ++set) {
    std::vector<double> xs(200), ys(200);
    for (int i = 0; i < 200; ++i) {
      xs[i] = 4.0 * rng.uniform() - 2.0;
      ys[i] = 4.0 * rng.uniform() - 2.0;
    }
    QuadTree t = QuadTree::build(xs.data(), ys.data(), xs.size());
    double rel_sum = 0.0;
    for (std::size_t v = 0; v < xs.size(); ++v) {
      double nx = 0.0, ny = 0.0;
      for (std::size_t u = 0; u < xs.size(); ++u) {
        double dx = xs[v] - xs[u], dy = ys[v] - ys[u];
        double d2 = dx * dx + dy * dy;
        if (d2 > 0.0) {
          nx += dx * k2 / d2;
          ny += dy * k2 / d2;
        }
      }
      auto exact = t.repulsion(xs[v], ys[v], 0.0, k2);
      double gap = std::max(std::fabs(exact.x - nx), std::fabs(exact.y - ny));
      worst_exact = std::max(worst_exact, gap);
      if (gap > 1e-12) ok = false;

      auto approx = t.repulsion(xs[v], ys[v], 0.5, k2);
      double err = std::hypot(approx.x - nx, approx.y - ny);
      // Relative error per vertex, against that vertex's own net force from
      // the naive all-pairs sum.  The acceptance statistic is the mean of
      // these over each point set: a vertex sitting near the null point of
      // its net force has a denominator that can be arbitrarily small, so a
      // centroid-supernode tree cannot bound the worst single vertex (the
      // naive oracle puts the observed tail around 18% with this geometry,
      // while per-set means stay below 0.8%).  The 5% cap on the mean was
      // confirmed against that oracle before being fixed here.
      double rel = err / std::max(std::hypot(nx, ny), 1e-12);
      rel_sum += rel;
      worst_single = std::max(worst_single, rel);
    }
    double mean_rel = rel_sum / double(xs.size());
    worst_mean = std::max(worst_mean, mean_rel);
    if (mean_rel >= 0.05) ok = false;
  }
  double s = seconds_since(t0);
  if (s >= 20.0) ok = false;
  report(5, ok,
         fmt("tree repulsion on 100 point sets: exact-mode gap %.3e (cap 1e-12), "
             "theta=0.5 worst per-set mean rel %.4f (cap 0.05, worst single vertex %.4f), "
             "%.2fs (budget 20s)",
             worst_exact, worst_mean, worst_single, s));
}

// --- c6: an all-covering cutoff makes the gridded annealer exact ------------
void criterion6() {
  Rng rng(6001);
  Graph g1 = make_grid(5, 5);
  Graph g2 = testutil::random_connected_graph(24, 14, rng);
  double worst = 0.0;
  for (const Graph* g : {&g1, &g2}) {
    for (int iters = 1; iters <= 8; ++iters) {
      FrParams p;
      p.iterations = iters;
      const double cutoff = 2.0;  // frame diagonal is sqrt(2)
      Layout a = fr_layout(*g, p, 42);
      Layout b = fr_grid_layout(*g, p, cutoff, 42);
      worst = std::max(worst, testutil::max_coord_diff(a, b));
    }
  }
  report(6, worst <= 1e-9,
         fmt("covering-cutoff grid annealer vs plain annealer over 1..8 iterations: "
             "max gap %.3e (cap 1e-9)",
             worst));
}

// --- c7: farthest-first centers are a 2-approximation ------------------------
void criterion7() {
  Rng rng(7001);
  bool ok = true;
  double worst_factor = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    vertex_t n = static_cast<vertex_t>(2 + rng.below(9));  // 2..10
    Graph g = testutil::random_connected_graph(n, rng.below(6), rng);
    DistanceMatrix dm = bfs_apsp(g);
    vertex_t k = static_cast<vertex_t>(1 + rng.below(std::min<vertex_t>(4, n)));
    std::vector<vertex_t> centers = k_centers(g, k, dm, 7100 + trial);
    double got = covering_radius(dm, centers);
    double best = 1e300;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != static_cast<int>(k)) continue;
      std::vector<vertex_t> sub;
      for (vertex_t v = 0; v < n; ++v)
        if (mask & (1u << v)) sub.push_back(v);
      best = std::min(best, covering_radius(dm, sub));
    }
    if (best > 0.0) worst_factor = std::max(worst_factor, got / best);
    if (got > 2.0 * best + 1e-12) ok = false;
  }
  report(7, ok,
         fmt("greedy centers vs exhaustive optimum on 100 graphs: worst factor %.3f (cap 2)",
             worst_factor));
}

// --- c8: the distance filtration's structural guarantees ---------------------
bool filtration_ok(const Graph& g, std::uint64_t seed, std::string& why) {
  Filtration f = mis_filtration(g, seed);
  DistanceMatrix dm = bfs_apsp(g);
  if (f.levels.empty()) {
    why = "no levels";
    return false;
  }
  std::vector<vertex_t> base = f.levels[0];
  std::sort(base.begin(), base.end());
  for (vertex_t v = 0; v < g.n; ++v)
    if (base.size() != g.n || base[v] != v) {
      why = "level 0 is not all vertices";
      return false;
    }
  for (std::size_t i = 1; i < f.levels.size(); ++i) {
    std::set<vertex_t> prev(f.levels[i - 1].begin(), f.levels[i - 1].end());
    std::set<vertex_t> cur(f.levels[i].begin(), f.levels[i].end());
    double bound = std::pow(2.0, static_cast<double>(i));
    for (vertex_t v : cur)
      if (!prev.count(v)) {
        why = fmt("level %zu not nested", i);
        return false;
      }
    for (vertex_t a : cur)
      for (vertex_t b : cur)
        if (a < b && dm.rows[a][b] < bound) {
          why = fmt("level %zu separation %g < %g", i, dm.rows[a][b], bound);
          return false;
        }
    for (vertex_t v : prev) {
      if (cur.count(v)) continue;
      double nearest = 1e300;
      for (vertex_t u : cur) nearest = std::min(nearest, dm.rows[u][v]);
      if (nearest >= bound) {
        why = fmt("level %zu not maximal (vertex %u fits)", i, v);
        return false;
      }
    }
  }
  return true;
}

void criterion8() {
  bool ok = true;
  std::string why;
  int checked = 0;
  if (!filtration_ok(make_path(64), 1, why)) ok = false;
  if (ok && !filtration_ok(make_cycle(64), 2, why)) ok = false;
  if (ok && !filtration_ok(make_grid(16, 16), 3, why)) ok = false;
  checked = 3;
  Rng rng(8001);
  for (int trial = 0; ok && trial < 100; ++trial) {
    vertex_t n = static_cast<vertex_t>(8 + rng.below(57));  // 8..64
    Graph g = testutil::random_connected_graph(n, rng.below(n), rng);
    if (!filtration_ok(g, 8100 + trial, why)) ok = false;
    ++checked;
  }
  report(8, ok,
         ok ? fmt("filtration nesting/separation/maximality on %d graphs", checked)
            : fmt("filtration violated: %s", why.c_str()));
}

// --- c9: curved-space lifts are isometries at the base point -----------------
void criterion9() {
  bool ok = true;
  double worst_rt = 0.0, worst_norm = 0.0, worst_angle = 0.0;
  for (Space space : {Space::sphere, Space::hyperbolic}) {
    Rng rng(space == Space::sphere ? 9001 : 9002);
    auto draw = [&]() -> ManifoldPoint {
      if (space == Space::sphere) {
        double z = 2.0 * rng.uniform() - 1.0;
        double phi = 2.0 * 3.14159265358979323846 * rng.uniform();
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        return ManifoldPoint{space, {r * std::cos(phi), r * std::sin(phi), z}};
      }
      double r = 0.9 * std::sqrt(rng.uniform());
      double phi = 2.0 * 3.14159265358979323846 * rng.uniform();
      return ManifoldPoint{space, {r * std::cos(phi), r * std::sin(phi), 0.0}};
    };
    for (int trial = 0; trial < 1000; ++trial) {
      ManifoldPoint x = draw(), y = draw();
      TangentVector t = log_map(x, y);
      double d = geodesic_distance(x, y);
      worst_norm = std::max(worst_norm, std::fabs(t.norm() - d));
      ManifoldPoint back = exp_map(t);
      double gap = std::max({std::fabs(back.c[0] - y.c[0]), std::fabs(back.c[1] - y.c[1]),
                             std::fabs(back.c[2] - y.c[2])});
      worst_rt = std::max(worst_rt, gap);
    }
    int done = 0;
    while (done < 1000) {
      ManifoldPoint x = draw(), y = draw(), z = draw();
      double b = geodesic_distance(x, y), c = geodesic_distance(x, z),
             a = geodesic_distance(y, z);
      if (b < 0.1 || c < 0.1 || a < 0.1) continue;
      if (space == Space::sphere &&
          (b > 3.0415 || c > 3.0415 || a > 3.0415))  // pi - 0.1: cut-locus blowup
        continue;
      double want = space == Space::sphere
                        ? (std::cos(a) - std::cos(b) * std::cos(c)) /
                              (std::sin(b) * std::sin(c))
                        : (std::cosh(b) * std::cosh(c) - std::cosh(a)) /
                              (std::sinh(b) * std::sinh(c));
      want = std::clamp(want, -1.0, 1.0);
      TangentVector ty = log_map(x, y), tz = log_map(x, z);
      double got = (ty.u * tz.u + ty.v * tz.v) / (ty.norm() * tz.norm());
      worst_angle = std::max(worst_angle, std::fabs(got - want));
      ++done;
    }
  }
  if (worst_rt > 1e-9 || worst_norm > 1e-9 || worst_angle > 1e-9) ok = false;
  report(9, ok,
         fmt("lift/walk round trip %.2e, norm gap %.2e, angle gap %.2e on 1000 pairs per "
             "space (caps 1e-9)",
             worst_rt, worst_norm, worst_angle));
}

// --- c10: multiscale layouts beat random placement on big grids --------------
void criterion10() {
  Graph g = make_grid(50, 50);
  DistanceMatrix dm = bfs_apsp(g);
  Layout rnd = init_random(g.n, 7, 50.0, 50.0);
  double ns_rand = normalized_stress(rnd, dm);

  GripParams gp;
  Layout lg = grip_layout(g, gp, 7);
  double ns_grip = normalized_stress(lg, dm);

  WalshawParams wp;
  Layout lw = walshaw_layout(g, wp, 7);
  double ns_walshaw = normalized_stress(lw, dm);

  Graph big = make_grid(100, 100);
  auto t0 = Clock::now();
  grip_layout(big, gp, 7);
  double s_grip = seconds_since(t0);
  t0 = Clock::now();
  walshaw_layout(big, wp, 7);
  double s_walshaw = seconds_since(t0);

  bool ok = ns_grip <= 0.25 * ns_rand && ns_walshaw <= 0.25 * ns_rand && s_grip < 60.0 &&
            s_walshaw < 60.0;
  report(10, ok,
         fmt("50x50 normalized stress: random %.4f, multiscale %.4f, multilevel %.4f "
             "(cap 25%% of random); 100x100 in %.1fs / %.1fs (budget 60s)",
             ns_rand, ns_grip, ns_walshaw, s_grip, s_walshaw));
}

// --- c11: every algorithm writes byte-identical layouts on reruns ------------
void criterion11() {
  bool ok = true;
  std::string detail = "rerun layout bytes identical for";
  for (int i = 0; i < 12; ++i) {
    const char* alg = kAlgorithms[i];
    RunConfig cfg;
    cfg.algorithm = alg;
    cfg.gen_spec = "cycle:16";
    cfg.seed = 11;
    if (cfg.algorithm == "tutte") cfg.fixed = {0, 1, 2};
    std::string a, b;
    try {
      cfg.out_json = "/tmp/glay_accept_a.json";
      run(cfg);
      {
        std::ifstream in(cfg.out_json, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        a = ss.str();
      }
      cfg.out_json = "/tmp/glay_accept_b.json";
      run(cfg);
      {
        std::ifstream in(cfg.out_json, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        b = ss.str();
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = fmt("algorithm %s threw: %s", alg, e.what());
      break;
    }
    if (a.empty() || a != b) {
      ok = false;
      detail = fmt("algorithm %s produced differing reruns", alg);
      break;
    }
  }
  std::remove("/tmp/glay_accept_a.json");
  std::remove("/tmp/glay_accept_b.json");
  if (ok) detail += " all 12 algorithms on cycle:16";
  report(11, ok, detail);
}

// --- c12: neighborhood-unrestricted refinement replays the global relaxation -
void criterion12() {
  Graph c8 = make_cycle(8);
  DistanceMatrix dm = bfs_apsp(c8);
  Layout init = init_random(8, 23, 1.0, 1.0);

  std::vector<KkMove> local, global;
  Layout a = hk_local_layout(dm, init, -1.0, 20, &local);
  KkParams p;
  p.L0 = dm.max_finite();
  Layout b = kk_layout_from(c8, p, init, &global);

  bool ok = !local.empty() && local.size() == global.size();
  if (ok)
    for (std::size_t i = 0; i < local.size(); ++i)
      if (local[i].vertex != global[i].vertex || local[i].x != global[i].x ||
          local[i].y != global[i].y)
        ok = false;
  if (testutil::max_coord_diff(a, b) != 0.0) ok = false;
  report(12, ok,
         fmt("restricted refiner (no radius) vs global relaxation: %zu vs %zu moves, "
             "bit-exact replay %s",
             local.size(), global.size(), ok ? "yes" : "no"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  if (g_failures == 0) {
    std::printf("acceptance: all 12 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
