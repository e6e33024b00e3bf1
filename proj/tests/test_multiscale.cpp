#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "glay/error.hpp"
#include "glay/gen.hpp"
#include "glay/grip.hpp"
#include "glay/hk.hpp"
#include "glay/kk.hpp"
#include "glay/rng.hpp"
#include "glay/walshaw.hpp"
#include "helpers.hpp"

using namespace glay;

TEST_CASE("covering radius") {
  Graph p4 = make_path(4);
  DistanceMatrix dm = bfs_apsp(p4);
  CHECK(covering_radius(dm, {0}) == doctest::Approx(3.0));
  CHECK(covering_radius(dm, {1}) == doctest::Approx(2.0));
  CHECK(covering_radius(dm, {0, 3}) == doctest::Approx(1.0));
  CHECK(covering_radius(dm, {0, 1, 2, 3}) == doctest::Approx(0.0));
}

TEST_CASE("farthest-first centers stay within twice the optimum") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    vertex_t n = static_cast<vertex_t>(4 + rng.below(7));
    Graph g = testutil::random_connected_graph(n, rng.below(6), rng);
    DistanceMatrix dm = bfs_apsp(g);
    vertex_t k = static_cast<vertex_t>(1 + rng.below(3));
    std::vector<vertex_t> centers = k_centers(g, k, dm, trial);
    REQUIRE(centers.size() == k);
    std::set<vertex_t> uniq(centers.begin(), centers.end());
    CHECK(uniq.size() == k);
    double got = covering_radius(dm, centers);

    double best = 1e300;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != static_cast<int>(k)) continue;
      std::vector<vertex_t> sub;
      for (vertex_t v = 0; v < n; ++v)
        if (mask & (1u << v)) sub.push_back(v);
      best = std::min(best, covering_radius(dm, sub));
    }
    CHECK(got <= 2.0 * best + 1e-12);
  }
}

TEST_CASE("unrestricted local refinement replays the global spring relaxation") {
  Graph c8 = make_cycle(8);
  DistanceMatrix dm = bfs_apsp(c8);
  Layout init = init_random(8, 23, 1.0, 1.0);

  std::vector<KkMove> trace_local;
  Layout a = hk_local_layout(dm, init, -1.0, 20, &trace_local);

  KkParams p;
  p.L0 = dm.max_finite();  // ideal lengths become the raw graph distances
  p.K = 1.0;
  std::vector<KkMove> trace_global;
  Layout b = kk_layout_from(c8, p, init, &trace_global);

  REQUIRE(!trace_local.empty());
  REQUIRE(trace_local.size() == trace_global.size());
  for (std::size_t i = 0; i < trace_local.size(); ++i) {
    CHECK(trace_local[i].vertex == trace_global[i].vertex);
    CHECK(trace_local[i].x == trace_global[i].x);
    CHECK(trace_local[i].y == trace_global[i].y);
  }
  CHECK(testutil::max_coord_diff(a, b) == 0.0);

  SUBCASE("a radius beyond the diameter behaves exactly like no radius") {
    Layout c = hk_local_layout(dm, init, dm.max_finite() + 1.0, 20);
    CHECK(testutil::max_coord_diff(a, c) == 0.0);
  }
}

TEST_CASE("coarse-to-fine spring layout") {
  Graph g = make_grid(5, 5);
  HkParams p;
  SUBCASE("deterministic") {
    CHECK(testutil::max_coord_diff(hk_layout(g, p, 6), hk_layout(g, p, 6)) == 0.0);
  }
  SUBCASE("finite coordinates for every vertex") {
    Layout l = hk_layout(g, p, 2);
    REQUIRE(l.size() == g.n);
    for (std::size_t i = 0; i < l.size(); ++i) {
      CHECK(std::isfinite(l.x[i]));
      CHECK(std::isfinite(l.y[i]));
    }
  }
  SUBCASE("refuses graphs above the size cap") {
    HkParams tiny;
    tiny.max_n = 5;
    CHECK_THROWS_AS(hk_layout(g, tiny, 0), precondition_error);
  }
}

TEST_CASE("matching-based coarsening invariants") {
  Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    vertex_t n = static_cast<vertex_t>(2 + rng.below(20));
    Graph g = testutil::random_connected_graph(n, rng.below(10), rng);
    WeightedGraph wg{g, std::vector<double>(n, 1.0)};
    CoarsenStep step = match_coarsen(wg, 400 + trial);
    const vertex_t nc = step.coarse.g.n;

    REQUIRE(step.projection.size() == n);
    std::vector<std::vector<vertex_t>> groups(nc);
    for (vertex_t v = 0; v < n; ++v) {
      REQUIRE(step.projection[v] < nc);
      groups[step.projection[v]].push_back(v);
    }
    double total = std::accumulate(step.coarse.weight.begin(), step.coarse.weight.end(), 0.0);
    CHECK(total == doctest::Approx(static_cast<double>(n)).epsilon(1e-12));
    for (vertex_t c = 0; c < nc; ++c) {
      REQUIRE(!groups[c].empty());  // surjective
      REQUIRE(groups[c].size() <= 2);
      CHECK(step.coarse.weight[c] == doctest::Approx(static_cast<double>(groups[c].size())));
      if (groups[c].size() == 2) CHECK(g.has_edge(groups[c][0], groups[c][1]));
    }
    for (auto [u, v] : g.edges) {
      vertex_t pu = step.projection[u], pv = step.projection[v];
      if (pu != pv) CHECK(step.coarse.g.has_edge(pu, pv));
    }
    if (!g.edges.empty()) CHECK(nc < n);  // a maximal matching matches something
  }
  SUBCASE("deterministic in the seed") {
    Graph g = make_grid(4, 4);
    WeightedGraph wg{g, std::vector<double>(g.n, 1.0)};
    CoarsenStep a = match_coarsen(wg, 11);
    CoarsenStep b = match_coarsen(wg, 11);
    CHECK(a.projection == b.projection);
    CHECK(a.coarse.g.edges == b.coarse.g.edges);
  }
}

TEST_CASE("hierarchy construction") {
  Graph g = make_grid(6, 6);
  CoarseHierarchy h = build_hierarchy(g, 4, 40, 9);
  REQUIRE(h.levels.size() >= 2);
  REQUIRE(h.projections.size() == h.levels.size() - 1);
  CHECK(h.levels[0].g.n == g.n);
  CHECK(h.levels[0].g.edges == g.edges);
  CHECK(h.levels.back().g.n <= 4);
  for (std::size_t lv = 0; lv < h.levels.size(); ++lv) {
    double total =
        std::accumulate(h.levels[lv].weight.begin(), h.levels[lv].weight.end(), 0.0);
    CHECK(total == doctest::Approx(static_cast<double>(g.n)).epsilon(1e-12));
    if (lv + 1 < h.levels.size()) {
      REQUIRE(h.projections[lv].size() == h.levels[lv].g.n);
      for (vertex_t p : h.projections[lv]) REQUIRE(p < h.levels[lv + 1].g.n);
      CHECK(h.levels[lv + 1].g.n < h.levels[lv].g.n);
    }
  }
}

TEST_CASE("multilevel force magnitudes") {
  SUBCASE("at the natural length only weighted repulsion remains") {
    WalshawForces f = walshaw_forces(1.0, 3.0, 2.0, 1.0, 0.2);
    CHECK(f.global == doctest::Approx(-0.4).epsilon(1e-15));
    CHECK(f.local == doctest::Approx(0.4).epsilon(1e-15));
  }
  SUBCASE("stretched spring") {
    WalshawForces f = walshaw_forces(2.0, 3.0, 2.0, 1.0, 0.2);
    CHECK(f.global == doctest::Approx(-0.2).epsilon(1e-15));
    CHECK(f.local == doctest::Approx(1.0 / 3.0 + 0.2).epsilon(1e-12));
  }
  SUBCASE("zero coupling gives the bare spring") {
    WalshawForces f = walshaw_forces(2.5, 2.0, 5.0, 1.0, 0.0);
    CHECK(f.global == 0.0);
    CHECK(f.local == doctest::Approx(0.75).epsilon(1e-15));
  }
}

TEST_CASE("two-vertex multilevel layout sits at the force balance") {
  WalshawParams p;
  // independent equilibrium: root of the net neighbor force via bisection
  auto net = [&](double x) {
    WalshawForces f = walshaw_forces(x, 1.0, 1.0, p.k_finest, p.C);
    return f.local + f.global;
  };
  double lo = 0.01, hi = 10.0;
  REQUIRE(net(lo) < 0.0);
  REQUIRE(net(hi) > 0.0);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (net(mid) < 0.0 ? lo : hi) = mid;
  }
  double x_star = 0.5 * (lo + hi);

  Graph p2 = make_path(2);
  for (std::uint64_t seed : {1ull, 4ull, 9ull}) {
    Layout l = walshaw_layout(p2, p, seed);
    double d = std::hypot(l.x[0] - l.x[1], l.y[0] - l.y[1]);
    CHECK(d == doctest::Approx(x_star).epsilon(0.10));
  }
}

TEST_CASE("multilevel layout basics") {
  Graph g = make_grid(4, 4);
  WalshawParams p;
  SUBCASE("deterministic") {
    CHECK(testutil::max_coord_diff(walshaw_layout(g, p, 3), walshaw_layout(g, p, 3)) == 0.0);
  }
  SUBCASE("finite coordinates and a positive frame") {
    Layout l = walshaw_layout(g, p, 1);
    REQUIRE(l.size() == g.n);
    for (std::size_t i = 0; i < l.size(); ++i) {
      CHECK(std::isfinite(l.x[i]));
      CHECK(std::isfinite(l.y[i]));
    }
    CHECK(l.frame_w >= 1.0);
  }
}

namespace {

void check_filtration(const Graph& g, std::uint64_t seed) {
  Filtration f = mis_filtration(g, seed);
  DistanceMatrix dm = bfs_apsp(g);
  REQUIRE(!f.levels.empty());

  std::vector<vertex_t> base = f.levels[0];
  std::sort(base.begin(), base.end());
  REQUIRE(base.size() == g.n);
  for (vertex_t v = 0; v < g.n; ++v) REQUIRE(base[v] == v);

  for (std::size_t i = 1; i < f.levels.size(); ++i) {
    std::set<vertex_t> prev(f.levels[i - 1].begin(), f.levels[i - 1].end());
    std::set<vertex_t> cur(f.levels[i].begin(), f.levels[i].end());
    REQUIRE(cur.size() == f.levels[i].size());  // no repeats
    for (vertex_t v : cur) REQUIRE(prev.count(v) == 1);  // nested

    const double bound = std::pow(2.0, static_cast<double>(i));
    for (vertex_t a : cur)
      for (vertex_t b : cur)
        if (a < b) CHECK(dm.rows[a][b] >= bound);

    for (vertex_t v : prev) {  // maximal: nothing else could have joined
      if (cur.count(v)) continue;
      double nearest = 1e300;
      for (vertex_t u : cur) nearest = std::min(nearest, dm.rows[u][v]);
      CHECK(nearest < bound);
    }
  }
  for (vertex_t v = 0; v < g.n; ++v) {
    int deepest = 0;
    for (std::size_t i = 1; i < f.levels.size(); ++i)
      if (std::find(f.levels[i].begin(), f.levels[i].end(), v) != f.levels[i].end())
        deepest = static_cast<int>(i);
    CHECK(f.level_of[v] == deepest);
  }
}

}  // namespace

TEST_CASE("distance filtration invariants") {
  check_filtration(make_path(16), 1);
  check_filtration(make_cycle(16), 2);
  check_filtration(make_grid(4, 4), 3);
  Rng rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    vertex_t n = static_cast<vertex_t>(8 + rng.below(33));
    Graph g = testutil::random_connected_graph(n, rng.below(12), rng);
    check_filtration(g, 600 + trial);
  }
}

TEST_CASE("level neighborhoods are the nearest members") {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    vertex_t n = static_cast<vertex_t>(6 + rng.below(20));
    Graph g = testutil::random_connected_graph(n, rng.below(10), rng);
    DistanceMatrix dm = bfs_apsp(g);
    std::vector<char> in_level(n, 0);
    for (vertex_t v = 0; v < n; ++v) in_level[v] = rng.below(2) ? 1 : 0;
    const std::size_t cap = 4;
    for (vertex_t v = 0; v < n; ++v) {
      auto got = grip_neighborhood(g, v, in_level, cap);
      std::size_t available = 0;
      for (vertex_t u = 0; u < n; ++u)
        if (u != v && in_level[u] && dm.rows[v][u] >= 0) ++available;
      REQUIRE(got.size() == std::min(cap, available));
      int prev_d = 0;
      std::set<vertex_t> seen;
      for (auto [u, d] : got) {
        CHECK(u != v);
        CHECK(in_level[u] == 1);
        CHECK(static_cast<double>(d) == dm.rows[v][u]);
        CHECK(d >= prev_d);  // nearest first
        prev_d = d;
        seen.insert(u);
      }
      if (!got.empty()) {
        int worst = got.back().second;
        for (vertex_t u = 0; u < n; ++u)
          if (u != v && in_level[u] && !seen.count(u) && dm.rows[v][u] >= 0)
            CHECK(dm.rows[v][u] >= worst);
      }
    }
  }
}

TEST_CASE("filtration-based layout basics") {
  Graph g = make_grid(5, 5);
  GripParams p;
  SUBCASE("deterministic") {
    CHECK(testutil::max_coord_diff(grip_layout(g, p, 8), grip_layout(g, p, 8)) == 0.0);
  }
  SUBCASE("finite coordinates") {
    Layout l = grip_layout(g, p, 4);
    REQUIRE(l.size() == g.n);
    for (std::size_t i = 0; i < l.size(); ++i) {
      CHECK(std::isfinite(l.x[i]));
      CHECK(std::isfinite(l.y[i]));
    }
  }
}
