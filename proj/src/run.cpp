#include "glay/run.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "glay/error.hpp"
#include "glay/gen.hpp"
#include "glay/grip.hpp"
#include "glay/hk.hpp"
#include "glay/jsonio.hpp"
#include "glay/kk.hpp"
#include "glay/pivot.hpp"
#include "glay/riemannian.hpp"
#include "glay/rng.hpp"
#include "glay/smacof.hpp"
#include "glay/springs.hpp"
#include "glay/svg.hpp"
#include "glay/tutte.hpp"
#include "glay/walshaw.hpp"

namespace glay {

const char* const kAlgorithms[12] = {"eades",  "fr",   "fr-grid", "fr-bh",
                                     "tutte",  "kk",   "stress",  "pivot-stress",
                                     "hk",     "grip", "walshaw", "riemann"};

namespace {

// Pairwise metrics are quadratic; past these sizes the report simply omits
// them rather than stalling the run.
constexpr std::size_t kPairwiseCap = 2000;   // stress / separation: O(n^2)
constexpr std::size_t kCrossingsCap = 20000;  // crossings: O(m^2)

constexpr std::uint64_t kComponentSalt = 0x636f6d70ull;  // distinct stream per tile

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw precondition_error("cannot write " + path);
  out << content;
  if (!out) throw precondition_error("failed writing " + path);
}

Graph load_graph(const RunConfig& cfg, std::vector<std::string>& warnings) {
  if (!cfg.gen_spec.empty() && !cfg.input_path.empty())
    throw parse_error("give either an input file or a generator spec, not both");
  if (!cfg.gen_spec.empty()) return make_from_spec(cfg.gen_spec);
  if (cfg.input_path.empty()) throw parse_error("no input graph (need a file or a generator)");
  std::string text = read_file(cfg.input_path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(text);
  ParseResult pr = parse_edge_list(text);
  warnings.insert(warnings.end(), pr.warnings.begin(), pr.warnings.end());
  return pr.graph;
}

Space parse_space(const std::string& s) {
  if (s == "plane") return Space::euclidean2d;
  return space_from_name(s);
}

Weighting parse_weighting(const std::string& s) {
  if (s == "uniform") return Weighting::uniform;
  if (s == "inverse-square") return Weighting::inverse_square;
  throw parse_error("unknown weighting \"" + s + "\" (uniform | inverse-square)");
}

bool known_algorithm(const std::string& a) {
  for (const char* k : kAlgorithms)
    if (a == k) return true;
  return false;
}

FrParams fr_params(const RunConfig& cfg) {
  FrParams p;
  if (cfg.iterations > 0) p.iterations = cfg.iterations;
  if (cfg.C > 0.0) p.c = cfg.C;
  if (cfg.t0 > 0.0) p.t0 = cfg.t0;
  return p;
}

// Lays out one graph the chosen way.  `initial_stress` is filled only by the
// majorization family, which knows its starting layout.
Layout layout_one(const Graph& g, const RunConfig& cfg, std::uint64_t seed,
                  double* initial_stress) {
  const std::string& a = cfg.algorithm;
  if (a == "eades") {
    EadesParams p;
    if (cfg.iterations > 0) p.iterations = cfg.iterations;
    return eades_layout(g, p, seed);
  }
  if (a == "fr") return fr_layout(g, fr_params(cfg), seed);
  if (a == "fr-grid") return fr_grid_layout(g, fr_params(cfg), cfg.cutoff, seed);
  if (a == "fr-bh") return fr_bh_layout(g, fr_params(cfg), cfg.theta, seed);
  if (a == "tutte") {
    if (cfg.fixed.size() < 3)
      throw precondition_error("tutte needs at least 3 fixed vertices (--fixed)");
    TutteOptions opt;
    if (cfg.tol > 0.0) opt.tol = cfg.tol;
    if (cfg.iterations > 0) opt.max_sweeps = cfg.iterations;
    return tutte_layout(g, cfg.fixed, opt);
  }
  if (a == "kk") {
    KkParams p;
    if (cfg.L0 > 0.0) p.L0 = cfg.L0;
    p.K = cfg.K;
    if (cfg.epsilon > 0.0) p.epsilon = cfg.epsilon;
    if (cfg.iterations > 0) p.max_rounds = cfg.iterations;
    return kk_layout(g, p, seed);
  }
  if (a == "stress" || a == "pivot-stress") {
    Weighting w = parse_weighting(cfg.weighting);
    double tol = cfg.tol > 0.0 ? cfg.tol : 1e-6;
    int iters = cfg.iterations > 0 ? cfg.iterations : 300;
    DistanceMatrix dm = bfs_apsp(g);
    Layout init;
    if (a == "stress") {
      double frame = std::max(1.0, dm.max_finite());
      init = init_random(g.n, seed, frame, frame);
    } else {
      vertex_t h = std::min<vertex_t>(std::max<vertex_t>(cfg.pivots, 3), g.n);
      init = pivot_init(g, h, seed).layout;
    }
    if (initial_stress) *initial_stress = stress(init, dm, w);
    return stress_layout(g, w, tol, iters, std::move(init)).layout;
  }
  if (a == "hk") {
    HkParams p;
    if (cfg.iterations > 0) p.iterations = cfg.iterations;
    return hk_layout(g, p, seed);
  }
  if (a == "grip") {
    GripParams p;
    if (cfg.iterations > 0) p.rounds = cfg.iterations;
    return grip_layout(g, p, seed);
  }
  if (a == "walshaw") {
    WalshawParams p;
    if (cfg.C > 0.0) p.C = cfg.C;
    if (cfg.t0 > 0.0) p.t0_factor = cfg.t0;
    if (cfg.tol > 0.0) p.tol = cfg.tol;
    if (cfg.iterations > 0) p.max_sweeps = cfg.iterations;
    return walshaw_layout(g, p, seed);
  }
  if (a == "riemann") {
    RiemannParams p;
    p.space = parse_space(cfg.space);
    if (p.space == Space::euclidean2d) p.space = Space::sphere;  // flag left at default
    if (cfg.stepper == "fr")
      p.stepper = RiemannStepper::fr;
    else if (cfg.stepper == "kk")
      p.stepper = RiemannStepper::kk;
    else
      throw parse_error("unknown stepper \"" + cfg.stepper + "\" (fr | kk)");
    if (cfg.iterations > 0) p.iterations = cfg.iterations;
    if (cfg.C > 0.0) p.c = cfg.C;
    if (cfg.t0 > 0.0) p.t0 = cfg.t0;
    if (cfg.L0 > 0.0) p.l0 = cfg.L0;
    return riemannian_layout(g, p, seed);
  }
  throw parse_error("unknown algorithm \"" + a + "\"");
}

struct Extent {
  double lo_x = 0.0, hi_x = 0.0, lo_y = 0.0, hi_y = 0.0;
};

Extent extent_of(const Layout& l) {
  Extent e;
  if (l.size() == 0) return e;
  e.lo_x = e.hi_x = l.x[0];
  e.lo_y = e.hi_y = l.y[0];
  for (std::size_t i = 1; i < l.size(); ++i) {
    e.lo_x = std::min(e.lo_x, l.x[i]);
    e.hi_x = std::max(e.hi_x, l.x[i]);
    e.lo_y = std::min(e.lo_y, l.y[i]);
    e.hi_y = std::max(e.hi_y, l.y[i]);
  }
  return e;
}

// Places component layouts left to right with a gap of one frame width
// between consecutive tiles, vertically centered.
Layout tile_components(const Graph& g, const std::vector<std::vector<vertex_t>>& comps,
                       const std::vector<Layout>& parts) {
  Layout merged;
  merged.resize(g.n);
  double cursor = 0.0, max_h = 0.0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Layout& part = parts[c];
    Extent e = extent_of(part);
    double w = std::max(e.hi_x - e.lo_x, 1e-9);
    double h = e.hi_y - e.lo_y;
    double off_x = cursor - e.lo_x;
    double off_y = -0.5 * (e.lo_y + e.hi_y);
    for (std::size_t i = 0; i < comps[c].size(); ++i) {
      merged.x[comps[c][i]] = part.x[i] + off_x;
      merged.y[comps[c][i]] = part.y[i] + off_y;
    }
    cursor += w + std::max(part.frame_w, w);
    max_h = std::max(max_h, h);
  }
  Extent e = extent_of(merged);
  merged.frame_w = std::max(1.0, e.hi_x - e.lo_x);
  merged.frame_h = std::max(1.0, std::max(max_h, e.hi_y - e.lo_y));
  return merged;
}

std::string hierarchy_json(const Graph& g, const RunConfig& cfg) {
  std::string out;
  if (cfg.algorithm == "walshaw") {
    WalshawParams p;
    if (cfg.iterations > 0) p.max_sweeps = cfg.iterations;
    CoarseHierarchy h = build_hierarchy(g, p.min_coarse, p.max_levels, cfg.seed);
    out = "{\"algorithm\":\"walshaw\",\"levels\":[";
    for (std::size_t i = 0; i < h.levels.size(); ++i) {
      if (i) out += ',';
      const WeightedGraph& wg = h.levels[i];
      out += "{\"level\":" + std::to_string(i) + ",\"n\":" + std::to_string(wg.g.n) +
             ",\"m\":" + std::to_string(wg.g.edges.size()) + ",\"vertex_weights\":[";
      for (std::size_t j = 0; j < wg.weight.size(); ++j) {
        if (j) out += ',';
        out += json_double(wg.weight[j]);
      }
      out += ']';
      if (i < h.projections.size()) {
        out += ",\"projection\":[";
        for (std::size_t j = 0; j < h.projections[i].size(); ++j) {
          if (j) out += ',';
          out += std::to_string(h.projections[i][j]);
        }
        out += ']';
      }
      out += '}';
    }
    out += "]}\n";
    return out;
  }
  if (cfg.algorithm == "grip") {
    Filtration f = mis_filtration(g, cfg.seed);
    out = "{\"algorithm\":\"grip\",\"levels\":[";
    for (std::size_t i = 0; i < f.levels.size(); ++i) {
      if (i) out += ',';
      out += "{\"level\":" + std::to_string(i) + ",\"members\":[";
      for (std::size_t j = 0; j < f.levels[i].size(); ++j) {
        if (j) out += ',';
        out += std::to_string(f.levels[i][j]);
      }
      out += "]}";
    }
    out += "]}\n";
    return out;
  }
  throw precondition_error("--dump-hierarchy applies to walshaw and grip runs");
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  if (!known_algorithm(cfg.algorithm))
    throw parse_error("unknown algorithm \"" + cfg.algorithm + "\"");
  Space space = parse_space(cfg.space);
  if (cfg.algorithm != "riemann" && space != Space::euclidean2d)
    throw precondition_error("only the riemann algorithm draws on curved spaces");

  RunResult res;
  res.graph = load_graph(cfg, res.warnings);
  const Graph& g = res.graph;

  auto comps = connected_components(g);
  const bool whole_graph =
      comps.size() <= 1 || cfg.algorithm == "tutte" || cfg.algorithm == "riemann";

  double initial_stress = -1.0;
  auto started = std::chrono::steady_clock::now();
  if (whole_graph) {
    res.layout = layout_one(g, cfg, cfg.seed, &initial_stress);
  } else {
    std::vector<Layout> parts;
    parts.reserve(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
      Graph sub = induced_subgraph(g, comps[c]);
      std::uint64_t sub_seed = mix64(cfg.seed ^ (kComponentSalt + c));
      parts.push_back(layout_one(sub, cfg, sub_seed, nullptr));
    }
    res.layout = tile_components(g, comps, parts);
  }
  auto finished = std::chrono::steady_clock::now();

  QualityReport& q = res.report;
  q.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(finished - started).count();
  q.initial_stress = initial_stress;
  if (!g.edges.empty()) {
    EdgeLengthStats es = edge_length_stats(res.layout, g);
    q.edge_mean = es.mean;
    q.edge_rel_std = es.rel_std;
  }
  if (res.layout.space == Space::euclidean2d) {
    if (g.edges.size() <= kCrossingsCap) q.crossings = count_crossings(res.layout, g);
    if (g.n <= kPairwiseCap && g.n > 0) {
      q.min_separation = min_vertex_separation(res.layout);
      Weighting w = parse_weighting(cfg.weighting);
      if (comps.size() == 1) {
        DistanceMatrix dm = bfs_apsp(g);
        q.stress_value = stress(res.layout, dm, w);
        q.normalized = normalized_stress(res.layout, dm);
      } else if (comps.size() > 1) {
        // distance-based metrics are per component; report their sum
        double total = 0.0;
        for (const auto& comp : comps) {
          Graph sub = induced_subgraph(g, comp);
          Layout part;
          part.resize(comp.size());
          for (std::size_t i = 0; i < comp.size(); ++i) {
            part.x[i] = res.layout.x[comp[i]];
            part.y[i] = res.layout.y[comp[i]];
          }
          total += stress(part, bfs_apsp(sub), w);
        }
        q.stress_value = total;
      }
    }
  }

  if (res.layout.space != Space::euclidean2d && g.n <= kPairwiseCap && comps.size() == 1)
    q.geodesic = geodesic_stress(res.layout, bfs_apsp(g), cfg.L0);

  if (!cfg.out_json.empty()) write_file(cfg.out_json, layout_to_json(res.layout));
  if (!cfg.out_svg.empty()) {
    SvgOptions so;
    so.view_lon = cfg.view_lon;
    so.view_lat = cfg.view_lat;
    write_file(cfg.out_svg, render_svg(res.layout, g, so));
  }
  if (!cfg.out_report.empty())
    write_file(cfg.out_report, report_to_json(q, cfg.algorithm, cfg.seed, g, res.layout.space));
  if (!cfg.dump_hierarchy.empty()) write_file(cfg.dump_hierarchy, hierarchy_json(g, cfg));
  return res;
}

int run_main(const RunConfig& cfg) {
  try {
    RunResult res = run(cfg);
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
    return 0;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace glay
