#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glay/graph.hpp"
#include "glay/layout.hpp"
#include "glay/metrics.hpp"

namespace glay {

// One CLI invocation's worth of settings.  String-typed fields are parsed
// and validated inside run() so the front end stays a thin flag mapper.
struct RunConfig {
  std::string algorithm = "fr";
  std::string input_path;  // edge-list text or JSON graph, sniffed by content
  std::string gen_spec;    // built-in family instead of a file, e.g. "grid:8x8"
  std::string out_json, out_svg, out_report;
  std::string dump_hierarchy;  // coarsening structure (walshaw / grip / hk)
  std::uint64_t seed = 0;
  int iterations = -1;                // < 0: per-algorithm default
  std::string space = "euclidean-2d";  // "plane" accepted as an alias
  std::vector<vertex_t> fixed;        // tutte outer face
  double theta = 0.5;                 // fr-bh opening angle
  vertex_t pivots = 50;               // pivot-stress source count
  std::string weighting = "uniform";  // stress weighting: uniform | inverse-square
  double L0 = -1.0;                   // kk display size / riemann drawing diameter
  double K = 1.0;                     // kk spring strength
  double epsilon = -1.0;              // kk stopping threshold
  double C = -1.0;                    // walshaw repulsion constant / fr & riemann c
  double t0 = -1.0;                   // initial temperature override
  double tol = -1.0;                  // tutte/stress/walshaw tolerance override
  double cutoff = -1.0;               // fr-grid repulsion radius
  double view_lon = 0.0, view_lat = 0.0;  // sphere rendering direction (degrees)
  std::string stepper = "fr";         // riemann local step: fr | kk
};

struct RunResult {
  Graph graph;
  Layout layout;
  QualityReport report;
  std::vector<std::string> warnings;  // input repairs worth surfacing
};

extern const char* const kAlgorithms[12];

// Loads the graph, runs the chosen algorithm (disconnected inputs are laid
// out per component and tiled in a row), computes the quality report, and
// writes whichever output files the config names.  Throws parse_error /
// precondition_error; anything else is an internal failure.
RunResult run(const RunConfig& cfg);

// run() wrapped for a process entry point: prints warnings and errors to
// stderr and maps exceptions to exit codes 2 (parse), 3 (precondition),
// 4 (internal); 0 on success.
int run_main(const RunConfig& cfg);

}  // namespace glay
