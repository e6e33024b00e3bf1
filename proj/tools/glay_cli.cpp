#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "glay/run.hpp"

int main(int argc, char** argv) {
  glay::RunConfig cfg;
  std::string view;

  CLI::App app{"glay — force-directed graph layout"};
  app.add_option("-a,--algorithm", cfg.algorithm,
                 "eades | fr | fr-grid | fr-bh | tutte | kk | stress | pivot-stress | "
                 "hk | grip | walshaw | riemann")
      ->capture_default_str();
  app.add_option("-i,--input", cfg.input_path,
                 "graph file: edge-list text (\"n <count>\" header) or JSON");
  app.add_option("-g,--gen", cfg.gen_spec,
                 "built-in graph instead of a file, e.g. path:16, cycle:8, grid:10x8, "
                 "complete:5, star:6, wheel:8, hypercube:4, tree:3, "
                 "nested-triangles:5, dodecahedron, icosahedron");
  app.add_option("-s,--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--out-json", cfg.out_json, "write the layout as JSON");
  app.add_option("--out-svg", cfg.out_svg, "write an SVG rendering");
  app.add_option("--out-report", cfg.out_report, "write the quality report as JSON");
  app.add_option("--dump-hierarchy", cfg.dump_hierarchy,
                 "write the coarsening structure as JSON (walshaw, grip)");
  app.add_option("-n,--iterations", cfg.iterations,
                 "iteration budget (meaning is per algorithm; default varies)");
  app.add_option("--space", cfg.space, "plane | sphere | hyperbolic (riemann only)")
      ->capture_default_str();
  app.add_option("--fixed", cfg.fixed,
                 "tutte outer-face vertex ids in boundary order, e.g. --fixed 0,1,2")
      ->delimiter(',');
  app.add_option("--theta", cfg.theta, "fr-bh opening angle")->capture_default_str();
  app.add_option("--pivots", cfg.pivots, "pivot-stress source count")->capture_default_str();
  app.add_option("--weighting", cfg.weighting, "stress weighting: uniform | inverse-square")
      ->capture_default_str();
  app.add_option("--L0", cfg.L0, "kk display size / riemann drawing diameter");
  app.add_option("--K", cfg.K, "kk spring strength")->capture_default_str();
  app.add_option("--epsilon", cfg.epsilon, "kk stopping threshold (default 1e-4)");
  app.add_option("--C", cfg.C, "repulsion/spring constant (fr, walshaw, riemann)");
  app.add_option("--t0", cfg.t0, "initial temperature override");
  app.add_option("--tol", cfg.tol, "convergence tolerance (tutte, stress, walshaw)");
  app.add_option("--cutoff", cfg.cutoff, "fr-grid repulsion radius (default 2k)");
  app.add_option("--view", view, "sphere view direction \"lon,lat\" in degrees");
  app.add_option("--stepper", cfg.stepper, "riemann local step: fr | kk")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!view.empty()) {
    if (std::sscanf(view.c_str(), "%lf,%lf", &cfg.view_lon, &cfg.view_lat) != 2) {
      std::fprintf(stderr, "error: --view expects \"lon,lat\"\n");
      return 2;
    }
  }
  return glay::run_main(cfg);
}
