#pragma once

#include <string>

#include "glay/graph.hpp"
#include "glay/layout.hpp"

namespace glay {

struct SvgOptions {
  double vertex_radius = 4.0;
  double stroke_width = 1.0;
  // Orthographic view direction for spherical layouts, in degrees.
  double view_lon = 0.0;
  double view_lat = 0.0;
};

// Deterministic standalone SVG: 1000 x 1000 canvas, drawing scaled to fit
// with a 5% margin (rendering-only rescale), edges first (in edge order)
// as straight segments, then vertices (by id) as filled circles.  Spherical
// layouts are projected orthographically along the view direction with the
// far hemisphere dimmed; hyperbolic layouts show the unit-disk boundary.
std::string render_svg(const Layout& l, const Graph& g, const SvgOptions& opt = {});

}  // namespace glay
