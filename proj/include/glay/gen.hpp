#pragma once

#include <string_view>

#include "glay/graph.hpp"

namespace glay {

Graph make_path(vertex_t n);
Graph make_cycle(vertex_t n);
Graph make_grid(vertex_t rows, vertex_t cols);
Graph make_complete(vertex_t n);
Graph make_star(vertex_t leaves);           // center is vertex 0
Graph make_wheel(vertex_t rim);             // hub is vertex 0, rim cycle 1..rim
Graph make_hypercube(unsigned dims);        // 2^dims vertices, ids differ in one bit
Graph make_binary_tree(unsigned depth);     // complete binary tree, 2^(depth+1)-1 vertices

// `layers` concentric triangles; triangle t is vertices 3t..3t+2, joined to
// the next layer vertex-by-vertex.  Planar and 3-connected for layers >= 2;
// the innermost and outermost triangles are faces.
Graph make_nested_triangles(vertex_t layers);

Graph make_dodecahedron();  // 20 vertices, 30 edges, 3-regular
Graph make_icosahedron();   // 12 vertices, 30 edges, 5-regular

// Faces usable as the fixed outer boundary in barycentric layouts.
std::vector<vertex_t> nested_triangles_outer_face();  // {0, 1, 2}
std::vector<vertex_t> dodecahedron_outer_face();      // a pentagon
std::vector<vertex_t> icosahedron_outer_face();       // a triangle

// "family" or "family:size" (grid takes RxC), e.g. "path:16", "grid:10x8",
// "hypercube:4", "dodecahedron".  Throws parse_error on anything else.
Graph make_from_spec(std::string_view spec);

}  // namespace glay
