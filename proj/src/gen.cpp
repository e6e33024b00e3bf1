#include "glay/gen.hpp"

#include <charconv>
#include <string>

#include "glay/error.hpp"

namespace glay {

Graph make_path(vertex_t n) {
  std::vector<edge_t> e;
  for (vertex_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::build(n, std::move(e));
}

Graph make_cycle(vertex_t n) {
  if (n < 3) throw precondition_error("cycle needs at least 3 vertices");
  std::vector<edge_t> e;
  for (vertex_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::build(n, std::move(e));
}

Graph make_grid(vertex_t rows, vertex_t cols) {
  if (rows == 0 || cols == 0) throw precondition_error("grid needs positive dimensions");
  auto id = [cols](vertex_t r, vertex_t c) { return r * cols + c; };
  std::vector<edge_t> e;
  for (vertex_t r = 0; r < rows; ++r)
    for (vertex_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph::build(rows * cols, std::move(e));
}

Graph make_complete(vertex_t n) {
  std::vector<edge_t> e;
  for (vertex_t i = 0; i < n; ++i)
    for (vertex_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::build(n, std::move(e));
}

Graph make_star(vertex_t leaves) {
  std::vector<edge_t> e;
  for (vertex_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::build(leaves + 1, std::move(e));
}

Graph make_wheel(vertex_t rim) {
  if (rim < 3) throw precondition_error("wheel needs a rim of at least 3");
  std::vector<edge_t> e;
  for (vertex_t i = 1; i <= rim; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i == rim ? 1 : i + 1);
  }
  return Graph::build(rim + 1, std::move(e));
}

Graph make_hypercube(unsigned dims) {
  if (dims > 20) throw precondition_error("hypercube dimension too large");
  vertex_t n = vertex_t(1) << dims;
  std::vector<edge_t> e;
  for (vertex_t v = 0; v < n; ++v)
    for (unsigned b = 0; b < dims; ++b) {
      vertex_t w = v ^ (vertex_t(1) << b);
      if (v < w) e.emplace_back(v, w);
    }
  return Graph::build(n, std::move(e));
}

Graph make_binary_tree(unsigned depth) {
  vertex_t n = (vertex_t(1) << (depth + 1)) - 1;
  std::vector<edge_t> e;
  for (vertex_t v = 1; v < n; ++v) e.emplace_back((v - 1) / 2, v);
  return Graph::build(n, std::move(e));
}

Graph make_nested_triangles(vertex_t layers) {
  if (layers == 0) throw precondition_error("nested triangles need at least 1 layer");
  std::vector<edge_t> e;
  for (vertex_t t = 0; t < layers; ++t) {
    vertex_t b = 3 * t;
    e.emplace_back(b, b + 1);
    e.emplace_back(b + 1, b + 2);
    e.emplace_back(b, b + 2);
    if (t + 1 < layers)
      for (vertex_t j = 0; j < 3; ++j) e.emplace_back(b + j, b + 3 + j);
  }
  return Graph::build(3 * layers, std::move(e));
}

std::vector<vertex_t> nested_triangles_outer_face() { return {0, 1, 2}; }

// Ring construction: outer pentagon 0-4, outer spokes to 5-9, a ten-cycle
// zigzag 5..14 alternating with 10-14, inner spokes 10-14 to pentagon 15-19.
Graph make_dodecahedron() {
  std::vector<edge_t> e;
  for (vertex_t i = 0; i < 5; ++i) {
    vertex_t j = (i + 1) % 5;
    e.emplace_back(i, j);                    // outer pentagon
    e.emplace_back(i, 5 + i);                // outer spokes
    e.emplace_back(5 + i, 10 + i);           // zigzag up
    e.emplace_back(10 + i, 5 + j);           // zigzag down
    e.emplace_back(10 + i, 15 + i);          // inner spokes
    e.emplace_back(15 + i, 15 + j);          // inner pentagon
  }
  return Graph::build(20, std::move(e));
}

std::vector<vertex_t> dodecahedron_outer_face() { return {0, 1, 2, 3, 4}; }

// Top apex 0, upper ring 1-5, lower ring 6-10, bottom apex 11.
Graph make_icosahedron() {
  std::vector<edge_t> e;
  for (vertex_t i = 0; i < 5; ++i) {
    vertex_t j = (i + 1) % 5;
    e.emplace_back(0, 1 + i);
    e.emplace_back(1 + i, 1 + j);
    e.emplace_back(6 + i, 6 + j);
    e.emplace_back(1 + i, 6 + i);
    e.emplace_back(1 + j, 6 + i);
    e.emplace_back(11, 6 + i);
  }
  return Graph::build(12, std::move(e));
}

std::vector<vertex_t> icosahedron_outer_face() { return {0, 1, 2}; }

namespace {

vertex_t parse_size(std::string_view s, std::string_view spec) {
  vertex_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v == 0)
    throw parse_error("bad size in graph spec \"" + std::string(spec) + "\"");
  return v;
}

}  // namespace

Graph make_from_spec(std::string_view spec) {
  std::string_view family = spec;
  std::string_view arg;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    family = spec.substr(0, colon);
    arg = spec.substr(colon + 1);
  }
  auto need_arg = [&]() -> vertex_t {
    if (arg.empty()) throw parse_error("graph spec \"" + std::string(spec) + "\" needs a size");
    return parse_size(arg, spec);
  };
  if (family == "path") return make_path(need_arg());
  if (family == "cycle") return make_cycle(need_arg());
  if (family == "complete") return make_complete(need_arg());
  if (family == "star") return make_star(need_arg());
  if (family == "wheel") return make_wheel(need_arg());
  if (family == "hypercube") return make_hypercube(need_arg());
  if (family == "tree") return make_binary_tree(need_arg());
  if (family == "nested-triangles") return make_nested_triangles(need_arg());
  if (family == "grid") {
    auto x = arg.find('x');
    if (x == std::string_view::npos) {
      vertex_t side = need_arg();
      return make_grid(side, side);
    }
    return make_grid(parse_size(arg.substr(0, x), spec), parse_size(arg.substr(x + 1), spec));
  }
  if (family == "dodecahedron") return make_dodecahedron();
  if (family == "icosahedron") return make_icosahedron();
  throw parse_error("unknown graph family \"" + std::string(family) + "\"");
}

}  // namespace glay
