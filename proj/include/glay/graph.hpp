#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace glay {

using vertex_t = std::uint32_t;
using edge_t = std::pair<vertex_t, vertex_t>;

// Simple undirected graph.  Edges are stored once with u < v, sorted
// lexicographically; adjacency lists are sorted ascending.  No self loops,
// no duplicates.
struct Graph {
  vertex_t n = 0;
  std::vector<edge_t> edges;
  std::vector<std::vector<vertex_t>> adj;
  std::vector<std::string> labels;  // empty when unlabeled, else size n

  std::size_t degree(vertex_t v) const { return adj[v].size(); }
  bool has_edge(vertex_t u, vertex_t v) const;

  // Canonicalizes (orients u<v, sorts) and builds adjacency.  Throws
  // precondition_error on out-of-range endpoints, self loops or duplicates.
  static Graph build(vertex_t n, std::vector<edge_t> edges);
};

struct ParseResult {
  Graph graph;
  std::vector<std::string> warnings;  // one entry per repaired line
};

// Text edge-list format: first non-comment line "n <count>", then "u v"
// pairs.  '#' starts a comment.  Self loops and duplicate edges are dropped
// with a warning; out-of-range ids are a parse_error.
ParseResult parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

// All-pairs (or some-pairs) shortest hop counts via one BFS per source.
// Distances are doubles so layout code can consume them directly;
// unreachable pairs hold kUnreachable.
struct DistanceMatrix {
  static constexpr double kUnreachable = -1.0;

  std::vector<vertex_t> sources;          // row i holds distances from sources[i]
  std::vector<std::vector<double>> rows;  // each row has size n
  vertex_t n = 0;

  bool full() const { return sources.size() == n; }
  const std::vector<double>& row(std::size_t i) const { return rows[i]; }

  // Largest finite entry (graph diameter when full and connected).
  double max_finite() const;
};

// `sources` empty means all vertices (rows in vertex order).
DistanceMatrix bfs_apsp(const Graph& g, std::span<const vertex_t> sources = {});

// Vertices within `radius` hops of v (v included), ascending by id.
std::vector<vertex_t> k_neighborhood(const Graph& g, vertex_t v, int radius);

// Like k_neighborhood but in BFS discovery order (distance, then id), with
// hop distances, truncated to at most `cap` vertices (v excluded).
std::vector<std::pair<vertex_t, int>> k_neighborhood_bfs(const Graph& g, vertex_t v,
                                                         int radius, std::size_t cap);

// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<vertex_t>> connected_components(const Graph& g);

// Induced subgraph on `verts` (ids remapped to 0..k-1 in the given order).
Graph induced_subgraph(const Graph& g, std::span<const vertex_t> verts);

// Eccentricity of v in hops (max finite BFS distance from v).
int eccentricity(const Graph& g, vertex_t v);

}  // namespace glay
