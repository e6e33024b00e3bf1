#include "glay/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

#include "glay/error.hpp"

namespace glay {

bool Graph::has_edge(vertex_t u, vertex_t v) const {
  if (u >= n || v >= n) return false;
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

Graph Graph::build(vertex_t n, std::vector<edge_t> edges) {
  Graph g;
  g.n = n;
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw precondition_error("edge endpoint out of range: (" + std::to_string(u) + ", " +
                               std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw precondition_error("self loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw precondition_error("duplicate edge");
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

namespace {

bool parse_u32(std::string_view tok, vertex_t& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

ParseResult parse_edge_list(std::string_view text) {
  ParseResult res;
  bool have_n = false;
  vertex_t n = 0;
  std::vector<edge_t> edges;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (!have_n) {
      if (toks.size() != 2 || toks[0] != "n" || !parse_u32(toks[1], n))
        throw parse_error("line " + std::to_string(lineno) + ": expected header \"n <count>\"");
      have_n = true;
      continue;
    }
    vertex_t u, v;
    if (toks.size() != 2 || !parse_u32(toks[0], u) || !parse_u32(toks[1], v))
      throw parse_error("line " + std::to_string(lineno) + ": expected \"u v\"");
    if (u >= n || v >= n)
      throw parse_error("line " + std::to_string(lineno) + ": vertex id out of range");
    if (u == v) {
      res.warnings.push_back("line " + std::to_string(lineno) + ": dropped self loop at " +
                             std::to_string(u));
      continue;
    }
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
  }
  if (!have_n) throw parse_error("missing \"n <count>\" header");
  std::sort(edges.begin(), edges.end());
  std::vector<edge_t> uniq;
  uniq.reserve(edges.size());
  for (auto& e : edges) {
    if (!uniq.empty() && uniq.back() == e) {
      res.warnings.push_back("dropped duplicate edge (" + std::to_string(e.first) + ", " +
                             std::to_string(e.second) + ")");
      continue;
    }
    uniq.push_back(e);
  }
  res.graph = Graph::build(n, std::move(uniq));
  return res;
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.n) + "\n";
  for (auto [u, v] : g.edges) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

double DistanceMatrix::max_finite() const {
  double m = 0.0;
  for (const auto& r : rows)
    for (double d : r)
      if (d > m) m = d;
  return m;
}

DistanceMatrix bfs_apsp(const Graph& g, std::span<const vertex_t> sources) {
  DistanceMatrix dm;
  dm.n = g.n;
  if (sources.empty()) {
    dm.sources.resize(g.n);
    for (vertex_t v = 0; v < g.n; ++v) dm.sources[v] = v;
  } else {
    dm.sources.assign(sources.begin(), sources.end());
  }
  dm.rows.reserve(dm.sources.size());
  std::vector<int> dist(g.n);
  std::deque<vertex_t> queue;
  for (vertex_t s : dm.sources) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      vertex_t u = queue.front();
      queue.pop_front();
      for (vertex_t w : g.adj[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
    }
    std::vector<double> row(g.n);
    for (vertex_t v = 0; v < g.n; ++v)
      row[v] = dist[v] < 0 ? DistanceMatrix::kUnreachable : static_cast<double>(dist[v]);
    dm.rows.push_back(std::move(row));
  }
  return dm;
}

std::vector<vertex_t> k_neighborhood(const Graph& g, vertex_t v, int radius) {
  std::vector<int> dist(g.n, -1);
  std::deque<vertex_t> queue;
  dist[v] = 0;
  queue.push_back(v);
  std::vector<vertex_t> out;
  while (!queue.empty()) {
    vertex_t u = queue.front();
    queue.pop_front();
    out.push_back(u);
    if (dist[u] == radius) continue;
    for (vertex_t w : g.adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<vertex_t, int>> k_neighborhood_bfs(const Graph& g, vertex_t v,
                                                         int radius, std::size_t cap) {
  std::vector<int> dist(g.n, -1);
  std::deque<vertex_t> queue;
  dist[v] = 0;
  queue.push_back(v);
  std::vector<std::pair<vertex_t, int>> out;
  while (!queue.empty() && out.size() < cap) {
    vertex_t u = queue.front();
    queue.pop_front();
    if (u != v) out.emplace_back(u, dist[u]);
    if (dist[u] == radius) continue;
    for (vertex_t w : g.adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return out;
}

std::vector<std::vector<vertex_t>> connected_components(const Graph& g) {
  std::vector<char> seen(g.n, 0);
  std::vector<std::vector<vertex_t>> comps;
  std::deque<vertex_t> queue;
  for (vertex_t s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::vector<vertex_t> comp;
    seen[s] = 1;
    queue.push_back(s);
    while (!queue.empty()) {
      vertex_t u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (vertex_t w : g.adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Graph induced_subgraph(const Graph& g, std::span<const vertex_t> verts) {
  std::vector<vertex_t> remap(g.n, static_cast<vertex_t>(-1));
  for (std::size_t i = 0; i < verts.size(); ++i) remap[verts[i]] = static_cast<vertex_t>(i);
  std::vector<edge_t> edges;
  for (auto [u, v] : g.edges)
    if (remap[u] != static_cast<vertex_t>(-1) && remap[v] != static_cast<vertex_t>(-1))
      edges.emplace_back(remap[u], remap[v]);
  Graph sub = Graph::build(static_cast<vertex_t>(verts.size()), std::move(edges));
  if (!g.labels.empty()) {
    sub.labels.reserve(verts.size());
    for (vertex_t v : verts) sub.labels.push_back(g.labels[v]);
  }
  return sub;
}

int eccentricity(const Graph& g, vertex_t v) {
  std::vector<int> dist(g.n, -1);
  std::deque<vertex_t> queue;
  dist[v] = 0;
  queue.push_back(v);
  int ecc = 0;
  while (!queue.empty()) {
    vertex_t u = queue.front();
    queue.pop_front();
    ecc = std::max(ecc, dist[u]);
    for (vertex_t w : g.adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return ecc;
}

}  // namespace glay
