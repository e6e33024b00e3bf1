#include "glay/jsonio.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

#include "glay/error.hpp"

namespace glay {

namespace {

using nlohmann::json;

json parse_or_throw(std::string_view text, const char* what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw parse_error(std::string(what) + ": malformed JSON");
  return doc;
}

std::string quote(const std::string& s) { return json(s).dump(); }

}  // namespace

std::string json_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string graph_to_json(const Graph& g) {
  std::string out = "{\"n\":" + std::to_string(g.n) + ",\"edges\":[";
  bool first = true;
  for (auto [u, v] : g.edges) {
    if (!first) out += ',';
    first = false;
    out += '[';
    out += std::to_string(u);
    out += ',';
    out += std::to_string(v);
    out += ']';
  }
  out += ']';
  if (!g.labels.empty()) {
    out += ",\"labels\":[";
    first = true;
    for (const auto& s : g.labels) {
      if (!first) out += ',';
      first = false;
      out += quote(s);
    }
    out += ']';
  }
  out += "}\n";
  return out;
}

Graph graph_from_json(std::string_view text) {
  json doc = parse_or_throw(text, "graph");
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw parse_error("graph: expected object with \"n\" and \"edges\"");
  if (!doc["n"].is_number_unsigned())
    throw parse_error("graph: \"n\" must be a non-negative integer");
  std::uint64_t n64 = doc["n"].get<std::uint64_t>();
  if (n64 > 0xffffffffull) throw parse_error("graph: \"n\" out of range");
  auto n = static_cast<vertex_t>(n64);
  if (!doc["edges"].is_array()) throw parse_error("graph: \"edges\" must be an array");
  std::vector<edge_t> edges;
  edges.reserve(doc["edges"].size());
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned())
      throw parse_error("graph: each edge must be a pair of vertex ids");
    std::uint64_t u = e[0].get<std::uint64_t>(), v = e[1].get<std::uint64_t>();
    if (u >= n64 || v >= n64) throw parse_error("graph: edge endpoint out of range");
    edges.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
  }
  Graph g = Graph::build(n, std::move(edges));
  if (doc.contains("labels")) {
    const auto& ls = doc["labels"];
    if (!ls.is_array() || ls.size() != n)
      throw parse_error("graph: \"labels\" must list one string per vertex");
    g.labels.clear();
    g.labels.reserve(n);
    for (const auto& s : ls) {
      if (!s.is_string()) throw parse_error("graph: labels must be strings");
      g.labels.push_back(s.get<std::string>());
    }
  }
  return g;
}

std::string layout_to_json(const Layout& l) {
  std::string out = "{\"space\":" + quote(space_name(l.space)) + ",\"positions\":[";
  const bool triples = l.space == Space::sphere;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) out += ',';
    out += '[';
    out += json_double(l.x[i]);
    out += ',';
    out += json_double(l.y[i]);
    if (triples) {
      out += ',';
      out += json_double(l.z[i]);
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

Layout layout_from_json(std::string_view text) {
  json doc = parse_or_throw(text, "layout");
  if (!doc.is_object() || !doc.contains("space") || !doc.contains("positions"))
    throw parse_error("layout: expected object with \"space\" and \"positions\"");
  if (!doc["space"].is_string()) throw parse_error("layout: \"space\" must be a string");
  Layout l;
  l.space = space_from_name(doc["space"].get<std::string>());
  const auto& ps = doc["positions"];
  if (!ps.is_array()) throw parse_error("layout: \"positions\" must be an array");
  const std::size_t dims = l.space == Space::sphere ? 3 : 2;
  l.resize(ps.size());
  double lo_x = 0.0, hi_x = 0.0, lo_y = 0.0, hi_y = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto& p = ps[i];
    if (!p.is_array() || p.size() != dims)
      throw parse_error("layout: each position needs " + std::to_string(dims) +
                        " coordinates");
    for (const auto& c : p)
      if (!c.is_number()) throw parse_error("layout: coordinates must be numbers");
    l.x[i] = p[0].get<double>();
    l.y[i] = p[1].get<double>();
    if (dims == 3) l.z[i] = p[2].get<double>();
    if (i == 0) {
      lo_x = hi_x = l.x[i];
      lo_y = hi_y = l.y[i];
    } else {
      lo_x = std::min(lo_x, l.x[i]);
      hi_x = std::max(hi_x, l.x[i]);
      lo_y = std::min(lo_y, l.y[i]);
      hi_y = std::max(hi_y, l.y[i]);
    }
  }
  if (l.space == Space::euclidean2d && l.size() > 0) {
    l.frame_w = std::max(1.0, hi_x - lo_x);
    l.frame_h = std::max(1.0, hi_y - lo_y);
  }
  return l;
}

std::string report_to_json(const QualityReport& q, const std::string& algorithm,
                           std::uint64_t seed, const Graph& g, Space space) {
  std::string out = "{\"algorithm\":" + quote(algorithm);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%" PRIu64, static_cast<std::uint64_t>(seed));
  out += ",\"seed\":";
  out += buf;
  out += ",\"space\":" + quote(space_name(space));
  out += ",\"n\":" + std::to_string(g.n);
  out += ",\"m\":" + std::to_string(g.edges.size());
  if (q.stress_value >= 0.0) out += ",\"stress\":" + json_double(q.stress_value);
  if (q.normalized >= 0.0) out += ",\"normalized_stress\":" + json_double(q.normalized);
  if (q.initial_stress >= 0.0) out += ",\"initial_stress\":" + json_double(q.initial_stress);
  if (q.geodesic >= 0.0) out += ",\"geodesic_stress\":" + json_double(q.geodesic);
  if (q.crossings >= 0) out += ",\"crossings\":" + std::to_string(q.crossings);
  if (!g.edges.empty()) {
    out += ",\"edge_length_mean\":" + json_double(q.edge_mean);
    out += ",\"edge_length_rel_std\":" + json_double(q.edge_rel_std);
  }
  if (q.min_separation >= 0.0)
    out += ",\"min_vertex_separation\":" + json_double(q.min_separation);
  out += ",\"runtime_ms\":" + std::to_string(q.runtime_ms);
  out += "}\n";
  return out;
}

}  // namespace glay
