#pragma once

#include <string>
#include <string_view>

#include "glay/graph.hpp"
#include "glay/layout.hpp"
#include "glay/metrics.hpp"

namespace glay {

// JSON graph document: {"n": int, "edges": [[u,v],...], "labels": [...]}.
// Emission is canonical (keys in that order, compact, LF-terminated) so
// equal graphs serialize to identical bytes; labels are included only when
// the graph carries them.  parse accepts the same shape, labels optional.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);  // throws parse_error

// Layout document: {"space": str, "positions": [[x,y],...]}.  Spherical
// layouts carry [x,y,z] triples.  Floats use 17 significant digits, enough
// to round-trip IEEE doubles exactly.
std::string layout_to_json(const Layout& l);
Layout layout_from_json(std::string_view text);  // throws parse_error

// Quality-report document with a fixed key order; fields the run did not
// compute (negative sentinels in QualityReport) are omitted.
std::string report_to_json(const QualityReport& q, const std::string& algorithm,
                           std::uint64_t seed, const Graph& g, Space space);

// Formats one double the way every JSON emitter here does (%.17g).
std::string json_double(double v);

}  // namespace glay
