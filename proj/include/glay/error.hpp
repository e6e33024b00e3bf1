#pragma once

#include <stdexcept>
#include <string>

namespace glay {

// Malformed input: bad edge-list text, bad JSON, bad CLI values.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that an algorithm cannot accept
// (disconnected graph for a distance method, non-convex fixed face, ...).
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace glay
