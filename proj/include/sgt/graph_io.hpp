#pragma once

#include <iosfwd>
#include <string>

#include "sgt/signed_graph.hpp"

namespace sgt {

// Raised on malformed input, with a line number where possible.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical text format:
//   line 1:       n m
//   next m lines: u v s      (0 <= u < v < n, s in {+,-})
// sorted lexicographically by (u, v); '#' starts a comment line; LF endings.
std::string to_text(const SignedGraph& g);
SignedGraph from_text(const std::string& text);
SignedGraph from_text_stream(std::istream& in);

// JSON mirror: {"n": int, "edges": [[u, v, s], ...]} with s in {1, -1}.
std::string to_json_text(const SignedGraph& g);
SignedGraph from_json_text(const std::string& text);

// File helpers; a ".json" suffix selects the JSON mirror, anything else the
// text format.
SignedGraph read_graph_file(const std::string& path);
void write_graph_file(const SignedGraph& g, const std::string& path);

}  // namespace sgt
