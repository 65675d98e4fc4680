#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "signed_extremal/signed_graph.hpp"

namespace sx {

// Text graph format:
//   n m
//   u v s      (m lines, 0-indexed vertices, s is +1 or -1)
// Whitespace separated, LF line endings. Trailing blank lines are allowed.
SignedGraph parse_graph(std::string_view text);
SignedGraph read_graph(std::istream& in);
SignedGraph read_graph_file(const std::string& path);

std::string format_graph(const SignedGraph& g);
void write_graph(std::ostream& out, const SignedGraph& g);
void write_graph_file(const std::string& path, const SignedGraph& g);

}  // namespace sx
