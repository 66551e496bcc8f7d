#pragma once

#include <string>
#include <string_view>

#include "fuzzgraph/graph.hpp"

namespace fuzzgraph {

/// Parses the line-oriented graph format:
///
///   # comment
///   vertex <id> <sigma>
///   edge <u> <v> <mu>
///
/// Blank lines and comment lines are ignored; records may appear in any
/// order. Duplicate vertex or edge lines are errors. Throws ParseError with
/// the offending 1-based line number, both for malformed lines and for
/// semantic violations (unknown endpoint, membership bound, ...).
FuzzyGraph parse_graph(std::string_view text);

/// Reads and parses a graph file. Throws Error when the file is unreadable.
FuzzyGraph load_graph_file(const std::string& path);

/// Renders a graph in the same line format, vertices then edges, both in
/// sorted order. Values use the shortest representation that parses back to
/// the identical double, so parse(serialize(g)) == g.
std::string serialize_graph(const FuzzyGraph& g);

}  // namespace fuzzgraph
