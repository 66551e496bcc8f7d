#include "fuzzgraph/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <fmt/core.h>

namespace fuzzgraph {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

double parse_membership(std::string_view token, int line) {
  double value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line,
                     fmt::format("expected a decimal value, got '{}'", token));
  }
  if (!(value > 0.0) || value > 1.0) {
    throw ParseError(line,
                     fmt::format("membership {} outside (0, 1]", value));
  }
  return value;
}

}  // namespace

FuzzyGraph parse_graph(std::string_view text) {
  struct VertexLine {
    VertexSpec spec;
    int line;
  };
  struct EdgeLine {
    EdgeSpec spec;
    int line;
  };
  std::vector<VertexLine> vertices;
  std::vector<EdgeLine> edges;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos
                                           : eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (tokens[0] == "vertex") {
      if (tokens.size() != 3) {
        throw ParseError(line_no, "expected: vertex <id> <sigma>");
      }
      vertices.push_back(
          {{std::string(tokens[1]), parse_membership(tokens[2], line_no)},
           line_no});
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 4) {
        throw ParseError(line_no, "expected: edge <u> <v> <mu>");
      }
      edges.push_back({{std::string(tokens[1]), std::string(tokens[2]),
                        parse_membership(tokens[3], line_no)},
                       line_no});
    } else {
      throw ParseError(line_no,
                       fmt::format("unknown record '{}'", tokens[0]));
    }
  }

  // Record order is free, so semantic checks run after the whole file is
  // read; each failure still names the line that introduced it.
  std::map<VertexId, double> sigma;
  for (const auto& v : vertices) {
    if (!sigma.emplace(v.spec.id, v.spec.sigma).second) {
      throw ParseError(v.line,
                       fmt::format("duplicate vertex '{}'", v.spec.id));
    }
  }
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : edges) {
    if (e.spec.u == e.spec.v) {
      throw ParseError(e.line,
                       fmt::format("self-loop at vertex '{}'", e.spec.u));
    }
    for (const auto& end : {e.spec.u, e.spec.v}) {
      if (!sigma.count(end)) {
        throw ParseError(
            e.line, fmt::format("edge ({}, {}): unknown endpoint '{}'",
                                e.spec.u, e.spec.v, end));
      }
    }
    const double bound = std::min(sigma.at(e.spec.u), sigma.at(e.spec.v));
    if (e.spec.mu > bound) {
      throw ParseError(
          e.line,
          fmt::format(
              "edge ({}, {}): membership bound violated, mu {} > min(sigma) {}",
              e.spec.u, e.spec.v, e.spec.mu, bound));
    }
    if (!seen.insert(edge_key(e.spec.u, e.spec.v)).second) {
      throw ParseError(e.line, fmt::format("duplicate edge ({}, {})",
                                           e.spec.u, e.spec.v));
    }
  }

  std::vector<VertexSpec> vspecs;
  vspecs.reserve(vertices.size());
  for (const auto& v : vertices) vspecs.push_back(v.spec);
  std::vector<EdgeSpec> especs;
  especs.reserve(edges.size());
  for (const auto& e : edges) especs.push_back(e.spec);
  return FuzzyGraph::build(vspecs, especs);
}

FuzzyGraph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(fmt::format("cannot open '{}'", path));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string serialize_graph(const FuzzyGraph& g) {
  std::string out;
  for (const auto& id : g.vertex_ids()) {
    out += fmt::format("vertex {} {}\n", id, g.sigma(id));
  }
  for (const auto& e : g.edges()) {
    out += fmt::format("edge {} {} {}\n", e.u, e.v, e.mu);
  }
  return out;
}

}  // namespace fuzzgraph
