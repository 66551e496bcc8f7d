#include "fuzzgraph/oracle.hpp"

#include <algorithm>
#include <limits>

#include <fmt/core.h>

namespace fuzzgraph {
namespace oracle {

namespace {

void check_bound(const FuzzyGraph& g, int max_vertices) {
  if (g.order() > max_vertices) {
    throw ValidationError(
        fmt::format("oracle refuses graph of order {} (bound {})", g.order(),
                    max_vertices));
  }
}

struct SkipEdge {
  int a = -1;
  int b = -1;

  bool matches(int i, int j) const {
    return (i == a && j == b) || (i == b && j == a);
  }
};

void extend_paths(const FuzzyGraph& g, int target, SkipEdge skip,
                  std::vector<int>& current, std::vector<char>& on_path,
                  std::vector<PathRecord>& out) {
  const int here = current.back();
  if (here == target) {
    PathRecord p;
    p.strength = 1.0;
    for (size_t i = 0; i < current.size(); ++i) {
      p.vertices.push_back(g.vertex_ids()[current[i]]);
      if (i > 0) {
        const double m = g.mu_at(current[i - 1], current[i]);
        p.strength = std::min(p.strength, m);
        p.weight += m;
      }
    }
    out.push_back(std::move(p));
    return;
  }
  for (const int next : g.neighbors_at(here)) {
    if (on_path[next] || skip.matches(here, next)) continue;
    current.push_back(next);
    on_path[next] = 1;
    extend_paths(g, target, skip, current, on_path, out);
    on_path[next] = 0;
    current.pop_back();
  }
}

std::vector<PathRecord> all_paths(const FuzzyGraph& g, int u, int v,
                                  SkipEdge skip = {}) {
  std::vector<int> current{u};
  std::vector<char> on_path(g.order(), 0);
  on_path[u] = 1;
  std::vector<PathRecord> out;
  extend_paths(g, v, skip, current, on_path, out);
  return out;
}

double max_strength(const std::vector<PathRecord>& paths) {
  double best = 0;
  for (const auto& p : paths) best = std::max(best, p.strength);
  return best;
}

}  // namespace

const PairReport& OracleReport::pair(const VertexId& u,
                                     const VertexId& v) const {
  const auto it = pairs.find(edge_key(u, v));
  if (it == pairs.end()) {
    throw ValidationError(fmt::format("unknown pair ({}, {})", u, v));
  }
  return it->second;
}

std::vector<PathRecord> enumerate_simple_paths(const FuzzyGraph& g,
                                               const VertexId& u,
                                               const VertexId& v,
                                               int max_vertices) {
  check_bound(g, max_vertices);
  const int iu = g.index_of(u);
  const int iv = g.index_of(v);
  if (iu == iv) {
    throw ValidationError("path enumeration needs two distinct vertices");
  }
  return all_paths(g, iu, iv);
}

OracleReport oracle_report(const FuzzyGraph& g, int max_vertices) {
  check_bound(g, max_vertices);
  OracleReport report;
  report.ids = g.vertex_ids();
  const int n = g.order();

  // Labels first: a path is strong iff all of its edges survive the
  // per-edge trichotomy, and the trichotomy itself only needs path
  // enumeration with the candidate edge skipped.
  for (const auto& e : g.edges()) {
    const int i = g.index_of(e.u);
    const int j = g.index_of(e.v);
    const double residual = max_strength(all_paths(g, i, j, {i, j}));
    EdgeLabel label = EdgeLabel::Beta;
    if (e.mu > residual) label = EdgeLabel::Alpha;
    if (e.mu < residual) label = EdgeLabel::Delta;
    report.labels.emplace(edge_key(e.u, e.v), label);
  }

  const auto strong = [&](const PathRecord& p) {
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      const auto it =
          report.labels.find(edge_key(p.vertices[i], p.vertices[i + 1]));
      if (it->second == EdgeLabel::Delta) return false;
    }
    return true;
  };

  bool wiener_defined = true;
  std::pair<VertexId, VertexId> undefined_pair;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      PairReport entry;
      entry.paths = all_paths(g, i, j);
      entry.conn = max_strength(entry.paths);

      int shortest = std::numeric_limits<int>::max();
      for (const auto& p : entry.paths) {
        if (strong(p)) shortest = std::min(shortest, p.length());
      }
      if (shortest != std::numeric_limits<int>::max()) {
        entry.geodesic_length = shortest;
        entry.ds = std::numeric_limits<double>::infinity();
        for (const auto& p : entry.paths) {
          if (p.length() == shortest && strong(p)) {
            entry.ds = std::min(entry.ds, p.weight);
            entry.geodesics.push_back(p);
          }
        }
        report.wiener += g.sigma_at(i) * g.sigma_at(j) * entry.ds;
      } else if (wiener_defined) {
        wiener_defined = false;
        undefined_pair = {report.ids[i], report.ids[j]};
      }
      report.connectivity += g.sigma_at(i) * g.sigma_at(j) * entry.conn;
      report.pairs.emplace(edge_key(report.ids[i], report.ids[j]),
                           std::move(entry));
    }
  }
  if (!wiener_defined) {
    throw NoStrongPathError(
        fmt::format("no strong path between '{}' and '{}'",
                    undefined_pair.first, undefined_pair.second));
  }
  return report;
}

}  // namespace oracle
}  // namespace fuzzgraph
