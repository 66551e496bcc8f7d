#include "fuzzgraph/connectivity.hpp"

#include <algorithm>

#include <fmt/core.h>

namespace fuzzgraph {

std::string_view to_string(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::Alpha:
      return "alpha";
    case EdgeLabel::Beta:
      return "beta";
    case EdgeLabel::Delta:
      return "delta";
  }
  return "?";
}

StrengthMatrix::StrengthMatrix(std::vector<VertexId> ids,
                               std::vector<double> conn)
    : ids_(std::move(ids)), conn_(std::move(conn)) {}

double StrengthMatrix::at(const VertexId& u, const VertexId& v) const {
  const auto idx = [&](const VertexId& id) {
    const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) {
      throw ValidationError(fmt::format("unknown vertex '{}'", id));
    }
    return static_cast<int>(std::distance(ids_.begin(), it));
  };
  return at(idx(u), idx(v));
}

EdgeClassification::EdgeClassification(
    std::map<std::pair<VertexId, VertexId>, EdgeLabel> labels)
    : labels_(std::move(labels)) {}

EdgeLabel EdgeClassification::at(const VertexId& u, const VertexId& v) const {
  const auto it = labels_.find(edge_key(u, v));
  if (it == labels_.end()) {
    throw ValidationError(fmt::format("unknown edge ({}, {})", u, v));
  }
  return it->second;
}

bool EdgeClassification::is_strong(const VertexId& u,
                                   const VertexId& v) const {
  return at(u, v) != EdgeLabel::Delta;
}

namespace {

// Max-min relaxation iterated to fixpoint. The algebra only compares and
// copies stored memberships, so results are exact.
void close_max_min(std::vector<double>& m, int n) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        const double ik = m[i * n + k];
        if (ik <= 0.0) continue;
        for (int j = 0; j < n; ++j) {
          const double through = std::min(ik, m[k * n + j]);
          if (through > m[i * n + j] && i != j) {
            m[i * n + j] = through;
            changed = true;
          }
        }
      }
    }
  }
}

std::vector<double> adjacency(const FuzzyGraph& g) {
  const int n = g.order();
  std::vector<double> m(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i * n + j] = g.mu_at(i, j);
  }
  return m;
}

double closed_entry_without(const FuzzyGraph& g, int i, int j) {
  auto m = adjacency(g);
  const int n = g.order();
  m[i * n + j] = 0.0;
  m[j * n + i] = 0.0;
  close_max_min(m, n);
  return m[i * n + j];
}

}  // namespace

StrengthMatrix strength_matrix(const FuzzyGraph& g) {
  auto m = adjacency(g);
  close_max_min(m, g.order());
  return StrengthMatrix(g.vertex_ids(), std::move(m));
}

double conn_without_edge(const FuzzyGraph& g, const VertexId& u,
                         const VertexId& v) {
  g.mu(u, v);  // throws when uv is not an edge
  return closed_entry_without(g, g.index_of(u), g.index_of(v));
}

EdgeClassification classify_edges(const FuzzyGraph& g) {
  std::map<std::pair<VertexId, VertexId>, EdgeLabel> labels;
  for (const auto& e : g.edges()) {
    const double residual =
        closed_entry_without(g, g.index_of(e.u), g.index_of(e.v));
    EdgeLabel label = EdgeLabel::Beta;
    if (e.mu > residual) {
      label = EdgeLabel::Alpha;
    } else if (e.mu < residual) {
      label = EdgeLabel::Delta;
    }
    labels.emplace(edge_key(e.u, e.v), label);
  }
  return EdgeClassification(std::move(labels));
}

bool is_strong_path(const FuzzyGraph& g, const PathRecord& p) {
  return is_strong_path(g, classify_edges(g), p);
}

bool is_strong_path(const FuzzyGraph& g, const EdgeClassification& labels,
                    const PathRecord& p) {
  make_path(g, p.vertices);  // throws when p is not a path of g
  for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    if (!labels.is_strong(p.vertices[i], p.vertices[i + 1])) return false;
  }
  return true;
}

}  // namespace fuzzgraph
