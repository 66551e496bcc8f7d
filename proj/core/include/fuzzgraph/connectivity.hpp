#pragma once

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzgraph/graph.hpp"

namespace fuzzgraph {

enum class EdgeLabel { Alpha, Beta, Delta };

std::string_view to_string(EdgeLabel label);

/// Pairwise strength of connectedness: CONN(u,v) is the maximum over all
/// u-v paths of the minimum edge membership along the path, 0 when u and v
/// lie in different components. Every entry is one of the graph's edge
/// memberships or 0; the matrix is symmetric.
class StrengthMatrix {
 public:
  StrengthMatrix(std::vector<VertexId> ids, std::vector<double> conn);

  int order() const { return static_cast<int>(ids_.size()); }
  const std::vector<VertexId>& vertex_ids() const { return ids_; }

  double at(int i, int j) const { return conn_[i * order() + j]; }
  double at(const VertexId& u, const VertexId& v) const;

  friend bool operator==(const StrengthMatrix&, const StrengthMatrix&) =
      default;

 private:
  std::vector<VertexId> ids_;
  std::vector<double> conn_;
};

/// Per-edge trichotomy against the edge-deleted connectedness
/// CONN_{G-uv}(u,v): Alpha when mu(uv) exceeds it, Beta when equal, Delta
/// when below. Alpha and Beta edges are the strong edges.
class EdgeClassification {
 public:
  explicit EdgeClassification(
      std::map<std::pair<VertexId, VertexId>, EdgeLabel> labels);

  EdgeLabel at(const VertexId& u, const VertexId& v) const;
  bool is_strong(const VertexId& u, const VertexId& v) const;

  const std::map<std::pair<VertexId, VertexId>, EdgeLabel>& labels() const {
    return labels_;
  }

 private:
  std::map<std::pair<VertexId, VertexId>, EdgeLabel> labels_;
};

/// Max-min closure over all vertex pairs. Works on disconnected graphs;
/// unreachable pairs get 0.
StrengthMatrix strength_matrix(const FuzzyGraph& g);

/// CONN between the endpoints of edge uv in the graph with uv removed
/// (vertices retained). Throws ValidationError when uv is not an edge.
double conn_without_edge(const FuzzyGraph& g, const VertexId& u,
                         const VertexId& v);

EdgeClassification classify_edges(const FuzzyGraph& g);

/// True iff every edge of p is strong (Alpha or Beta). p must be a valid
/// path of g. The first overload classifies internally; pass precomputed
/// labels when calling repeatedly on one graph.
bool is_strong_path(const FuzzyGraph& g, const PathRecord& p);
bool is_strong_path(const FuzzyGraph& g, const EdgeClassification& labels,
                    const PathRecord& p);

}  // namespace fuzzgraph
