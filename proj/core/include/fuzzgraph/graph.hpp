#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fuzzgraph/errors.hpp"

namespace fuzzgraph {

using VertexId = std::string;

/// Unordered vertex pair normalized so that first <= second.
std::pair<VertexId, VertexId> edge_key(VertexId u, VertexId v);

struct VertexSpec {
  VertexId id;
  double sigma = 0;
};

struct EdgeSpec {
  VertexId u;
  VertexId v;
  double mu = 0;
};

/// Undirected graph with vertex memberships sigma in (0,1] and edge
/// memberships mu in (0,1], subject to mu(uv) <= min(sigma(u), sigma(v)).
///
/// Instances are validated on construction and immutable afterwards, so a
/// FuzzyGraph in hand always satisfies every invariant and is safe to share
/// across threads. Vertices are identified by case-sensitive opaque strings
/// and stored in sorted order; all derived quantities are therefore
/// independent of the order in which vertices and edges were listed.
class FuzzyGraph {
 public:
  /// Validates and builds a graph. Throws ValidationError on duplicate
  /// vertices or edges, unknown endpoints, self-loops, memberships outside
  /// (0,1], or an edge membership above min(sigma(u), sigma(v)).
  static FuzzyGraph build(const std::vector<VertexSpec>& vertices,
                          const std::vector<EdgeSpec>& edges);

  int order() const { return static_cast<int>(ids_.size()); }
  int size() const { return edge_count_; }

  /// Vertex identifiers in sorted order. Index-based accessors below use
  /// positions in this vector.
  const std::vector<VertexId>& vertex_ids() const { return ids_; }

  bool has_vertex(const VertexId& v) const;
  bool has_edge(const VertexId& u, const VertexId& v) const;

  double sigma(const VertexId& v) const;
  double mu(const VertexId& u, const VertexId& v) const;

  /// All edges with u < v, sorted by key.
  std::vector<EdgeSpec> edges() const;

  std::vector<VertexId> neighbors(const VertexId& v) const;

  int index_of(const VertexId& v) const;
  double sigma_at(int i) const { return sigma_[i]; }

  /// Edge membership by vertex position; 0 when the edge is absent.
  double mu_at(int i, int j) const { return mu_[i * order() + j]; }

  const std::vector<int>& neighbors_at(int i) const { return adj_[i]; }

  /// Structural equality: same vertex set, edge set, and membership values.
  friend bool operator==(const FuzzyGraph& a, const FuzzyGraph& b);

 private:
  FuzzyGraph() = default;

  std::vector<VertexId> ids_;
  std::vector<double> sigma_;
  std::vector<double> mu_;
  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

/// Simple path u_0 ... u_n (n >= 1) with its derived quantities:
/// strength = min edge membership, weight = sum of edge memberships.
struct PathRecord {
  std::vector<VertexId> vertices;
  double strength = 0;
  double weight = 0;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Builds a PathRecord over g, checking that the vertices are pairwise
/// distinct and every consecutive pair is an edge of g.
PathRecord make_path(const FuzzyGraph& g, std::vector<VertexId> vertices);

/// Connectivity of the underlying (crisp) graph.
bool is_connected(const FuzzyGraph& g);

}  // namespace fuzzgraph
