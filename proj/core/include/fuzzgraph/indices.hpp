#pragma once

#include <vector>

#include "fuzzgraph/connectivity.hpp"
#include "fuzzgraph/graph.hpp"

namespace fuzzgraph {

/// All minimum-length strong paths between one vertex pair. Length is
/// primary: a longer strong path is never a geodesic even when it weighs
/// less than every shortest one.
struct GeodesicSet {
  VertexId source;
  VertexId target;
  int length = 0;
  std::vector<PathRecord> paths;

  /// The geodesic weight distance d_s: minimum weight over the set.
  double min_weight() const;
};

/// Wiener and Connectivity indices plus the per-pair table backing them.
/// Tables are dense, symmetric, and indexed by position in ids.
struct IndexReport {
  std::vector<VertexId> ids;
  double wiener = 0;
  double connectivity = 0;
  std::vector<double> conn;
  std::vector<double> ds;
  std::vector<int> geodesic_length;

  double conn_at(int i, int j) const { return conn[i * ids.size() + j]; }
  double ds_at(int i, int j) const { return ds[i * ids.size() + j]; }
  int length_at(int i, int j) const {
    return geodesic_length[i * ids.size() + j];
  }
};

/// All shortest strong u-v paths. The search runs over the subgraph of
/// strong (Alpha or Beta) edges only. Throws NoStrongPathError when no
/// strong path joins u and v. The overload taking labels skips the internal
/// classification pass.
GeodesicSet geodesics(const FuzzyGraph& g, const VertexId& u,
                      const VertexId& v);
GeodesicSet geodesics(const FuzzyGraph& g, const EdgeClassification& labels,
                      const VertexId& u, const VertexId& v);

/// Geodesic weight distance: minimum weight among u-v geodesics.
double ds(const FuzzyGraph& g, const VertexId& u, const VertexId& v);

/// Sum of sigma(u) * sigma(v) * d_s(u,v) over unordered distinct pairs.
/// Throws NoStrongPathError if any pair has no strong path; the index is
/// undefined for such graphs.
double wiener_index(const FuzzyGraph& g);

/// Sum of sigma(u) * sigma(v) * CONN(u,v) over unordered distinct pairs;
/// disconnected pairs contribute 0.
double connectivity_index(const FuzzyGraph& g);

/// One-pass aggregation of CONN, d_s, and geodesic lengths for every pair.
/// Throws exactly when wiener_index does.
IndexReport index_report(const FuzzyGraph& g);

}  // namespace fuzzgraph
