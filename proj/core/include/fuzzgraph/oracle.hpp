#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fuzzgraph/connectivity.hpp"
#include "fuzzgraph/graph.hpp"

namespace fuzzgraph {
namespace oracle {

/// Everything the exhaustive reference derives for one unordered pair.
struct PairReport {
  std::vector<PathRecord> paths;      // every simple path between the pair
  double conn = 0;                    // max strength over paths, 0 when none
  int geodesic_length = -1;           // -1 when no strong path exists
  std::vector<PathRecord> geodesics;  // min-length all-strong paths
  double ds = 0;                      // min geodesic weight
};

/// Exhaustive per-pair evidence for a whole graph. Built purely from simple
/// path enumeration; shares no algorithm with the fast-path modules.
struct OracleReport {
  std::vector<VertexId> ids;
  std::map<std::pair<VertexId, VertexId>, PairReport> pairs;
  std::map<std::pair<VertexId, VertexId>, EdgeLabel> labels;
  double wiener = 0;
  double connectivity = 0;

  const PairReport& pair(const VertexId& u, const VertexId& v) const;
};

/// All simple u-v paths by exhaustive search. Refuses graphs larger than
/// max_vertices rather than silently truncating; enumeration is exponential
/// by design and meant for small verification graphs only.
std::vector<PathRecord> enumerate_simple_paths(const FuzzyGraph& g,
                                               const VertexId& u,
                                               const VertexId& v,
                                               int max_vertices = 12);

/// Full reference report: CONN as the max strength over enumerated paths,
/// edge labels via re-enumeration with the edge skipped, geodesics and d_s
/// read straight off the enumerated strong paths, and the two indices
/// summed from those. Throws NoStrongPathError when some pair has no strong
/// path (the Wiener index is undefined there).
OracleReport oracle_report(const FuzzyGraph& g, int max_vertices = 12);

}  // namespace oracle
}  // namespace fuzzgraph
