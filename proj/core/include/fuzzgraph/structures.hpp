#pragma once

#include <utility>
#include <vector>

#include "fuzzgraph/connectivity.hpp"
#include "fuzzgraph/graph.hpp"

namespace fuzzgraph {

/// Spanning tree of maximum total edge membership. `unique` records whether
/// any other spanning tree attains the same weight.
struct SpanningTree {
  std::vector<std::pair<VertexId, VertexId>> edges;  // normalized, sorted
  double weight = 0;
  bool unique = false;
};

/// Cycle length and the two alternating strengths of a saturated cycle
/// whose Alpha edges share one membership and Beta edges another.
struct SaturatedParameters {
  int length = 0;
  double kappa = 0;  // common Alpha strength
  double eta = 0;    // common Beta strength, eta < kappa
};

/// True iff the underlying graph is a single cycle C_n (n >= 3) and the
/// minimum edge membership is attained by at least two edges.
bool is_fuzzy_cycle(const FuzzyGraph& g);

/// True iff g is a fuzzy cycle of even length whose edge labels strictly
/// alternate Alpha, Beta, Alpha, ... around the cycle.
bool is_saturated_cycle(const FuzzyGraph& g);

/// Equivalent characterization used as a cross-check: a fuzzy cycle in
/// which every vertex lies on exactly one Alpha and one Beta edge.
bool is_saturated_cycle_by_incidence(const FuzzyGraph& g);

/// Extracts (n, kappa, eta) from a saturated cycle. Throws ValidationError
/// when g is not saturated or when its Alpha (or Beta) edges carry unequal
/// memberships.
SaturatedParameters saturated_parameters(const FuzzyGraph& g);

/// Maximum spanning tree via greedy insertion in descending membership
/// order, ties broken by edge name, so the result is deterministic. Throws
/// ValidationError on disconnected graphs.
SpanningTree maximum_spanning_tree(const FuzzyGraph& g);

/// True iff g is connected and every edge outside the maximum spanning
/// tree F is strictly weaker than the strength of its endpoints' path in F.
/// That strict dominance also makes F the unique maximum spanning tree.
bool is_fuzzy_tree(const FuzzyGraph& g);

/// The subgraph of g induced by a spanning tree: same vertices and sigma,
/// tree edges only.
FuzzyGraph spanning_subgraph(const FuzzyGraph& g, const SpanningTree& tree);

}  // namespace fuzzgraph
