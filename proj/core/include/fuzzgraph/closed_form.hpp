#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fuzzgraph/graph.hpp"

namespace fuzzgraph {

/// Parameters of an alternating cycle: even length n >= 4 and the two
/// memberships 0 < eta < kappa <= 1 carried by alternate edges. All vertex
/// memberships of a generated cycle are 1, which is the only setting the
/// closed forms below are stated for.
struct CycleSpec {
  CycleSpec(int length, double kappa, double eta);

  int length;
  double kappa;
  double eta;
};

/// Cycle v0 ... v{n-1} with sigma = 1 everywhere and edge memberships
/// alternating kappa, eta, kappa, ... The result is a saturated cycle.
FuzzyGraph generate_saturated_cycle(const CycleSpec& spec);

/// Closed form for the Wiener index of the generated cycle:
///   n^3/16 * (kappa + eta)                          when 4 divides n,
///   n(n^2-4)/16 * kappa + n(n^2+4)/16 * eta         otherwise.
double corrected_wiener(const CycleSpec& spec);

/// Superseded closed form n[(n+3)^2 - 6]/16 * (kappa + eta), kept only for
/// comparison; it overestimates the Wiener index for every spec.
double star_wiener(const CycleSpec& spec);

/// Common geodesic weight distance of antipodal pairs (geodesic length
/// n/2): n/4 * (kappa + eta) when 4 divides n, else
/// (n-2)/4 * kappa + (n+2)/4 * eta.
double antipodal_ds(const CycleSpec& spec);

/// Partition of the unordered distinct vertex pairs of g by geodesic
/// length. Throws NoStrongPathError when some pair has no strong path.
std::map<int, std::vector<std::pair<VertexId, VertexId>>>
pairs_by_geodesic_length(const FuzzyGraph& g);

}  // namespace fuzzgraph
