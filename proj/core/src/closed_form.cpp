#include "fuzzgraph/closed_form.hpp"

#include <fmt/core.h>

#include "fuzzgraph/indices.hpp"

namespace fuzzgraph {

CycleSpec::CycleSpec(int length_, double kappa_, double eta_)
    : length(length_), kappa(kappa_), eta(eta_) {
  if (length < 4) {
    throw ValidationError(
        fmt::format("cycle length must be at least 4, got {}", length));
  }
  if (length % 2 != 0) {
    throw ValidationError(
        fmt::format("cycle length must be even, got {}", length));
  }
  if (!(eta > 0.0) || kappa > 1.0 || !(kappa > eta)) {
    throw ValidationError(fmt::format(
        "need 0 < eta < kappa <= 1, got kappa {} and eta {}", kappa, eta));
  }
}

FuzzyGraph generate_saturated_cycle(const CycleSpec& spec) {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  vertices.reserve(spec.length);
  edges.reserve(spec.length);
  for (int i = 0; i < spec.length; ++i) {
    vertices.push_back({fmt::format("v{}", i), 1.0});
  }
  for (int i = 0; i < spec.length; ++i) {
    edges.push_back({vertices[i].id, vertices[(i + 1) % spec.length].id,
                     i % 2 == 0 ? spec.kappa : spec.eta});
  }
  return FuzzyGraph::build(vertices, edges);
}

double corrected_wiener(const CycleSpec& spec) {
  const double n = spec.length;
  if (spec.length % 4 == 0) {
    return n * n * n / 16.0 * (spec.kappa + spec.eta);
  }
  return n * (n * n - 4.0) / 16.0 * spec.kappa +
         n * (n * n + 4.0) / 16.0 * spec.eta;
}

double star_wiener(const CycleSpec& spec) {
  const double n = spec.length;
  return n * ((n + 3.0) * (n + 3.0) - 6.0) / 16.0 * (spec.kappa + spec.eta);
}

double antipodal_ds(const CycleSpec& spec) {
  const double n = spec.length;
  if (spec.length % 4 == 0) {
    return n / 4.0 * (spec.kappa + spec.eta);
  }
  return (n - 2.0) / 4.0 * spec.kappa + (n + 2.0) / 4.0 * spec.eta;
}

std::map<int, std::vector<std::pair<VertexId, VertexId>>>
pairs_by_geodesic_length(const FuzzyGraph& g) {
  const auto report = index_report(g);
  std::map<int, std::vector<std::pair<VertexId, VertexId>>> partition;
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      partition[report.length_at(i, j)].push_back(
          edge_key(report.ids[i], report.ids[j]));
    }
  }
  return partition;
}

}  // namespace fuzzgraph
