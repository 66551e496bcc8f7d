#include "fuzzgraph/structures.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <fmt/core.h>

namespace fuzzgraph {

namespace {

// Vertex indices in cycle order starting at 0, or empty when the underlying
// graph is not a single cycle.
std::vector<int> cycle_order(const FuzzyGraph& g) {
  const int n = g.order();
  if (n < 3) return {};
  for (int i = 0; i < n; ++i) {
    if (g.neighbors_at(i).size() != 2) return {};
  }
  std::vector<int> order{0, g.neighbors_at(0).front()};
  while (true) {
    const int here = order.back();
    const int prev = order[order.size() - 2];
    const auto& nbrs = g.neighbors_at(here);
    const int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    if (next == 0) break;
    order.push_back(next);
  }
  // Degree 2 everywhere plus one closed walk through all vertices.
  if (static_cast<int>(order.size()) != n) return {};
  return order;
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Minimum edge membership on the unique u-v path of a tree given as an
// adjacency structure with memberships.
double tree_path_strength(const std::vector<std::vector<std::pair<int, double>>>& tree,
                          int u, int v) {
  std::vector<std::pair<int, double>> stack{{u, std::numeric_limits<double>::infinity()}};
  std::vector<char> seen(tree.size(), 0);
  seen[u] = 1;
  while (!stack.empty()) {
    const auto [x, strength] = stack.back();
    stack.pop_back();
    if (x == v) return strength;
    for (const auto& [y, m] : tree[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back({y, std::min(strength, m)});
      }
    }
  }
  throw ValidationError("vertices lie in different tree components");
}

struct MstResult {
  SpanningTree tree;
  std::vector<std::vector<std::pair<int, double>>> adjacency;
  std::vector<EdgeSpec> non_tree_edges;
};

MstResult maximum_spanning_tree_impl(const FuzzyGraph& g) {
  if (!is_connected(g)) {
    throw ValidationError("graph is disconnected; no spanning tree exists");
  }
  auto edges = g.edges();
  std::stable_sort(edges.begin(), edges.end(),
                   [](const EdgeSpec& a, const EdgeSpec& b) {
                     if (a.mu != b.mu) return a.mu > b.mu;
                     return std::tie(a.u, a.v) < std::tie(b.u, b.v);
                   });

  MstResult result;
  result.adjacency.assign(g.order(), {});
  UnionFind components(g.order());
  for (const auto& e : edges) {
    const int i = g.index_of(e.u);
    const int j = g.index_of(e.v);
    if (components.unite(i, j)) {
      result.tree.edges.push_back(edge_key(e.u, e.v));
      result.tree.weight += e.mu;
      result.adjacency[i].push_back({j, e.mu});
      result.adjacency[j].push_back({i, e.mu});
    } else {
      result.non_tree_edges.push_back(e);
    }
  }
  std::sort(result.tree.edges.begin(), result.tree.edges.end());

  // The maximizer is unique iff every excluded edge is strictly below the
  // weakest edge on its endpoints' tree path; equality admits a swap that
  // preserves total weight.
  result.tree.unique = true;
  for (const auto& e : result.non_tree_edges) {
    const double strength = tree_path_strength(
        result.adjacency, g.index_of(e.u), g.index_of(e.v));
    if (e.mu == strength) {
      result.tree.unique = false;
      break;
    }
  }
  return result;
}

}  // namespace

bool is_fuzzy_cycle(const FuzzyGraph& g) {
  if (cycle_order(g).empty()) return false;
  double min_mu = std::numeric_limits<double>::infinity();
  for (const auto& e : g.edges()) min_mu = std::min(min_mu, e.mu);
  int hits = 0;
  for (const auto& e : g.edges()) {
    if (e.mu == min_mu) ++hits;
  }
  return hits >= 2;
}

bool is_saturated_cycle(const FuzzyGraph& g) {
  if (!is_fuzzy_cycle(g)) return false;
  const auto order = cycle_order(g);
  const int n = static_cast<int>(order.size());
  if (n % 2 != 0) return false;

  const auto labels = classify_edges(g);
  const auto& ids = g.vertex_ids();
  std::vector<EdgeLabel> around;
  around.reserve(n);
  for (int i = 0; i < n; ++i) {
    around.push_back(labels.at(ids[order[i]], ids[order[(i + 1) % n]]));
  }
  for (int i = 0; i < n; ++i) {
    const EdgeLabel a = around[i];
    const EdgeLabel b = around[(i + 1) % n];
    if (a == EdgeLabel::Delta || b == EdgeLabel::Delta) return false;
    if (a == b) return false;
  }
  return true;
}

bool is_saturated_cycle_by_incidence(const FuzzyGraph& g) {
  if (!is_fuzzy_cycle(g)) return false;
  const auto labels = classify_edges(g);
  for (const auto& v : g.vertex_ids()) {
    int alpha = 0;
    int beta = 0;
    for (const auto& w : g.neighbors(v)) {
      switch (labels.at(v, w)) {
        case EdgeLabel::Alpha:
          ++alpha;
          break;
        case EdgeLabel::Beta:
          ++beta;
          break;
        case EdgeLabel::Delta:
          break;
      }
    }
    if (alpha != 1 || beta != 1) return false;
  }
  return true;
}

SaturatedParameters saturated_parameters(const FuzzyGraph& g) {
  if (!is_saturated_cycle(g)) {
    throw ValidationError("graph is not a saturated cycle");
  }
  const auto labels = classify_edges(g);
  double kappa = -1;
  double eta = -1;
  for (const auto& e : g.edges()) {
    const EdgeLabel label = labels.at(e.u, e.v);
    double& common = label == EdgeLabel::Alpha ? kappa : eta;
    if (common < 0) {
      common = e.mu;
    } else if (common != e.mu) {
      throw ValidationError(fmt::format(
          "unequal {} strengths: {} and {}",
          label == EdgeLabel::Alpha ? "alpha" : "beta", common, e.mu));
    }
  }
  return {g.order(), kappa, eta};
}

SpanningTree maximum_spanning_tree(const FuzzyGraph& g) {
  return maximum_spanning_tree_impl(g).tree;
}

bool is_fuzzy_tree(const FuzzyGraph& g) {
  if (!is_connected(g)) return false;
  const auto mst = maximum_spanning_tree_impl(g);
  for (const auto& e : mst.non_tree_edges) {
    const double strength = tree_path_strength(
        mst.adjacency, g.index_of(e.u), g.index_of(e.v));
    if (!(strength > e.mu)) return false;
  }
  return true;
}

FuzzyGraph spanning_subgraph(const FuzzyGraph& g, const SpanningTree& tree) {
  std::vector<VertexSpec> vertices;
  for (const auto& id : g.vertex_ids()) vertices.push_back({id, g.sigma(id)});
  std::vector<EdgeSpec> edges;
  for (const auto& [u, v] : tree.edges) edges.push_back({u, v, g.mu(u, v)});
  return FuzzyGraph::build(vertices, edges);
}

}  // namespace fuzzgraph
