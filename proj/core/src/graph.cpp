#include "fuzzgraph/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <fmt/core.h>

namespace fuzzgraph {

std::pair<VertexId, VertexId> edge_key(VertexId u, VertexId v) {
  if (v < u) std::swap(u, v);
  return {std::move(u), std::move(v)};
}

namespace {

void check_membership(double value, const std::string& what) {
  if (!(value > 0.0) || value > 1.0) {
    throw ValidationError(
        fmt::format("{}: membership {} outside (0, 1]", what, value));
  }
}

}  // namespace

FuzzyGraph FuzzyGraph::build(const std::vector<VertexSpec>& vertices,
                             const std::vector<EdgeSpec>& edges) {
  std::map<VertexId, double> sigma;
  for (const auto& v : vertices) {
    check_membership(v.sigma, fmt::format("vertex '{}'", v.id));
    if (!sigma.emplace(v.id, v.sigma).second) {
      throw ValidationError(fmt::format("duplicate vertex '{}'", v.id));
    }
  }

  FuzzyGraph g;
  g.ids_.reserve(sigma.size());
  g.sigma_.reserve(sigma.size());
  for (const auto& [id, s] : sigma) {
    g.ids_.push_back(id);
    g.sigma_.push_back(s);
  }

  const int n = g.order();
  g.mu_.assign(static_cast<size_t>(n) * n, 0.0);
  g.adj_.assign(n, {});

  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : edges) {
    if (e.u == e.v) {
      throw ValidationError(fmt::format("self-loop at vertex '{}'", e.u));
    }
    const auto iu = sigma.find(e.u);
    const auto iv = sigma.find(e.v);
    if (iu == sigma.end() || iv == sigma.end()) {
      throw ValidationError(fmt::format(
          "edge ({}, {}): unknown endpoint '{}'", e.u, e.v,
          iu == sigma.end() ? e.u : e.v));
    }
    check_membership(e.mu, fmt::format("edge ({}, {})", e.u, e.v));
    const double bound = std::min(iu->second, iv->second);
    if (e.mu > bound) {
      throw ValidationError(fmt::format(
          "edge ({}, {}): membership bound violated, mu {} > min(sigma) {}",
          e.u, e.v, e.mu, bound));
    }
    if (!seen.insert(edge_key(e.u, e.v)).second) {
      throw ValidationError(fmt::format("duplicate edge ({}, {})", e.u, e.v));
    }
    const int i = static_cast<int>(std::distance(sigma.begin(), iu));
    const int j = static_cast<int>(std::distance(sigma.begin(), iv));
    g.mu_[static_cast<size_t>(i) * n + j] = e.mu;
    g.mu_[static_cast<size_t>(j) * n + i] = e.mu;
    g.adj_[i].push_back(j);
    g.adj_[j].push_back(i);
    ++g.edge_count_;
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

bool FuzzyGraph::has_vertex(const VertexId& v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

int FuzzyGraph::index_of(const VertexId& v) const {
  const auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) {
    throw ValidationError(fmt::format("unknown vertex '{}'", v));
  }
  return static_cast<int>(std::distance(ids_.begin(), it));
}

bool FuzzyGraph::has_edge(const VertexId& u, const VertexId& v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  return mu_at(index_of(u), index_of(v)) > 0.0;
}

double FuzzyGraph::sigma(const VertexId& v) const {
  return sigma_[index_of(v)];
}

double FuzzyGraph::mu(const VertexId& u, const VertexId& v) const {
  const double value = mu_at(index_of(u), index_of(v));
  if (value <= 0.0) {
    throw ValidationError(fmt::format("unknown edge ({}, {})", u, v));
  }
  return value;
}

std::vector<EdgeSpec> FuzzyGraph::edges() const {
  std::vector<EdgeSpec> out;
  out.reserve(edge_count_);
  const int n = order();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (const double m = mu_at(i, j); m > 0.0) {
        out.push_back({ids_[i], ids_[j], m});
      }
    }
  }
  return out;
}

std::vector<VertexId> FuzzyGraph::neighbors(const VertexId& v) const {
  std::vector<VertexId> out;
  for (const int j : adj_[index_of(v)]) out.push_back(ids_[j]);
  return out;
}

bool operator==(const FuzzyGraph& a, const FuzzyGraph& b) {
  return a.ids_ == b.ids_ && a.sigma_ == b.sigma_ && a.mu_ == b.mu_;
}

PathRecord make_path(const FuzzyGraph& g, std::vector<VertexId> vertices) {
  if (vertices.size() < 2) {
    throw ValidationError("path needs at least two vertices");
  }
  std::set<VertexId> distinct(vertices.begin(), vertices.end());
  if (distinct.size() != vertices.size()) {
    throw ValidationError("path vertices must be pairwise distinct");
  }
  PathRecord p;
  p.strength = 1.0;
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    const double m = g.mu(vertices[i], vertices[i + 1]);  // throws if absent
    p.strength = std::min(p.strength, m);
    p.weight += m;
  }
  p.vertices = std::move(vertices);
  return p;
}

bool is_connected(const FuzzyGraph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const int w : g.neighbors_at(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

}  // namespace fuzzgraph
