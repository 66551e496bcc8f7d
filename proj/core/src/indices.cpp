#include "fuzzgraph/indices.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include <fmt/core.h>

namespace fuzzgraph {

double GeodesicSet::min_weight() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : paths) best = std::min(best, p.weight);
  return best;
}

namespace {

// Strong-edge subgraph with all-pairs BFS hop distances (-1 = unreachable).
struct StrongView {
  std::vector<std::vector<int>> adj;
  std::vector<int> dist;
  int n = 0;

  int dist_at(int i, int j) const { return dist[i * n + j]; }
};

StrongView make_strong_view(const FuzzyGraph& g,
                            const EdgeClassification& labels) {
  StrongView view;
  view.n = g.order();
  view.adj.assign(view.n, {});
  for (const auto& [key, label] : labels.labels()) {
    if (label == EdgeLabel::Delta) continue;
    const int i = g.index_of(key.first);
    const int j = g.index_of(key.second);
    view.adj[i].push_back(j);
    view.adj[j].push_back(i);
  }
  for (auto& nbrs : view.adj) std::sort(nbrs.begin(), nbrs.end());

  view.dist.assign(static_cast<size_t>(view.n) * view.n, -1);
  for (int s = 0; s < view.n; ++s) {
    auto* row = view.dist.data() + static_cast<size_t>(s) * view.n;
    row[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (const int w : view.adj[v]) {
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return view;
}

PathRecord record_from_indices(const FuzzyGraph& g,
                               const std::vector<int>& vertices) {
  PathRecord p;
  p.strength = 1.0;
  p.vertices.reserve(vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i) {
    p.vertices.push_back(g.vertex_ids()[vertices[i]]);
    if (i > 0) {
      const double m = g.mu_at(vertices[i - 1], vertices[i]);
      p.strength = std::min(p.strength, m);
      p.weight += m;
    }
  }
  return p;
}

// Extends the partial path towards v. Every step must decrease the BFS
// distance to v by exactly one, which enumerates the shortest strong paths
// and nothing else; the strictly decreasing distance also keeps them simple.
void enumerate_geodesics(const FuzzyGraph& g, const StrongView& view, int v,
                         std::vector<int>& current,
                         std::vector<PathRecord>& out) {
  const int x = current.back();
  if (x == v) {
    out.push_back(record_from_indices(g, current));
    return;
  }
  const int remaining = view.dist_at(x, v);
  for (const int y : view.adj[x]) {
    if (view.dist_at(y, v) == remaining - 1) {
      current.push_back(y);
      enumerate_geodesics(g, view, v, current, out);
      current.pop_back();
    }
  }
}

GeodesicSet geodesics_at(const FuzzyGraph& g, const StrongView& view, int iu,
                         int iv) {
  const int k = view.dist_at(iu, iv);
  if (k < 0) {
    throw NoStrongPathError(
        fmt::format("no strong path between '{}' and '{}'",
                    g.vertex_ids()[iu], g.vertex_ids()[iv]));
  }
  GeodesicSet set;
  set.source = g.vertex_ids()[iu];
  set.target = g.vertex_ids()[iv];
  set.length = k;
  std::vector<int> current{iu};
  enumerate_geodesics(g, view, iv, current, set.paths);
  return set;
}

}  // namespace

GeodesicSet geodesics(const FuzzyGraph& g, const EdgeClassification& labels,
                      const VertexId& u, const VertexId& v) {
  const int iu = g.index_of(u);
  const int iv = g.index_of(v);
  if (iu == iv) {
    throw ValidationError("geodesics need two distinct vertices");
  }
  return geodesics_at(g, make_strong_view(g, labels), iu, iv);
}

GeodesicSet geodesics(const FuzzyGraph& g, const VertexId& u,
                      const VertexId& v) {
  return geodesics(g, classify_edges(g), u, v);
}

double ds(const FuzzyGraph& g, const VertexId& u, const VertexId& v) {
  return geodesics(g, u, v).min_weight();
}

double wiener_index(const FuzzyGraph& g) {
  const auto view = make_strong_view(g, classify_edges(g));
  const int n = g.order();
  double total = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      total += g.sigma_at(i) * g.sigma_at(j) *
               geodesics_at(g, view, i, j).min_weight();
    }
  }
  return total;
}

double connectivity_index(const FuzzyGraph& g) {
  const auto conn = strength_matrix(g);
  const int n = g.order();
  double total = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      total += g.sigma_at(i) * g.sigma_at(j) * conn.at(i, j);
    }
  }
  return total;
}

IndexReport index_report(const FuzzyGraph& g) {
  const int n = g.order();
  const auto conn = strength_matrix(g);
  const auto view = make_strong_view(g, classify_edges(g));

  IndexReport report;
  report.ids = g.vertex_ids();
  report.conn.assign(static_cast<size_t>(n) * n, 0.0);
  report.ds.assign(static_cast<size_t>(n) * n, 0.0);
  report.geodesic_length.assign(static_cast<size_t>(n) * n, 0);

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto set = geodesics_at(g, view, i, j);
      const double d = set.min_weight();
      report.conn[i * n + j] = report.conn[j * n + i] = conn.at(i, j);
      report.ds[i * n + j] = report.ds[j * n + i] = d;
      report.geodesic_length[i * n + j] =
          report.geodesic_length[j * n + i] = set.length;
      report.wiener += g.sigma_at(i) * g.sigma_at(j) * d;
      report.connectivity += g.sigma_at(i) * g.sigma_at(j) * conn.at(i, j);
    }
  }
  return report;
}

}  // namespace fuzzgraph
