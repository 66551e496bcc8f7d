#include <algorithm>
#include <string>
#include <vector>

#include <doctest.h>

#include "fuzzgraph/connectivity.hpp"
#include "fuzzgraph/graph.hpp"
#include "fuzzgraph/oracle.hpp"
#include "support/generators.hpp"

using namespace fuzzgraph;

namespace {

FuzzyGraph square() {
  return FuzzyGraph::build({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}},
                           {{"a", "b", 0.8},
                            {"b", "c", 0.5},
                            {"c", "d", 0.8},
                            {"d", "a", 0.5}});
}

FuzzyGraph complete4(double mu) {
  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  const std::vector<VertexId> names = {"a", "b", "c", "d"};
  for (const auto& v : names) vs.push_back({v, 1.0});
  for (size_t i = 0; i < names.size(); ++i) {
    for (size_t j = i + 1; j < names.size(); ++j) {
      es.push_back({names[i], names[j], mu});
    }
  }
  return FuzzyGraph::build(vs, es);
}

FuzzyGraph path_graph(int n) {
  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  const auto names = testsupport::vertex_names(n);
  for (const auto& v : names) vs.push_back({v, 1.0});
  for (int i = 0; i + 1 < n; ++i) es.push_back({names[i], names[i + 1], 0.5});
  return FuzzyGraph::build(vs, es);
}

}  // namespace

TEST_CASE("path enumeration on the square") {
  const auto g = square();
  const auto diagonal = oracle::enumerate_simple_paths(g, "a", "c");
  REQUIRE(diagonal.size() == 2);
  std::vector<std::vector<VertexId>> routes;
  for (const auto& p : diagonal) routes.push_back(p.vertices);
  std::sort(routes.begin(), routes.end());
  CHECK(routes[0] == std::vector<VertexId>{"a", "b", "c"});
  CHECK(routes[1] == std::vector<VertexId>{"a", "d", "c"});

  const auto adjacent = oracle::enumerate_simple_paths(g, "a", "b");
  REQUIRE(adjacent.size() == 2);
  for (const auto& p : adjacent) {
    CHECK((p.length() == 1 || p.length() == 3));
    CHECK(p.vertices.front() == "a");
    CHECK(p.vertices.back() == "b");
  }
}

TEST_CASE("path enumeration counts on K4") {
  // between any two vertices of K4: the edge, two 2-hop routes, and two
  // 3-hop routes
  const auto paths = oracle::enumerate_simple_paths(complete4(0.5), "a", "d");
  CHECK(paths.size() == 5);
}

TEST_CASE("the oracle refuses oversized graphs") {
  const auto g = path_graph(13);
  CHECK_THROWS_WITH_AS(oracle::enumerate_simple_paths(g, "v0", "v1"),
                       "oracle refuses graph of order 13 (bound 12)",
                       ValidationError);
  CHECK_THROWS_AS(oracle::oracle_report(g), ValidationError);
  CHECK_NOTHROW(oracle::oracle_report(g, 13));
}

TEST_CASE("oracle report on the square") {
  const auto g = square();
  const auto report = oracle::oracle_report(g);
  CHECK(report.wiener == doctest::Approx(5.2).epsilon(1e-12));
  CHECK(report.connectivity == doctest::Approx(3.6).epsilon(1e-12));

  CHECK(report.pair("a", "b").conn == 0.8);
  CHECK(report.pair("a", "c").conn == 0.5);
  CHECK(report.pair("c", "a").geodesic_length == 2);
  CHECK(report.pair("a", "c").geodesics.size() == 2);
  CHECK(report.pair("a", "c").ds == doctest::Approx(1.3).epsilon(1e-12));
  CHECK(report.pair("a", "c").paths.size() == 2);

  CHECK(report.labels.at(edge_key("a", "b")) == EdgeLabel::Alpha);
  CHECK(report.labels.at(edge_key("b", "c")) == EdgeLabel::Beta);
  CHECK_THROWS_AS(report.pair("a", "zz"), ValidationError);
}

TEST_CASE("oracle flags undefined Wiener index") {
  const auto g = FuzzyGraph::build({{"a", 1}, {"b", 1}, {"c", 1}},
                                   {{"a", "b", 0.5}});
  CHECK_THROWS_WITH_AS(oracle::oracle_report(g),
                       "no strong path between 'a' and 'c'",
                       NoStrongPathError);
}

TEST_CASE("oracle labels a weak shortcut as delta") {
  const auto g = FuzzyGraph::build(
      {{"a", 1}, {"b", 1}, {"c", 1}},
      {{"a", "b", 0.9}, {"b", "c", 0.8}, {"a", "c", 0.2}});
  const auto report = oracle::oracle_report(g);
  CHECK(report.labels.at(edge_key("a", "c")) == EdgeLabel::Delta);
  CHECK(report.labels.at(edge_key("a", "b")) == EdgeLabel::Alpha);
  // the delta edge is no geodesic: the strong route wins despite its length
  CHECK(report.pair("a", "c").geodesic_length == 2);
  CHECK(report.pair("a", "c").ds == doctest::Approx(1.7).epsilon(1e-12));
}

TEST_CASE("every enumerated path is simple with correct aggregates") {
  testsupport::Rng rng(424242);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng.uniform_int(2, 6);
    const auto g = testsupport::random_connected_graph(rng, n, true);
    const auto& ids = g.vertex_ids();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (const auto& p : oracle::enumerate_simple_paths(g, ids[i],
                                                            ids[j])) {
          const auto rebuilt = make_path(g, p.vertices);
          CHECK(rebuilt.strength == p.strength);
          CHECK(rebuilt.weight == p.weight);
          CHECK(p.vertices.front() == ids[i]);
          CHECK(p.vertices.back() == ids[j]);
        }
      }
    }
  }
}
