#include <catch2/catch_amalgamated.hpp>

#include "critlab/catalog.hpp"
#include "critlab/coloring.hpp"
#include "critlab/enumerate.hpp"
#include "oracles.hpp"

using namespace critlab;

namespace {
bool proper(const Graph& g, const Coloring& c, int k) {
  for (int v = 0; v < g.n(); ++v)
    if (c[static_cast<std::size_t>(v)] < 0 || c[static_cast<std::size_t>(v)] >= k) return false;
  for (auto [u, v] : g.edges())
    if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) return false;
  return true;
}
}  // namespace

TEST_CASE("colourability agrees with the all-assignments oracle", "[coloring]") {
  for (int n = 1; n <= 5; ++n)
    enumerate_graphs(n, nullptr, [&](const Graph& g) {
      for (int k = 1; k <= 4; ++k) {
        auto mine = find_coloring(g, k);
        REQUIRE(mine.has_value() == oracles::brute_colorable(g, k));
        if (mine) REQUIRE(proper(g, *mine, k));
      }
    });
}

TEST_CASE("chromatic anchors", "[coloring]") {
  CHECK(!colorable(complete_graph(4), 3));
  CHECK(colorable(complete_graph(4), 4));
  CHECK(!colorable(cycle_graph(5), 2));
  CHECK(colorable(cycle_graph(5), 3));
  CHECK(!colorable(catalog(NamedGraph::Grotzsch), 3));
  CHECK(colorable(catalog(NamedGraph::Grotzsch), 4));
}

TEST_CASE("homomorphism search", "[coloring]") {
  Graph c5 = cycle_graph(5);
  auto id = find_homomorphism(c5, c5);
  REQUIRE(id.has_value());
  for (auto [u, v] : c5.edges())
    CHECK(c5.has_edge((*id)[static_cast<std::size_t>(u)], (*id)[static_cast<std::size_t>(v)]));

  CHECK(find_homomorphism(c5, complete_graph(3)).has_value());
  CHECK(!find_homomorphism(complete_graph(4), complete_graph(3)).has_value());
  // A hom into C5 would 3-colour the target of any graph, so none exists
  // from a 4-chromatic graph.
  CHECK(!find_homomorphism(catalog(NamedGraph::Grotzsch), c5).has_value());
}

TEST_CASE("the named 4-critical graphs test as 4-critical", "[coloring]") {
  for (NamedGraph id : {NamedGraph::K4, NamedGraph::W5, NamedGraph::MoserSpindle,
                        NamedGraph::T8, NamedGraph::Grotzsch}) {
    Graph g = catalog(id);
    auto verdict = is_k_critical(g, 4);
    CHECK(verdict.is_critical);
    CHECK(verdict.edge_colorings.size() == static_cast<std::size_t>(g.m()));
    for (const auto& [e, col] : verdict.edge_colorings)
      CHECK(proper(g.without_edge(e.first, e.second), col, 3));
  }
  CHECK(is_k_critical(complete_graph(3), 3).is_critical);
  CHECK(is_k_critical(cycle_graph(5), 3).is_critical);
}

TEST_CASE("non-critical graphs are rejected with a reason", "[coloring]") {
  auto colorable_case = is_k_critical(cycle_graph(6), 3);
  CHECK(!colorable_case.is_critical);
  CHECK(colorable_case.reason == CriticalityVerdict::Reason::Colorable);
  REQUIRE(colorable_case.coloring.has_value());
  CHECK(proper(cycle_graph(6), *colorable_case.coloring, 2));

  // K5 minus an edge: contains K4 properly, so some edge deletion stays
  // uncolourable.
  Graph k5e = complete_graph(5).without_edge(0, 1);
  auto edge_case = is_k_critical(k5e, 4);
  CHECK(!edge_case.is_critical);
  CHECK(edge_case.reason == CriticalityVerdict::Reason::UndeletableEdge);
  REQUIRE(edge_case.bad_edge.has_value());
  CHECK(!colorable(k5e.without_edge(edge_case.bad_edge->first, edge_case.bad_edge->second), 3));

  // K4 plus an isolated vertex passes every edge test; the vertex check
  // must catch it.
  Graph k4_plus = complete_graph(4).with_new_vertex(0);
  auto vertex_case = is_k_critical(k4_plus, 4);
  CHECK(!vertex_case.is_critical);
  CHECK(vertex_case.reason == CriticalityVerdict::Reason::UndeletableVertex);
  CHECK(vertex_case.bad_vertex == 4);
}

TEST_CASE("identifiable pairs in vertex-deleted subgraphs", "[coloring]") {
  // Deleting a shadow vertex from the Grotzsch graph leaves a 3-chromatic
  // graph in which three nonadjacent pairs are forced to share a colour;
  // deleting a cycle vertex or the apex forces nothing.
  Graph g = catalog(NamedGraph::Grotzsch);
  Graph r = g.without_vertex(5);
  auto pairs = identifiable_pairs(r, 4);
  CHECK(pairs == std::vector<std::pair<int, int>>{{0, 9}, {1, 7}, {4, 6}});
  for (auto [u, v] : pairs) {
    CHECK(!r.has_edge(u, v));
    CHECK(!colorable(r.with_edge(u, v), 3));
  }
  for (int v : {0, 10}) CHECK(identifiable_pairs(g.without_vertex(v), 4).empty());
}

TEST_CASE("gallai cycle consequences hold on anchors", "[coloring]") {
  Graph w5 = catalog(NamedGraph::W5);
  auto rim = gallai_cycle_check(w5, {0, 1, 2, 3, 4});
  CHECK(rim.pass());
  CHECK(rim.neighborhood == vbit(5));

  Graph k4 = complete_graph(4);
  auto tri = gallai_cycle_check(k4, {0, 1, 2});
  CHECK(tri.pass());
  CHECK(tri.neighborhood == vbit(3));

  // Not a cycle of degree-3 vertices: path, repeated vertex, wrong degree.
  CHECK(!gallai_cycle_check(w5, {0, 1, 2}).valid_cycle);       // 0-2 not an edge
  CHECK(!gallai_cycle_check(w5, {0, 1, 5}).valid_cycle);       // hub has degree 5
  CHECK(!gallai_cycle_check(k4, {0, 1, 0}).valid_cycle);       // repeat
}
