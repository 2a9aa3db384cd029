#include <catch2/catch_amalgamated.hpp>

#include "critlab/canonical.hpp"
#include "critlab/catalog.hpp"

using namespace critlab;

TEST_CASE("catalog orders and sizes", "[catalog]") {
  struct Row {
    NamedGraph id;
    int n, m;
  };
  const Row rows[] = {
      {NamedGraph::K4, 4, 6},          {NamedGraph::K3, 3, 3},
      {NamedGraph::C5, 5, 5},          {NamedGraph::W5, 6, 10},
      {NamedGraph::MoserSpindle, 7, 11}, {NamedGraph::T8, 8, 13},
      {NamedGraph::Grotzsch, 11, 20},
  };
  for (const Row& r : rows) {
    Graph g = catalog(r.id);
    CHECK(g.n() == r.n);
    CHECK(g.m() == r.m);
  }
}

TEST_CASE("moser spindle has exactly one degree-4 vertex", "[catalog]") {
  Graph m = catalog(NamedGraph::MoserSpindle);
  int deg4 = 0;
  for (int v = 0; v < m.n(); ++v) {
    CHECK((m.degree(v) == 3 || m.degree(v) == 4));
    if (m.degree(v) == 4) ++deg4;
  }
  CHECK(deg4 == 1);
  CHECK(m.degree(1) == 4);
}

TEST_CASE("t8 degree sequence is 4,4,3,3,3,3,3,3", "[catalog]") {
  Graph t8 = catalog(NamedGraph::T8);
  std::vector<int> degs;
  for (int v = 0; v < t8.n(); ++v) degs.push_back(t8.degree(v));
  std::sort(degs.begin(), degs.end(), std::greater<>());
  CHECK(degs == std::vector<int>{4, 4, 3, 3, 3, 3, 3, 3});
  CHECK(t8.has_edge(0, 1));  // the two degree-4 vertices are adjacent
  CHECK(t8.degree(0) == 4);
  CHECK(t8.degree(1) == 4);
}

TEST_CASE("grotzsch graph is triangle-free and 4-regular-ish", "[catalog]") {
  Graph g = catalog(NamedGraph::Grotzsch);
  for (auto [u, v] : g.edges()) CHECK((g.neighbors(u) & g.neighbors(v)) == 0);
  // Five cycle vertices of degree 4, five shadows of degree 3, apex of degree 5.
  for (int i = 0; i < 5; ++i) CHECK(g.degree(i) == 4);
  for (int i = 5; i < 10; ++i) CHECK(g.degree(i) == 3);
  CHECK(g.degree(10) == 5);
}

TEST_CASE("w5 is the 5-wheel", "[catalog]") {
  Graph w = catalog(NamedGraph::W5);
  CHECK(w.degree(5) == 5);
  for (int i = 0; i < 5; ++i) CHECK(w.degree(i) == 3);
  CHECK(isomorphic(w.without_vertex(5), cycle_graph(5)));
}

TEST_CASE("catalog name lookup", "[catalog]") {
  CHECK(named_graph_by_name("t8") == NamedGraph::T8);
  CHECK(named_graph_by_name("moser") == NamedGraph::MoserSpindle);
  CHECK(!named_graph_by_name("petersen").has_value());
}
