#include <catch2/catch_amalgamated.hpp>

#include "critlab/catalog.hpp"
#include "critlab/discharging.hpp"
#include "critlab/ore.hpp"

using namespace critlab;

TEST_CASE("K4 moves no charge and falls short of the component bound",
          "[discharge]") {
  Graph k4 = complete_graph(4);
  ChargeLedger led = run_discharging(k4);
  for (int v = 0; v < 4; ++v) {
    CHECK(led.vertices[v].after3 == Rational(3));
    CHECK(led.vertices[v].f == Rational(0));
  }
  DischargeAudit rep = audit(k4, led);
  CHECK(rep.edge_charge == Rational(12));
  REQUIRE(rep.components.size() == 1);
  CHECK(rep.components[0].shape == Degree3Subgraph::Shape::HasCycle);
  CHECK(rep.components[0].final_total == Rational(12));
  CHECK_FALSE(rep.components[0].meets_bound);  // 12 < 4 * 10/3
  CHECK_FALSE(rep.all_components_meet);
  CHECK(rep.min_final == Rational(3));
  CHECK(rep.high_degree_ok);  // vacuous
  CHECK(rep.isolated_ok);     // vacuous
}

TEST_CASE("the Grotzsch ledger, vertex by vertex", "[discharge]") {
  Graph g = catalog(NamedGraph::Grotzsch);
  ChargeLedger led = run_discharging(g);

  for (int v = 0; v < g.n(); ++v) {
    const auto& rec = led.vertices[v];
    switch (rec.degree) {
      case 4:  // cycle vertex: two shadow neighbours, both isolated in D3
        CHECK(rec.deg3 == 2);
        CHECK(rec.i3 == 2);
        CHECK(rec.after1 == Rational(10, 3));
        CHECK(rec.f == Rational(1, 9));
        CHECK(rec.after3 == Rational(31, 9));
        break;
      case 3:  // shadow vertex: isolated in D3
        CHECK(rec.isolated);
        CHECK(rec.after1 == Rational(4));
        CHECK(rec.after2 == Rational(23, 6));
        CHECK(rec.after3 == Rational(23, 6));
        break;
      case 5:  // apex: five isolated degree-3 neighbours
        CHECK(rec.deg3 == 5);
        CHECK(rec.i3 == 5);
        CHECK(rec.after1 == Rational(10, 3));
        CHECK(rec.f == Rational(5, 18));
        CHECK(rec.after3 == Rational(65, 18));  // keeps f: no takers
        break;
      default:
        FAIL("unexpected degree");
    }
  }
  CHECK(led.total(3) == Rational(40));

  DischargeAudit rep = audit(g, led);
  CHECK(rep.components.size() == 5);
  for (const auto& c : rep.components) {
    CHECK(c.shape == Degree3Subgraph::Shape::Isolated);
    CHECK(c.final_total == Rational(23, 6));
    CHECK(c.meets_bound);
  }
  CHECK(rep.all_components_meet);
  CHECK(rep.min_final == Rational(31, 9));
  CHECK(rep.min_final >= Rational(10, 3));
}

TEST_CASE("W5 discharges to exactly 10/3 everywhere", "[discharge]") {
  Graph w5 = catalog(NamedGraph::W5);
  ChargeLedger led = run_discharging(w5);
  for (int v = 0; v < w5.n(); ++v) CHECK(led.vertices[v].after3 == Rational(10, 3));
  DischargeAudit rep = audit(w5, led);
  REQUIRE(rep.components.size() == 1);  // the rim cycle
  CHECK(rep.components[0].shape == Degree3Subgraph::Shape::HasCycle);
  CHECK(rep.components[0].meets_bound);  // met with equality
  CHECK(rep.components[0].final_total == Rational(50, 3));
}

TEST_CASE("the T8 component is reported short of the bound", "[discharge]") {
  Graph t8 = catalog(NamedGraph::T8);
  ChargeLedger led = run_discharging(t8);
  DischargeAudit rep = audit(t8, led);
  REQUIRE(rep.components.size() == 1);  // six degree-3 vertices, one blob
  CHECK(popcount(rep.components[0].host_vertices) == 6);
  CHECK(rep.components[0].shape == Degree3Subgraph::Shape::HasCycle);
  CHECK(rep.components[0].final_total == Rational(58, 3));
  CHECK_FALSE(rep.components[0].meets_bound);  // 58/3 < 6 * 10/3
  CHECK(rep.min_final == Rational(3));
  CHECK(rep.high_degree_ok);
}

TEST_CASE("conservation and the rule-derived bounds across the families",
          "[discharge]") {
  std::vector<Graph> pool;
  for (const auto& m : generate_family(Family::Ore4, 13).members)
    pool.push_back(m.g);
  for (const auto& m : generate_family(Family::ClassB, 14).members)
    pool.push_back(m.g);
  for (const auto& [name, which] : catalog_entries())
    pool.push_back(catalog(which));

  for (const Graph& g : pool) {
    if (g.min_degree() < 3) continue;  // K3, C5 in the catalog
    ChargeLedger led = run_discharging(g);
    DischargeAudit rep;
    REQUIRE_NOTHROW(rep = audit(g, led));  // throws iff charge leaked
    CHECK(rep.conserved3);
    CHECK(rep.high_degree_ok);
    CHECK(rep.isolated_ok);
  }
}

TEST_CASE("Step-1 sends are never below 1/6", "[discharge]") {
  for (int d = 4; d <= 62; ++d)
    for (int d3 = 1; d3 <= d; ++d3)
      CHECK(Rational(3 * d - 10, 3 * d3) >= Rational(1, 6));
}

TEST_CASE("degenerate inputs are rejected", "[discharge]") {
  CHECK_THROWS_AS(run_discharging(cycle_graph(5)), argument_error);
  CHECK_THROWS_AS(run_discharging(Graph(3)), argument_error);
  CHECK_THROWS_AS(run_discharging(Graph(0)), argument_error);
  ChargeLedger led = run_discharging(complete_graph(4));
  CHECK_THROWS_AS(audit(complete_graph(5), led), argument_error);
}

TEST_CASE("ledger JSON round-trips the exact strings", "[discharge]") {
  Graph g = catalog(NamedGraph::Grotzsch);
  ChargeLedger led = run_discharging(g);
  nlohmann::json doc = ledger_to_json(g, led);
  CHECK(doc["n"] == 11);
  CHECK(doc["m"] == 20);
  CHECK(doc["conservation"] == true);
  CHECK(doc["totals"]["step3"] == "40");
  REQUIRE(doc["vertices"].size() == 11);
  int apex_count = 0;
  for (const auto& entry : doc["vertices"])
    if (entry["degree"] == 5) {
      ++apex_count;
      CHECK(entry["step3"] == "65/18");
      CHECK(entry["f"] == "5/18");
    }
  CHECK(apex_count == 1);

  // determinism: a fresh run serializes identically
  nlohmann::json again = ledger_to_json(g, run_discharging(g));
  CHECK(doc.dump() == again.dump());
}
