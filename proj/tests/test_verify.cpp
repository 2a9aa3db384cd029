#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "critlab/catalog.hpp"
#include "critlab/verify.hpp"

using namespace critlab;

namespace {

// Reduced budgets that keep the unit sweep under a few seconds; the full
// budgets run in the acceptance binary.
VerifyOptions small_options() {
  VerifyOptions o;
  o.ore_max_n = 10;
  o.classb_max_n = 14;
  o.pool_max_n = 7;  // pool: K4, Moser spindle, W5
  o.critical_max_n = 7;
  o.samples = 120;
  return o;
}

}  // namespace

// Declared first so no earlier test has memoized these orders.
TEST_CASE("corpus cache rejects tampered entries and rewrites them", "[verify]") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "critlab-cache-test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  REQUIRE(setenv("CRITLAB_CACHE", dir.c_str(), 1) == 0);

  {
    std::ofstream bogus(dir / "critical-6.g6");
    bogus << to_graph6(cycle_graph(5)) << '\n';  // wrong order, not critical
  }
  std::map<int, long> counts = critical_counts_by_order(6);
  CHECK(counts.at(4) == 1);
  CHECK(counts.at(5) == 0);
  CHECK(counts.at(6) == 1);  // the bogus entry was recomputed away

  std::ifstream back(dir / "critical-6.g6");
  std::vector<Graph> rewritten = read_graph6_lines(back);
  REQUIRE(rewritten.size() == 1);
  CHECK(rewritten[0].n() == 6);
  CHECK(is_k_critical(rewritten[0], 4).is_critical);
  CHECK(isomorphic(rewritten[0], catalog(NamedGraph::W5)));

  REQUIRE(unsetenv("CRITLAB_CACHE") == 0);
  fs::remove_all(dir);
}

TEST_CASE("registry lists every lemma and mutation once", "[verify]") {
  std::vector<std::string> ids = lemma_ids();
  REQUIRE(ids.size() == 18);
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  std::vector<std::string> muts = mutation_ids();
  REQUIRE(muts.size() == 3);
  for (const std::string& m : muts)
    CHECK(std::find(ids.begin(), ids.end(), m) == ids.end());
  CHECK_THROWS_AS(verify_lemma("no-such-lemma"), argument_error);
}

TEST_CASE("member-level lemmas pass at full family budgets", "[verify]") {
  VerifyOptions o;  // defaults: kOre(4) <= 13, ClassB <= 14
  for (const char* id : {"deletingavertex", "deletingaclique", "onecliquecharacterization",
                         "K4e", "kyClassB", "foundationalB", "foundational4Ore"}) {
    LemmaVerdict v = verify_lemma(id, o);
    INFO(id << " witness: " << v.witness.dump());
    CHECK(v.pass);
    CHECK(v.complete);
    CHECK(v.checked > 0);
  }
}

TEST_CASE("split lemmas pass over every vertex and bipartition", "[verify]") {
  VerifyOptions o = small_options();
  for (const char* id : {"splittinglemma", "split3triangle", "t8splits", "deletingatriangle"}) {
    LemmaVerdict v = verify_lemma(id, o);
    INFO(id << " witness: " << v.witness.dump());
    CHECK(v.pass);
    CHECK(v.complete);
    CHECK(v.checked > 0);
  }
}

TEST_CASE("composition lemmas pass over the reduced pool", "[verify]") {
  VerifyOptions o = small_options();
  for (const char* id : {"cliqueboundinequality", "kkbound", "oreArithmetic"}) {
    LemmaVerdict v = verify_lemma(id, o);
    INFO(id << " witness: " << v.witness.dump());
    CHECK(v.pass);
    CHECK(v.complete);
    CHECK(v.checked > 300);  // edges x vertices x splits multiply fast
  }
}

TEST_CASE("sampled quotient lemmas hold on every draw", "[verify]") {
  VerifyOptions o = small_options();
  for (const char* id : {"easyhom", "counting", "potentialExtension"}) {
    LemmaVerdict v = verify_lemma(id, o);
    INFO(id << " witness: " << v.witness.dump());
    CHECK(v.pass);
    CHECK(v.checked == o.samples);
  }
}

TEST_CASE("degree-3 cycles are odd with independent monochromatic hulls", "[verify]") {
  VerifyOptions o = small_options();
  o.classb_max_n = 11;
  LemmaVerdict v = verify_lemma("gallaiCycle", o);
  INFO("witness: " << v.witness.dump());
  CHECK(v.pass);
  CHECK(v.checked > 0);  // K4 alone contributes its four triangles
  CHECK(v.note.find("graphs scanned") != std::string::npos);
}

TEST_CASE("mutations fail with replayable witnesses", "[verify]") {
  VerifyOptions o = small_options();

  SECTION("vertex-disjoint-kites overclaim breaks on the Moser spindle") {
    LemmaVerdict v = verify_lemma("mutK4eVertexDisjoint", o);
    REQUIRE_FALSE(v.pass);
    Graph bad = from_graph6(v.witness.at("graph6").get<std::string>());
    CHECK(isomorphic(bad, catalog(NamedGraph::MoserSpindle)));
  }

  SECTION("no-foundational-edge overclaim breaks on T8") {
    LemmaVerdict v = verify_lemma("mutFoundationalBForbidden", o);
    REQUIRE_FALSE(v.pass);
    Graph bad = from_graph6(v.witness.at("graph6").get<std::string>());
    CHECK(isomorphic(bad, catalog(NamedGraph::T8)));
    CHECK(v.witness.at("foundational").size() == 1);
  }

  SECTION("packing-preserving-split overclaim replays to a real drop") {
    LemmaVerdict v = verify_lemma("mutSplittingNoEscape", o);
    REQUIRE_FALSE(v.pass);
    Graph bad = from_graph6(v.witness.at("graph6").get<std::string>());
    auto to_vset = [](const std::vector<int>& vs) {
      Vset s = 0;
      for (int x : vs) s |= vbit(x);
      return s;
    };
    const nlohmann::json& sj = v.witness.at("split");
    SplitSpec sp{sj.at("z").get<int>(),
                 to_vset(sj.at("part1").get<std::vector<int>>()),
                 to_vset(sj.at("part2").get<std::vector<int>>())};
    CHECK(packing_number(bad, 3) == 2);
    CHECK(packing_number(split_vertex(bad, sp), 3) < 2);
  }
}

TEST_CASE("verdicts are deterministic and parallel-stable", "[verify]") {
  VerifyOptions o = small_options();
  LemmaVerdict a = verify_lemma("splittinglemma", o);
  LemmaVerdict b = verify_lemma("splittinglemma", o);
  CHECK(a.to_json().dump() == b.to_json().dump());

  VerifyOptions threaded = o;
  threaded.jobs = 3;
  LemmaVerdict c = verify_lemma("splittinglemma", threaded);
  CHECK(a.to_json().dump() == c.to_json().dump());

  LemmaVerdict s1 = verify_lemma("easyhom", o);
  LemmaVerdict s2 = verify_lemma("easyhom", o);
  CHECK(s1.to_json().dump() == s2.to_json().dump());
}

TEST_CASE("budget overruns are clamped and flagged incomplete", "[verify]") {
  VerifyOptions o;
  o.ore_max_n = 99;
  LemmaVerdict v = verify_lemma("deletingavertex", o);
  CHECK(v.pass);
  CHECK_FALSE(v.complete);
  CHECK(v.note.find("capped at 14") != std::string::npos);
  CHECK(v.to_json().at("complete") == false);
}

TEST_CASE("verdict json carries the witness only on failure", "[verify]") {
  VerifyOptions o = small_options();
  nlohmann::json passing = verify_lemma("onecliquecharacterization", o).to_json();
  CHECK(passing.at("verdict") == "pass");
  CHECK_FALSE(passing.contains("witness"));
  CHECK(passing.at("count").get<long>() > 0);

  nlohmann::json failing = verify_lemma("mutFoundationalBForbidden", o).to_json();
  CHECK(failing.at("verdict") == "fail");
  CHECK(failing.contains("witness"));
}

TEST_CASE("exhaustive 4-critical counts stay pinned", "[verify]") {
  std::map<int, long> counts = critical_counts_by_order(8);
  CHECK(counts == std::map<int, long>{{4, 1}, {5, 0}, {6, 1}, {7, 2}, {8, 5}});
  CHECK_THROWS_AS(critical_counts_by_order(11), capability_error);
}

TEST_CASE("main theorem verdict over corpora", "[verify]") {
  Corpus named;
  named.name = "named 4-critical graphs";
  named.provenance = "generated: catalog";
  for (NamedGraph w : {NamedGraph::K4, NamedGraph::W5, NamedGraph::MoserSpindle, NamedGraph::T8})
    named.graphs.push_back(catalog(w));
  LemmaVerdict v = verify_main_theorem(named);
  CHECK(v.pass);
  CHECK(v.checked == 4);

  Corpus exhaustive = critical_corpus(7);
  REQUIRE(exhaustive.graphs.size() == 4);  // 1 + 1 + 2
  CHECK(verify_main_theorem(exhaustive).pass);

  named.graphs.push_back(cycle_graph(5));
  LemmaVerdict bad = verify_main_theorem(named);
  CHECK_FALSE(bad.pass);
  CHECK(bad.witness.at("reason").get<std::string>().find("not 4-critical") !=
        std::string::npos);
}

TEST_CASE("density verdict over corpora", "[verify]") {
  Corpus grotzsch;
  grotzsch.name = "grotzsch";
  grotzsch.provenance = "generated: catalog";
  grotzsch.graphs.push_back(catalog(NamedGraph::Grotzsch));
  LemmaVerdict v = verify_density(grotzsch);
  CHECK(v.pass);
  CHECK(v.checked == 1);
  CHECK(v.note.find("holds on 1/1") != std::string::npos);
  CHECK(v.note.find("equality on 1") != std::string::npos);

  Corpus empty = triangle_free_critical_corpus(8);
  CHECK(empty.graphs.empty());
  LemmaVerdict vacuous = verify_density(empty);
  CHECK(vacuous.pass);
  CHECK(vacuous.checked == 0);

  Corpus wrong;
  wrong.name = "k4";
  wrong.graphs.push_back(catalog(NamedGraph::K4));
  LemmaVerdict rejected = verify_density(wrong);
  CHECK_FALSE(rejected.pass);
  CHECK(rejected.witness.at("reason").get<std::string>().find("triangle") != std::string::npos);
}

TEST_CASE("corpora load from graph6 streams", "[verify]") {
  std::stringstream in;
  in << to_graph6(catalog(NamedGraph::K4)) << '\n' << to_graph6(catalog(NamedGraph::W5)) << '\n';
  Corpus c = load_corpus(in, "stream");
  CHECK(c.graphs.size() == 2);
  CHECK(c.provenance == "external: stream");
  CHECK(isomorphic(c.graphs[1], catalog(NamedGraph::W5)));
}
