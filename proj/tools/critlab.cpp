// critlab: generate graph families, analyse graph6 streams, and run the
// verification suite from the command line.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or IO error,
// 3 universe incomplete (budget clamp).  Machine outputs are line-delimited
// JSON (or TSV with --format tsv); graph6 lines are the only other format.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "critlab/discharging.hpp"
#include "critlab/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIncomplete = 3;

critlab::Family parse_family(const std::string& name) {
  if (name == "4ore") return critlab::Family::Ore4;
  if (name == "classb") return critlab::Family::ClassB;
  throw critlab::argument_error("unknown family '" + name + "' (expected 4ore or classb)");
}

std::vector<int> as_list(critlab::Vset s) {
  std::vector<int> out;
  for (critlab::Vset r = s; r; r &= r - 1) out.push_back(critlab::lowest_bit(r));
  return out;
}

// --- gen --------------------------------------------------------------------

int run_gen(const std::string& family, int max_n, const std::string& out_dir) {
  critlab::FamilyIndex idx = critlab::generate_family(parse_family(family), max_n);
  critlab::save_family(idx, out_dir);
  nlohmann::ordered_json j{
      {"family", family}, {"max_n", max_n}, {"members", idx.members.size()}, {"out", out_dir}};
  std::cout << j.dump() << '\n';
  return kExitPass;
}

// --- check ------------------------------------------------------------------

nlohmann::ordered_json check_one(const std::string& what, const critlab::Graph& g, int k) {
  using critlab::packing_number;
  if (what == "critical") {
    critlab::CriticalityVerdict v = critlab::is_k_critical(g, k);
    const char* reason = "critical";
    switch (v.reason) {
      case critlab::CriticalityVerdict::Reason::Critical: reason = "critical"; break;
      case critlab::CriticalityVerdict::Reason::Colorable: reason = "colorable"; break;
      case critlab::CriticalityVerdict::Reason::UndeletableEdge:
        reason = "undeletable-edge";
        break;
      case critlab::CriticalityVerdict::Reason::UndeletableVertex:
        reason = "undeletable-vertex";
        break;
    }
    return {{"n", g.n()}, {"m", g.m()}, {"critical", v.is_critical}, {"reason", reason}};
  }
  if (what == "potential") {
    return {{"v", g.n()},
            {"e", g.m()},
            {"T3", packing_number(g, 3)},
            {"p", critlab::potential(g)}};
  }
  if (what == "packing") {
    nlohmann::ordered_json triangles = nlohmann::ordered_json::array();
    for (critlab::Vset t : critlab::clique_packing(g, 3).cliques)
      triangles.push_back(as_list(t));
    return {{"v", g.n()},
            {"e", g.m()},
            {"T3", triangles.size()},
            {"triangles", triangles}};
  }
  if (what == "kites") {
    nlohmann::ordered_json kites = nlohmann::ordered_json::array();
    for (const critlab::Kite& kite : critlab::find_kites(g))
      kites.push_back({{"vertices", kite.vertices},
                       {"spar", {kite.spar.first, kite.spar.second}}});
    return {{"v", g.n()}, {"e", g.m()}, {"count", kites.size()}, {"kites", kites}};
  }
  // discharge
  critlab::ChargeLedger led = critlab::run_discharging(g);
  critlab::DischargeAudit audit = critlab::audit(g, led);
  nlohmann::ordered_json j = critlab::ledger_to_json(g, led);
  j["min_final"] = audit.min_final.str();
  j["high_degree_ok"] = audit.high_degree_ok;
  j["isolated_ok"] = audit.isolated_ok;
  return j;
}

std::string check_tsv(const std::string& what, const nlohmann::ordered_json& j) {
  std::ostringstream row;
  if (what == "critical")
    row << j["n"] << '\t' << j["m"] << '\t' << (j["critical"].get<bool>() ? 1 : 0) << '\t'
        << j["reason"].get<std::string>();
  else if (what == "potential")
    row << j["v"] << '\t' << j["e"] << '\t' << j["T3"] << '\t' << j["p"];
  else if (what == "packing")
    row << j["v"] << '\t' << j["e"] << '\t' << j["T3"] << '\t' << j["triangles"].dump();
  else if (what == "kites")
    row << j["v"] << '\t' << j["e"] << '\t' << j["count"] << '\t' << j["kites"].dump();
  else
    row << j["n"] << '\t' << j["m"] << '\t' << (j["conservation"].get<bool>() ? 1 : 0)
        << '\t' << j["min_final"].get<std::string>();
  return row.str();
}

int run_check(const std::string& what, std::istream& in, int k, const std::string& format) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    std::optional<critlab::Graph> g;
    try {
      g = critlab::from_graph6(line);
    } catch (const critlab::parse_error& e) {
      std::cerr << "line " << lineno << ": " << e.what() << '\n';
      continue;
    }
    nlohmann::ordered_json j;
    try {
      j = check_one(what, *g, k);
    } catch (const critlab::argument_error& e) {
      j = nlohmann::ordered_json{{"error", e.what()}};
    }
    std::cout << (format == "tsv" && !j.contains("error") ? check_tsv(what, j) : j.dump())
              << '\n';
  }
  return kExitPass;
}

// --- verify -----------------------------------------------------------------

critlab::Corpus corpus_or(const std::string& path, const critlab::Corpus& fallback) {
  if (path.empty()) return fallback;
  if (path == "-") return critlab::load_corpus(std::cin, "stdin");
  std::ifstream in(path);
  if (!in) throw critlab::argument_error("cannot read corpus: " + path);
  return critlab::load_corpus(in, path);
}

void emit_verdict(const critlab::LemmaVerdict& v, const std::string& format) {
  if (format == "tsv") {
    std::cout << v.lemma << '\t' << (v.pass ? "pass" : "fail") << '\t' << v.checked << '\t'
              << (v.complete ? 1 : 0) << '\t' << v.universe;
    if (!v.pass) std::cout << '\t' << v.witness.dump();
    std::cout << '\n';
  } else {
    std::cout << v.to_json().dump() << '\n';
  }
}

int run_verify(const std::vector<std::string>& requested, const critlab::VerifyOptions& opts,
               const std::string& corpus_path, const std::string& format) {
  std::vector<std::string> ids;
  for (const std::string& id : requested) {
    if (id == "all") {
      std::vector<std::string> all = critlab::lemma_ids();
      ids.insert(ids.end(), all.begin(), all.end());
    } else {
      ids.push_back(id);
    }
  }

  bool any_fail = false, any_incomplete = false;
  for (const std::string& id : ids) {
    critlab::LemmaVerdict v;
    if (id == "density") {
      int cap = std::min(opts.critical_max_n, 10);
      v = critlab::verify_density(
          corpus_or(corpus_path, critlab::triangle_free_critical_corpus(cap)));
    } else if (id == "maintheorem") {
      int cap = std::min(opts.critical_max_n, 10);
      v = critlab::verify_main_theorem(corpus_or(corpus_path, critlab::critical_corpus(cap)));
    } else {
      v = critlab::verify_lemma(id, opts);  // unknown ids raise a usage error
    }
    emit_verdict(v, format);
    any_fail = any_fail || !v.pass;
    any_incomplete = any_incomplete || !v.complete;
  }
  if (any_fail) return kExitFail;
  if (any_incomplete) return kExitIncomplete;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critical-graph laboratory: families, potentials, discharging, verification"};
  app.require_subcommand(1);

  std::string gen_family, gen_out;
  int gen_max_n = 0;
  CLI::App* gen = app.add_subcommand("gen", "generate a family corpus (members.g6 + provenance.json)");
  gen->add_option("--family", gen_family, "4ore or classb")->required();
  gen->add_option("--max-n", gen_max_n, "largest member order (family budget: 14)")->required();
  gen->add_option("--out", gen_out, "output directory")->required();

  std::string check_what, check_corpus, check_format = "json";
  int check_k = 4;
  CLI::App* check = app.add_subcommand("check", "analyse a graph6 stream, one JSON line per graph");
  check->add_option("what", check_what, "analysis to run")
      ->required()
      ->check(CLI::IsMember({"critical", "potential", "packing", "kites", "discharge"}));
  check->add_option("--corpus", check_corpus, "graph6 file (default: standard input)");
  check->add_option("--k", check_k, "criticality target for 'critical' (default 4)");
  check->add_option("--format", check_format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));

  std::vector<std::string> verify_ids;
  std::string verify_corpus, verify_format = "json";
  int verify_max_n = -1;
  critlab::VerifyOptions opts;
  opts.jobs = std::max(1u, std::thread::hardware_concurrency());
  CLI::App* verify = app.add_subcommand("verify", "run lemma verdicts as JSON lines");
  verify->add_option("ids", verify_ids,
                     "lemma ids, mutation ids, 'all', 'density', or 'maintheorem'")
      ->required();
  verify->add_option("--max-n", verify_max_n, "family budget for the 4-Ore and class-B sweeps");
  verify->add_option("--pool-max-n", opts.pool_max_n, "order cap for composition-pool members");
  verify->add_option("--critical-max-n", opts.critical_max_n,
                     "exhaustive 4-critical enumeration cap (<= 10)");
  verify->add_option("--samples", opts.samples, "seeded draws for the quotient lemmas");
  verify->add_option("--seed", opts.seed, "sample seed");
  verify->add_option("--jobs", opts.jobs, "parallel width (results are order-independent)");
  verify->add_option("--corpus", verify_corpus,
                     "graph6 corpus for density/maintheorem ('-' for standard input; "
                     "default: generated exhaustively)");
  verify->add_option("--format", verify_format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_family, gen_max_n, gen_out);
    if (check->parsed()) {
      if (check_corpus.empty() || check_corpus == "-")
        return run_check(check_what, std::cin, check_k, check_format);
      std::ifstream in(check_corpus);
      if (!in) throw critlab::argument_error("cannot read corpus: " + check_corpus);
      return run_check(check_what, in, check_k, check_format);
    }
    if (verify_max_n >= 0) {
      opts.ore_max_n = verify_max_n;
      opts.classb_max_n = verify_max_n;
    }
    return run_verify(verify_ids, opts, verify_corpus, verify_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
