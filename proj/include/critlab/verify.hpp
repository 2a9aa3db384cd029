#ifndef CRITLAB_VERIFY_HPP
#define CRITLAB_VERIFY_HPP

// The verification harness.  Every structural statement the library encodes
// is bound to a finite universe (generated family members, all vertices, all
// splits, seeded samples) and swept instance by instance.  A sweep either
// confirms every instance or stops with a replayable witness: the graph6
// string plus the quantified choices that broke the statement.

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "critlab/canonical.hpp"
#include "critlab/catalog.hpp"
#include "critlab/cliques.hpp"
#include "critlab/coloring.hpp"
#include "critlab/enumerate.hpp"
#include "critlab/errors.hpp"
#include "critlab/graph6.hpp"
#include "critlab/ore.hpp"
#include "critlab/potential.hpp"

namespace critlab {

struct VerifyOptions {
  int ore_max_n = 13;      // 4-Ore sweep budget (family cap: kFamilyBudget)
  int classb_max_n = 14;   // class-B sweep budget
  int pool_max_n = 10;     // order cap for composition-pool members
  int critical_max_n = 9;  // exhaustive 4-critical universe cap
  long samples = 1000;     // seeded quotient/extension draws
  std::uint64_t seed = 0x51ab5eedULL;
  int jobs = 1;
};

struct LemmaVerdict {
  std::string lemma;
  std::string universe;
  long checked = 0;
  bool pass = true;
  bool complete = true;    // false when a budget cap cut the universe short
  nlohmann::json witness;  // replayable counterexample; null when passing
  std::string note;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["lemma"] = lemma;
    j["universe"] = universe;
    j["count"] = checked;
    j["verdict"] = pass ? "pass" : "fail";
    if (!pass) j["witness"] = witness;
    if (!complete) j["complete"] = false;
    if (!note.empty()) j["note"] = note;
    return j;
  }
};

struct Corpus {
  std::string name;
  std::vector<Graph> graphs;
  std::string provenance;
};

namespace detail {

// --- sweep machinery ------------------------------------------------------
//
// One slot per outer instance (usually per member graph).  Bodies write only
// their own slot, so any parallel schedule folds to the same verdict: counts
// add up and the surviving witness is the one with the lowest slot index.

struct SweepSlot {
  long checked = 0;
  bool failed = false;
  nlohmann::json witness;

  void fail(nlohmann::json w) {
    if (failed) return;
    failed = true;
    witness = std::move(w);
  }
};

template <class Body>
inline std::vector<SweepSlot> sweep(std::size_t count, int jobs, const Body& body) {
  std::vector<SweepSlot> slots(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, slots[i]);
    return slots;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i, slots[i]);
  };
  std::size_t width = std::min(static_cast<std::size_t>(jobs), count);
  std::vector<std::thread> threads;
  threads.reserve(width);
  for (std::size_t t = 0; t < width; ++t) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
  return slots;
}

inline void fold(LemmaVerdict& v, const std::vector<SweepSlot>& slots) {
  for (const SweepSlot& s : slots) {
    v.checked += s.checked;
    if (s.failed && v.pass) {
      v.pass = false;
      v.witness = s.witness;
    }
  }
}

struct Clamped {
  int used;
  bool cut;
};

inline Clamped clamp_budget(int requested, int cap) {
  return {std::min(requested, cap), requested > cap};
}

inline void note_clamp(LemmaVerdict& v, const Clamped& c, const std::string& what) {
  if (!c.cut) return;
  v.complete = false;
  v.note = what + " capped at " + std::to_string(c.used);
}

// --- witness pieces -------------------------------------------------------

inline nlohmann::json graph_witness(const Graph& g) {
  return nlohmann::json{{"graph6", to_graph6(g)}};
}

inline nlohmann::json split_json(const SplitSpec& s) {
  return nlohmann::json{
      {"z", s.z}, {"part1", set_to_list(s.part1)}, {"part2", set_to_list(s.part2)}};
}

inline std::pair<int, int> norm_edge(int u, int v) { return std::minmax(u, v); }

// --- quantifier helpers ---------------------------------------------------

// Unordered bipartitions of N(z) into two nonempty parts.  Exactly one side
// contains the lowest neighbour, so each split arrives once.
template <class Fn>
inline void for_each_split(const Graph& g, int z, const Fn& fn) {
  Vset nbhd = g.neighbors(z);
  if (popcount(nbhd) < 2) return;
  Vset anchor = vbit(lowest_bit(nbhd));
  for (Vset p1 = (nbhd - 1) & nbhd; p1; p1 = (p1 - 1) & nbhd) {
    if (!(p1 & anchor)) continue;
    fn(SplitSpec{z, p1, nbhd & ~p1});
  }
}

inline std::set<std::pair<int, int>> spar_set(const Graph& g) {
  std::set<std::pair<int, int>> out;
  for (const Kite& k : find_kites(g)) out.insert(k.spar);
  return out;
}

// Degree-1 split ends of s whose host edge lies in `edges`.
inline bool singleton_end_on(const Graph& g, const SplitSpec& s,
                             const std::set<std::pair<int, int>>& edges) {
  for (Vset part : {s.part1, s.part2})
    if (popcount(part) == 1 && edges.count(norm_edge(s.z, lowest_bit(part)))) return true;
  return false;
}

// Chordless cycles in the subgraph induced by the degree-3 vertices,
// returned as host-labelled vertex sequences in traversal order.  A subset
// whose induced degrees are all two and which is connected is exactly one
// chordless cycle, so subset scanning both finds and certifies them.
inline std::vector<std::vector<int>> induced_d3_cycles(const Graph& g) {
  Degree3Subgraph low = degree3_subgraph(g);
  const Graph& h = low.d3;
  int hn = h.n();
  std::vector<std::vector<int>> out;
  if (hn < 3) return out;
  if (hn > 20) throw capability_error("degree-3 cycle scan handles at most 20 low vertices");
  Vset all = (Vset{1} << hn) - 1;
  for (Vset s = 1; s <= all; ++s) {
    if (popcount(s) < 3) continue;
    bool two_regular = true;
    for (Vset t = s; t; t &= t - 1)
      if (popcount(h.neighbors(lowest_bit(t)) & s) != 2) {
        two_regular = false;
        break;
      }
    if (!two_regular) continue;
    int start = lowest_bit(s);
    Vset seen = vbit(start);
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (true) {
      Vset nb = h.neighbors(cur) & s;
      if (prev >= 0) nb &= ~vbit(prev);
      int nxt = lowest_bit(nb & ~seen ? nb & ~seen : nb);
      if (nxt == start) break;
      order.push_back(nxt);
      seen |= vbit(nxt);
      prev = cur;
      cur = nxt;
    }
    if (static_cast<int>(order.size()) != popcount(s)) continue;  // disconnected union
    for (int& v : order) v = low.to_host[static_cast<std::size_t>(v)];
    out.push_back(std::move(order));
  }
  return out;
}

// --- universes ------------------------------------------------------------

inline std::vector<Graph> family_graphs(Family fam, int max_n) {
  std::vector<Graph> out;
  for (const FamilyMember& m : generate_family(fam, max_n).members) out.push_back(m.g);
  return out;
}

inline std::vector<Graph> ore4_with_packing(int max_n, int t3) {
  std::vector<Graph> out;
  for (Graph& g : family_graphs(Family::Ore4, max_n))
    if (packing_number(g, 3) == t3) out.push_back(std::move(g));
  return out;
}

// Composition pool: the 4-Ore members up to the cap plus the two named
// 4-critical non-members W5 and T8.
inline std::vector<Graph> composition_pool(int pool_max_n) {
  std::vector<Graph> pool = family_graphs(Family::Ore4, pool_max_n);
  if (pool_max_n >= 6) pool.push_back(catalog(NamedGraph::W5));
  if (pool_max_n >= 8) pool.push_back(catalog(NamedGraph::T8));
  return pool;
}

inline std::string pool_universe(int pool_max_n) {
  return "ordered pairs over kOre(4) <= " + std::to_string(pool_max_n) +
         " with W5 and T8, every edge x every split";
}

// Every composition instance of the ordered pair (h1, h2): each edge of h1,
// each vertex of h2, each unordered neighbourhood bipartition.
template <class Fn>
inline void for_each_composition(const Graph& h1, const Graph& h2, const Fn& fn) {
  for (auto [x, y] : h1.edges())
    for (int z = 0; z < h2.n(); ++z)
      for_each_split(h2, z, [&](const SplitSpec& s) { fn(x, y, s); });
}

}  // namespace detail

// --- exhaustive 4-critical corpora ----------------------------------------

namespace detail {

inline std::optional<std::filesystem::path> cache_root() {
  const char* env = std::getenv("CRITLAB_CACHE");
  if (!env || !*env) return std::nullopt;
  return std::filesystem::path(env);
}

// "3-colourable or 4-critical" is closed under vertex deletion (a 4-critical
// graph minus any vertex is 3-colourable), so the enumeration can prune
// non-critical 4-chromatic graphs as soon as they appear.
inline std::vector<Graph> compute_critical_order(int n) {
  std::vector<Graph> out;
  if (n < 4) return out;
  GraphFilter keep = [](const Graph& g) {
    return colorable(g, 3) || is_k_critical(g, 4).is_critical;
  };
  enumerate_graphs(
      n, keep,
      [&](const Graph& g) {
        if (!colorable(g, 3)) out.push_back(g);
      },
      {.hereditary = true});
  return out;
}

inline std::vector<Graph> compute_triangle_free_critical_order(int n) {
  std::vector<Graph> out;
  if (n < 4) return out;
  GraphFilter keep = [](const Graph& g) { return !has_triangle(g); };
  enumerate_graphs(
      n, keep,
      [&](const Graph& g) {
        if (is_k_critical(g, 4).is_critical) out.push_back(g);
      },
      {.hereditary = true});
  return out;
}

// Memoized per order, with an optional disk layer under $CRITLAB_CACHE.
// Cached members are re-verified on load; a stale or tampered file is
// recomputed, never trusted.
inline const std::vector<Graph>& order_cache(const std::string& tag, int n,
                                             const std::function<std::vector<Graph>(int)>& compute,
                                             const std::function<bool(const Graph&)>& admit) {
  static std::map<std::pair<std::string, int>, std::vector<Graph>> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(tag, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  std::vector<Graph> got;
  bool loaded = false;
  std::filesystem::path file;
  auto root = cache_root();
  if (root) {
    file = *root / (tag + "-" + std::to_string(n) + ".g6");
    std::ifstream in(file);
    if (in) {
      try {
        std::vector<Graph> cached = read_graph6_lines(in);
        loaded = true;
        for (const Graph& g : cached)
          if (g.n() != n || !admit(g)) {
            loaded = false;
            break;
          }
        if (loaded) got = std::move(cached);
      } catch (const parse_error&) {
        loaded = false;
      }
    }
  }
  if (!loaded) {
    got = compute(n);
    if (root) {
      std::error_code ec;
      std::filesystem::create_directories(*root, ec);
      if (!ec) {
        std::ofstream outf(file);
        if (outf) write_graph6_lines(outf, got);
      }
    }
  }
  return memo.emplace(key, std::move(got)).first->second;
}

inline const std::vector<Graph>& critical_order(int n) {
  return order_cache(
      "critical", n, compute_critical_order,
      [](const Graph& g) { return is_k_critical(g, 4).is_critical; });
}

inline const std::vector<Graph>& triangle_free_critical_order(int n) {
  return order_cache(
      "tf-critical", n, compute_triangle_free_critical_order,
      [](const Graph& g) { return !has_triangle(g) && is_k_critical(g, 4).is_critical; });
}

}  // namespace detail

inline std::vector<Graph> critical_graphs_upto(int max_n) {
  if (max_n > 10) throw capability_error("exhaustive 4-critical enumeration stops at n = 10");
  std::vector<Graph> out;
  for (int n = 4; n <= max_n; ++n) {
    const auto& level = detail::critical_order(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline std::map<int, long> critical_counts_by_order(int max_n) {
  if (max_n > 10) throw capability_error("exhaustive 4-critical enumeration stops at n = 10");
  std::map<int, long> out;
  for (int n = 4; n <= max_n; ++n)
    out[n] = static_cast<long>(detail::critical_order(n).size());
  return out;
}

inline Corpus critical_corpus(int max_n) {
  Corpus c;
  c.name = "4-critical, n <= " + std::to_string(max_n);
  c.graphs = critical_graphs_upto(max_n);
  c.provenance = "generated: exhaustive isomorph-free enumeration";
  return c;
}

inline Corpus triangle_free_critical_corpus(int max_n) {
  if (max_n > 10) throw capability_error("exhaustive 4-critical enumeration stops at n = 10");
  Corpus c;
  c.name = "triangle-free 4-critical, n <= " + std::to_string(max_n);
  c.provenance = "generated: exhaustive isomorph-free enumeration";
  for (int n = 4; n <= max_n; ++n) {
    const auto& level = detail::triangle_free_critical_order(n);
    c.graphs.insert(c.graphs.end(), level.begin(), level.end());
  }
  return c;
}

inline Corpus load_corpus(std::istream& in, const std::string& name) {
  Corpus c;
  c.name = name;
  c.graphs = read_graph6_lines(in);
  c.provenance = "external: " + name;
  return c;
}

// --- the lemma sweeps -------------------------------------------------------

namespace detail {

// Every member minus any vertex keeps a triangle.
inline LemmaVerdict lemma_deletingavertex(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "deletingavertex";
  Clamped b = clamp_budget(o.ore_max_n, kFamilyBudget);
  v.universe = "kOre(4) <= " + std::to_string(b.used) + ", every vertex";
  note_clamp(v, b, "4-Ore budget");
  std::vector<Graph> members = family_graphs(Family::Ore4, b.used);
  fold(v, sweep(members.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const Graph& g = members[i];
         for (int x = 0; x < g.n(); ++x) {
           ++s.checked;
           if (s.failed) continue;
           if (!has_triangle(g.without_vertex(x))) {
             nlohmann::json w = graph_witness(g);
             w["vertex"] = x;
             s.fail(std::move(w));
           }
         }
       }));
  return v;
}

// Every member other than K4, minus any triangle, keeps a triangle.
inline LemmaVerdict lemma_deletingaclique(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "deletingaclique";
  Clamped b = clamp_budget(o.ore_max_n, kFamilyBudget);
  v.universe = "kOre(4) <= " + std::to_string(b.used) + " except K4, every triangle";
  note_clamp(v, b, "4-Ore budget");
  std::vector<Graph> members = family_graphs(Family::Ore4, b.used);
  std::erase_if(members, [](const Graph& g) { return g.n() == 4; });
  fold(v, sweep(members.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const Graph& g = members[i];
         for (Vset tri : cliques_of_size(g, 3)) {
           ++s.checked;
           if (s.failed) continue;
           if (!has_triangle(g.without_vertices(tri))) {
             nlohmann::json w = graph_witness(g);
             w["triangle"] = set_to_list(tri);
             s.fail(std::move(w));
           }
         }
       }));
  return v;
}

// T(result) >= T(h1) + T(h2) - f over every composition of pool pairs.
inline LemmaVerdict lemma_cliqueboundinequality(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "cliqueboundinequality";
  Clamped b = clamp_budget(o.pool_max_n, kFamilyBudget);
  v.universe = pool_universe(b.used);
  note_clamp(v, b, "composition pool");
  std::vector<Graph> pool = composition_pool(b.used);
  std::vector<int> t3(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) t3[i] = packing_number(pool[i], 3);
  std::size_t pairs = pool.size() * pool.size();
  fold(v, sweep(pairs, o.jobs, [&](std::size_t pr, SweepSlot& s) {
         const Graph& h1 = pool[pr / pool.size()];
         const Graph& h2 = pool[pr % pool.size()];
         int t1 = t3[pr / pool.size()], t2 = t3[pr % pool.size()];
         std::vector<bool> forced_z(static_cast<std::size_t>(h2.n()));
         for (int z = 0; z < h2.n(); ++z)
           forced_z[static_cast<std::size_t>(z)] = every_packing_uses_vertex(h2, 3, z);
         for (auto [x, y] : h1.edges()) {
           int f1 = every_packing_uses_edge(h1, 3, {x, y}) ? 1 : 0;
           for (int z = 0; z < h2.n(); ++z) {
             int f = f1 + (forced_z[static_cast<std::size_t>(z)] ? 1 : 0);
             for_each_split(h2, z, [&](const SplitSpec& sp) {
               ++s.checked;
               if (s.failed) return;
               OreComposition comp = ore_compose(h1, x, y, h2, sp);
               int got = packing_number(comp.result, 3);
               if (got < t1 + t2 - f) {
                 nlohmann::json w{{"edge_side", to_graph6(h1)},
                                  {"split_side", to_graph6(h2)},
                                  {"edge", {x, y}},
                                  {"split", split_json(sp)},
                                  {"t1", t1},
                                  {"t2", t2},
                                  {"f", f},
                                  {"packing", got}};
                 s.fail(std::move(w));
               }
             });
           }
         }
       }));
  return v;
}

// Composing with K4 on either side never lowers the packing number below
// the other side's.
inline LemmaVerdict lemma_kkbound(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "kkbound";
  Clamped b = clamp_budget(o.pool_max_n, kFamilyBudget);
  v.universe = "compositions of pool members with K4, both sides, every edge x every split";
  note_clamp(v, b, "composition pool");
  std::vector<Graph> pool = composition_pool(b.used);
  Graph k4 = catalog(NamedGraph::K4);
  fold(v, sweep(pool.size() * 2, o.jobs, [&](std::size_t idx, SweepSlot& s) {
         const Graph& h = pool[idx / 2];
         bool k4_on_edge_side = (idx % 2) != 0;
         const Graph& h1 = k4_on_edge_side ? k4 : h;
         const Graph& h2 = k4_on_edge_side ? h : k4;
         int want = packing_number(h, 3);
         for_each_composition(h1, h2, [&](int x, int y, const SplitSpec& sp) {
           ++s.checked;
           if (s.failed) return;
           OreComposition comp = ore_compose(h1, x, y, h2, sp);
           int got = packing_number(comp.result, 3);
           if (got < want) {
             nlohmann::json w{{"edge_side", to_graph6(h1)}, {"split_side", to_graph6(h2)},
                              {"edge", {x, y}},             {"split", split_json(sp)},
                              {"packing", got},             {"bound", want}};
             s.fail(std::move(w));
           }
         });
       }));
  return v;
}

// K4 is the only member whose packing number is 1.
inline LemmaVerdict lemma_onecliquecharacterization(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "onecliquecharacterization";
  Clamped b = clamp_budget(o.ore_max_n, kFamilyBudget);
  v.universe = "kOre(4) <= " + std::to_string(b.used);
  note_clamp(v, b, "4-Ore budget");
  std::vector<Graph> members = family_graphs(Family::Ore4, b.used);
  fold(v, sweep(members.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const Graph& g = members[i];
         ++s.checked;
         int t = packing_number(g, 3);
         if ((t == 1) != (g.n() == 4)) {
           nlohmann::json w = graph_witness(g);
           w["packing"] = t;
           s.fail(std::move(w));
         }
       }));
  return v;
}

// Members with packing number 2 carry two edge-disjoint kites sharing at
// most one vertex, and two fully vertex-disjoint ones unless the graph is
// the Moser spindle.
inline LemmaVerdict lemma_K4e(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "K4e";
  Clamped b = clamp_budget(o.ore_max_n, kFamilyBudget);
  v.universe = "kOre(4) <= " + std::to_string(b.used) + ", packing number 2";
  note_clamp(v, b, "4-Ore budget");
  std::vector<Graph> members = ore4_with_packing(b.used, 2);
  Graph spindle = catalog(NamedGraph::MoserSpindle);
  fold(v, sweep(members.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const Graph& g = members[i];
         ++s.checked;
         std::vector<Kite> kites = find_kites(g);
         bool edge_disjoint_share_le1 = false, vertex_disjoint = false;
         for (std::size_t a = 0; a < kites.size(); ++a)
           for (std::size_t c = a + 1; c < kites.size(); ++c) {
             Vset shared = kites[a].vertex_set() & kites[c].vertex_set();
             if (popcount(shared) <= 1) {
               std::vector<std::pair<int, int>> ea = kites[a].edge_set();
               std::vector<std::pair<int, int>> ec = kites[c].edge_set();
               bool common = false;
               for (const auto& e : ea)
                 common = common || std::find(ec.begin(), ec.end(), e) != ec.end();
               if (!common) edge_disjoint_share_le1 = true;
             }
             if (!shared) vertex_disjoint = true;
           }
         bool need_vertex_disjoint = !isomorphic(g, spindle);
         if (!edge_disjoint_share_le1 || (need_vertex_disjoint && !vertex_disjoint)) {
           nlohmann::json w = graph_witness(g);
           w["kites"] = kites.size();
           s.fail(std::move(w));
         }
       }));
  return v;
}

// Splitting any vertex of a packing-number-2 member leaves packing number
// at least 2, unless the vertex has degree 3 and a degree-1 split end lies
// on the spar of a kite.
inline LemmaVerdict lemma_splittinglemma(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "splittinglemma";
  Clamped b = clamp_budget(o.ore_max_n, kFamilyBudget);
  v.universe =
      "kOre(4) <= " + std::to_string(b.used) + ", packing number 2, every vertex x every split";
  note_clamp(v, b, "4-Ore budget");
  std::vector<Graph> members = ore4_with_packing(b.used, 2);
  fold(v, sweep(members.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const Graph& g = members[i];
         std::set<std::pair<int, int>> spars = spar_set(g);
         for (int z = 0; z < g.n(); ++z)
           for_each_split(g, z, [&](const SplitSpec& sp) {
             ++s.checked;
             if (s.failed) return;
             Graph gv = split_vertex(g, sp);
             if (packing_number(gv, 3) >= 2) return;
             if (g.degree(z) == 3 && singleton_end_on(g, sp, spars)) return;
             nlohmann::json w = graph_witness(g);
             w["split"] = split_json(sp);
             s.fail(std::move(w));
           });
       }));
  return v;
}

// Deleting any triangle from a packing-number-3 member leaves packing
// number at least 2 or a kite.
inline LemmaVerdict lemma_deletingatriangle(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "deletingatriangle";
  Clamped b = clamp_budget(o.ore_max_n, kFamilyBudget);
  v.universe = "kOre(4) <= " + std::to_string(b.used) + ", packing number 3, every triangle";
  note_clamp(v, b, "4-Ore budget");
  std::vector<Graph> members = ore4_with_packing(b.used, 3);
  fold(v, sweep(members.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const Graph& g = members[i];
         for (Vset tri : cliques_of_size(g, 3)) {
           ++s.checked;
           if (s.failed) continue;
           Graph rest = g.without_vertices(tri);
           if (packing_number(rest, 3) < 2 && !has_kite(rest)) {
             nlohmann::json w = graph_witness(g);
             w["triangle"] = set_to_list(tri);
             s.fail(std::move(w));
           }
         }
       }));
  return v;
}

// Packing-number-3 members carry at most one foundational edge, and an
// existing one is the spar of a kite.
inline LemmaVerdict lemma_foundational4Ore(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "foundational4Ore";
  Clamped b = clamp_budget(o.ore_max_n, kFamilyBudget);
  v.universe = "kOre(4) <= " + std::to_string(b.used) + ", packing number 3";
  note_clamp(v, b, "4-Ore budget");
  std::vector<Graph> members = ore4_with_packing(b.used, 3);
  fold(v, sweep(members.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const Graph& g = members[i];
         ++s.checked;
         std::vector<std::pair<int, int>> fe = foundational_edges(g, FoundationalRegime::Ore4);
         bool ok = fe.size() <= 1 &&
                   (fe.empty() || spar_set(g).count(norm_edge(fe[0].first, fe[0].second)) > 0);
         if (!ok) {
           nlohmann::json w = graph_witness(g);
           w["foundational"] = fe;
           s.fail(std::move(w));
         }
       }));
  return v;
}

// Splitting any vertex of a packing-number-3 member leaves packing number
// at least 3, or a kite, or a degree-1 split end on a foundational edge.
inline LemmaVerdict lemma_split3triangle(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "split3triangle";
  Clamped b = clamp_budget(o.ore_max_n, kFamilyBudget);
  v.universe =
      "kOre(4) <= " + std::to_string(b.used) + ", packing number 3, every vertex x every split";
  note_clamp(v, b, "4-Ore budget");
  std::vector<Graph> members = ore4_with_packing(b.used, 3);
  fold(v, sweep(members.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const Graph& g = members[i];
         std::set<std::pair<int, int>> fe;
         for (auto [u, w] : foundational_edges(g, FoundationalRegime::Ore4))
           fe.insert(norm_edge(u, w));
         for (int z = 0; z < g.n(); ++z)
           for_each_split(g, z, [&](const SplitSpec& sp) {
             ++s.checked;
             if (s.failed) return;
             Graph gv = split_vertex(g, sp);
             if (packing_number(gv, 3) >= 3) return;
             if (has_kite(gv)) return;
             if (singleton_end_on(g, sp, fe)) return;
             nlohmann::json w = graph_witness(g);
             w["split"] = split_json(sp);
             s.fail(std::move(w));
           });
       }));
  return v;
}

// v, e, KY arithmetic of the composition over every pool-pair instance.
inline LemmaVerdict lemma_oreArithmetic(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "oreArithmetic";
  Clamped b = clamp_budget(o.pool_max_n, kFamilyBudget);
  v.universe = pool_universe(b.used);
  note_clamp(v, b, "composition pool");
  std::vector<Graph> pool = composition_pool(b.used);
  std::size_t pairs = pool.size() * pool.size();
  fold(v, sweep(pairs, o.jobs, [&](std::size_t pr, SweepSlot& s) {
         const Graph& h1 = pool[pr / pool.size()];
         const Graph& h2 = pool[pr % pool.size()];
         for_each_composition(h1, h2, [&](int x, int y, const SplitSpec& sp) {
           ++s.checked;
           if (s.failed) return;
           OreComposition comp = ore_compose(h1, x, y, h2, sp);
           bool ok = comp.result.n() == h1.n() + h2.n() - 1 &&
                     comp.result.m() == h1.m() + h2.m() - 1 &&
                     ky_potential(comp.result) == ky_potential(h1) + ky_potential(h2) - 2;
           if (!ok) {
             nlohmann::json w{{"edge_side", to_graph6(h1)},
                              {"split_side", to_graph6(h2)},
                              {"edge", {x, y}},
                              {"split", split_json(sp)},
                              {"v", comp.result.n()},
                              {"e", comp.result.m()},
                              {"ky", ky_potential(comp.result)}};
             s.fail(std::move(w));
           }
         });
       }));
  return v;
}

// Class-B members have KY = 1 and potential -1.
inline LemmaVerdict lemma_kyClassB(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "kyClassB";
  Clamped b = clamp_budget(o.classb_max_n, kFamilyBudget);
  v.universe = "ClassB <= " + std::to_string(b.used);
  note_clamp(v, b, "class-B budget");
  std::vector<Graph> members = family_graphs(Family::ClassB, b.used);
  fold(v, sweep(members.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const Graph& g = members[i];
         ++s.checked;
         if (ky_potential(g) != 1 || potential(g) != -1) {
           nlohmann::json w = graph_witness(g);
           w["ky"] = ky_potential(g);
           w["p"] = potential(g);
           s.fail(std::move(w));
         }
       }));
  return v;
}

// Class-B members have at most one foundational edge; T8 has exactly one
// (its catalog labelling pins it to the edge 0-1); elsewhere it is the spar
// of a kite.
inline LemmaVerdict lemma_foundationalB(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "foundationalB";
  Clamped b = clamp_budget(o.classb_max_n, kFamilyBudget);
  v.universe = "ClassB <= " + std::to_string(b.used) + ", plus the catalog T8 pin";
  note_clamp(v, b, "class-B budget");
  std::vector<Graph> members = family_graphs(Family::ClassB, b.used);
  Graph t8 = catalog(NamedGraph::T8);
  fold(v, sweep(members.size() + 1, o.jobs, [&](std::size_t i, SweepSlot& s) {
         if (i == members.size()) {
           // catalog-label pin: T8's unique foundational edge is 0-1
           ++s.checked;
           auto fe = foundational_edges(t8, FoundationalRegime::ClassB);
           if (fe != std::vector<std::pair<int, int>>{{0, 1}}) {
             nlohmann::json w = graph_witness(t8);
             w["foundational"] = fe;
             s.fail(std::move(w));
           }
           return;
         }
         const Graph& g = members[i];
         ++s.checked;
         auto fe = foundational_edges(g, FoundationalRegime::ClassB);
         bool is_t8 = isomorphic(g, t8);
         bool ok = fe.size() <= 1 && (!is_t8 || fe.size() == 1);
         if (ok && fe.size() == 1 && !is_t8)
           ok = spar_set(g).count(norm_edge(fe[0].first, fe[0].second)) > 0;
         if (!ok) {
           nlohmann::json w = graph_witness(g);
           w["foundational"] = fe;
           s.fail(std::move(w));
         }
       }));
  return v;
}

// Splitting any vertex of a class-B member leaves packing number at least
// 2, or a K4-minus-an-edge subgraph, or a degree-1 split end on a
// foundational edge.
inline LemmaVerdict lemma_t8splits(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "t8splits";
  Clamped b = clamp_budget(o.classb_max_n, kFamilyBudget);
  v.universe = "ClassB <= " + std::to_string(b.used) + ", every vertex x every split";
  note_clamp(v, b, "class-B budget");
  std::vector<Graph> members = family_graphs(Family::ClassB, b.used);
  fold(v, sweep(members.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const Graph& g = members[i];
         std::set<std::pair<int, int>> fe;
         for (auto [u, w] : foundational_edges(g, FoundationalRegime::ClassB))
           fe.insert(norm_edge(u, w));
         for (int z = 0; z < g.n(); ++z)
           for_each_split(g, z, [&](const SplitSpec& sp) {
             ++s.checked;
             if (s.failed) return;
             Graph gv = split_vertex(g, sp);
             if (packing_number(gv, 3) >= 2) return;
             if (has_k4_minus_e(gv)) return;
             if (singleton_end_on(g, sp, fe)) return;
             nlohmann::json w = graph_witness(g);
             w["split"] = split_json(sp);
             s.fail(std::move(w));
           });
       }));
  return v;
}

// --- sampled quotient/extension sweeps ------------------------------------

struct QuotientDraw {
  std::size_t graph_index;
  Vset F;
  Coloring f;
};

// Deterministic sample stream shared by the three quotient lemmas: a pool
// graph, a proper nonempty vertex subset, and a proper colouring of the
// induced subgraph lifted back to host labels.
inline std::vector<QuotientDraw> quotient_draws(const std::vector<Graph>& pool, long samples,
                                                std::uint64_t seed) {
  std::vector<QuotientDraw> out;
  std::mt19937_64 rng(seed);
  while (static_cast<long>(out.size()) < samples) {
    std::size_t gi = static_cast<std::size_t>(rng() % pool.size());
    const Graph& g = pool[gi];
    Vset full = g.vertices();
    Vset F = (rng() % (full - 1)) + 1;  // nonempty proper subset
    std::optional<Coloring> sub = find_coloring(g.induced(F), 3);
    if (!sub) continue;  // proper subgraphs of 4-critical graphs are 3-colourable
    Coloring f(static_cast<std::size_t>(g.n()), -1);
    int rank = 0;
    for (int x = 0; x < g.n(); ++x)
      if (F & vbit(x)) f[static_cast<std::size_t>(x)] = (*sub)[static_cast<std::size_t>(rank++)];
    out.push_back({gi, F, std::move(f)});
  }
  return out;
}

inline nlohmann::json draw_witness(const Graph& g, const QuotientDraw& d) {
  nlohmann::json w = graph_witness(g);
  w["F"] = set_to_list(d.F);
  nlohmann::json colours = nlohmann::json::object();
  for (int x = 0; x < g.n(); ++x)
    if (d.F & vbit(x)) colours[std::to_string(x)] = d.f[static_cast<std::size_t>(x)];
  w["f"] = colours;
  return w;
}

inline std::string sample_universe(const VerifyOptions& o, int pool_cap) {
  return std::to_string(o.samples) + " seeded draws over kOre(4) <= " +
         std::to_string(pool_cap) + " with W5 and T8, seed " + std::to_string(o.seed);
}

// The quotient admits the identity-on-outside homomorphism, and quotients
// of non-3-colourable hosts stay non-3-colourable.
inline LemmaVerdict lemma_easyhom(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "easyhom";
  Clamped b = clamp_budget(o.pool_max_n, kFamilyBudget);
  v.universe = sample_universe(o, b.used);
  note_clamp(v, b, "composition pool");
  std::vector<Graph> pool = composition_pool(b.used);
  std::vector<QuotientDraw> draws = quotient_draws(pool, o.samples, o.seed);
  fold(v, sweep(draws.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const QuotientDraw& d = draws[i];
         const Graph& g = pool[d.graph_index];
         ++s.checked;
         QuotientResult q = quotient(g, d.F, d.f);
         if (!quotient_homomorphism_ok(g, d.F, d.f, q) || colorable(q.quotient, 3))
           s.fail(draw_witness(g, d));
       }));
  return v;
}

// Counting identities of the extension built from each draw.
inline LemmaVerdict lemma_counting(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "counting";
  Clamped b = clamp_budget(o.pool_max_n, kFamilyBudget);
  v.universe = sample_universe(o, b.used);
  note_clamp(v, b, "composition pool");
  std::vector<Graph> pool = composition_pool(b.used);
  std::vector<QuotientDraw> draws = quotient_draws(pool, o.samples, o.seed);
  fold(v, sweep(draws.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const QuotientDraw& d = draws[i];
         const Graph& g = pool[d.graph_index];
         ++s.checked;
         std::optional<ExtensionTriple> ext = find_extension(g, d.F, d.f);
         if (!ext) {
           s.fail(draw_witness(g, d));  // quotient of a 4-critical host cannot be 3-colourable
           return;
         }
         PotentialExtensionReport r = check_potential_extension(*ext);
         if (!(r.counting_v && r.counting_e && r.counting_t)) {
           nlohmann::json w = draw_witness(g, d);
           w["counting_v"] = r.counting_v;
           w["counting_e"] = r.counting_e;
           w["counting_t"] = r.counting_t;
           s.fail(std::move(w));
         }
       }));
  return v;
}

// Both potential-extension inequalities (and their packing-split
// ingredient) on the same extension stream.
inline LemmaVerdict lemma_potentialExtension(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "potentialExtension";
  Clamped b = clamp_budget(o.pool_max_n, kFamilyBudget);
  v.universe = sample_universe(o, b.used);
  note_clamp(v, b, "composition pool");
  std::vector<Graph> pool = composition_pool(b.used);
  std::vector<QuotientDraw> draws = quotient_draws(pool, o.samples, o.seed);
  fold(v, sweep(draws.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const QuotientDraw& d = draws[i];
         const Graph& g = pool[d.graph_index];
         ++s.checked;
         std::optional<ExtensionTriple> ext = find_extension(g, d.F, d.f);
         if (!ext) {
           s.fail(draw_witness(g, d));
           return;
         }
         PotentialExtensionReport r = check_potential_extension(*ext);
         if (!r.pass()) {
           nlohmann::json w = draw_witness(g, d);
           w["slack_t"] = r.slack_t;
           w["slack_v"] = r.slack_v;
           w["packing_split"] = r.packing_split;
           s.fail(std::move(w));
         }
       }));
  return v;
}

// Chordless cycles of degree-3 vertices: odd length, independent
// neighbourhood, and every 3-colouring of the rest is monochromatic on it.
inline LemmaVerdict lemma_gallaiCycle(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "gallaiCycle";
  Clamped bc = clamp_budget(o.critical_max_n, 10);
  Clamped bo = clamp_budget(o.ore_max_n, kFamilyBudget);
  Clamped bb = clamp_budget(o.classb_max_n, kFamilyBudget);
  v.universe = "4-critical <= " + std::to_string(bc.used) + " union kOre(4) <= " +
               std::to_string(bo.used) + " union ClassB <= " + std::to_string(bb.used) +
               ", every chordless degree-3 cycle";
  note_clamp(v, bc, "4-critical enumeration");
  note_clamp(v, bo, "4-Ore budget");
  note_clamp(v, bb, "class-B budget");

  std::vector<Graph> universe = critical_graphs_upto(bc.used);
  std::set<std::string> seen;
  for (const Graph& g : universe) seen.insert(to_graph6(canonical_graph(g)));
  for (Family fam : {Family::Ore4, Family::ClassB})
    for (Graph& g : family_graphs(fam, fam == Family::Ore4 ? bo.used : bb.used))
      if (seen.insert(to_graph6(canonical_graph(g))).second) universe.push_back(std::move(g));

  fold(v, sweep(universe.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const Graph& g = universe[i];
         for (const std::vector<int>& cycle : induced_d3_cycles(g)) {
           ++s.checked;
           if (s.failed) continue;
           if (!gallai_cycle_check(g, cycle).pass()) {
             nlohmann::json w = graph_witness(g);
             w["cycle"] = cycle;
             s.fail(std::move(w));
           }
         }
       }));
  v.note = (v.note.empty() ? "" : v.note + "; ") + std::to_string(universe.size()) +
           " graphs scanned";
  return v;
}

// --- documented mutations ---------------------------------------------------
//
// Deliberately falsified statements.  Each must FAIL with a witness; they
// prove the harness can detect a broken lemma rather than rubber-stamping.

// K4e with the Moser-spindle exemption removed: claims every packing-
// number-2 member has two fully vertex-disjoint kites.  The spindle's two
// kites share its degree-4 vertex.
inline LemmaVerdict mutation_K4e_vertex_disjoint(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "mutK4eVertexDisjoint";
  Clamped b = clamp_budget(o.ore_max_n, kFamilyBudget);
  v.universe = "kOre(4) <= " + std::to_string(b.used) + ", packing number 2";
  note_clamp(v, b, "4-Ore budget");
  std::vector<Graph> members = ore4_with_packing(b.used, 2);
  fold(v, sweep(members.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const Graph& g = members[i];
         ++s.checked;
         std::vector<Kite> kites = find_kites(g);
         bool vertex_disjoint = false;
         for (std::size_t a = 0; a < kites.size(); ++a)
           for (std::size_t c = a + 1; c < kites.size(); ++c)
             if (!(kites[a].vertex_set() & kites[c].vertex_set())) vertex_disjoint = true;
         if (!vertex_disjoint) {
           nlohmann::json w = graph_witness(g);
           w["kites"] = kites.size();
           s.fail(std::move(w));
         }
       }));
  return v;
}

// foundationalB inverted: claims no class-B member has a foundational
// edge.  T8 has exactly one.
inline LemmaVerdict mutation_foundationalB_forbidden(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "mutFoundationalBForbidden";
  Clamped b = clamp_budget(o.classb_max_n, kFamilyBudget);
  v.universe = "ClassB <= " + std::to_string(b.used);
  note_clamp(v, b, "class-B budget");
  std::vector<Graph> members = family_graphs(Family::ClassB, b.used);
  fold(v, sweep(members.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const Graph& g = members[i];
         ++s.checked;
         auto fe = foundational_edges(g, FoundationalRegime::ClassB);
         if (!fe.empty()) {
           nlohmann::json w = graph_witness(g);
           w["foundational"] = fe;
           s.fail(std::move(w));
         }
       }));
  return v;
}

// splittinglemma with its escape clause deleted: claims every split of
// every vertex keeps packing number at least 2.  Splitting off a spar end
// of the spindle refutes it.
inline LemmaVerdict mutation_splitting_no_escape(const VerifyOptions& o) {
  LemmaVerdict v;
  v.lemma = "mutSplittingNoEscape";
  Clamped b = clamp_budget(o.ore_max_n, kFamilyBudget);
  v.universe =
      "kOre(4) <= " + std::to_string(b.used) + ", packing number 2, every vertex x every split";
  note_clamp(v, b, "4-Ore budget");
  std::vector<Graph> members = ore4_with_packing(b.used, 2);
  fold(v, sweep(members.size(), o.jobs, [&](std::size_t i, SweepSlot& s) {
         const Graph& g = members[i];
         for (int z = 0; z < g.n(); ++z)
           for_each_split(g, z, [&](const SplitSpec& sp) {
             ++s.checked;
             if (s.failed) return;
             if (packing_number(split_vertex(g, sp), 3) < 2) {
               nlohmann::json w = graph_witness(g);
               w["split"] = split_json(sp);
               s.fail(std::move(w));
             }
           });
       }));
  return v;
}

}  // namespace detail

// --- registry ---------------------------------------------------------------

inline constexpr std::array<const char*, 18> kLemmaIds = {
    "deletingavertex",   "deletingaclique", "cliqueboundinequality",
    "kkbound",           "onecliquecharacterization", "K4e",
    "splittinglemma",    "deletingatriangle", "foundational4Ore",
    "split3triangle",    "oreArithmetic",   "kyClassB",
    "foundationalB",     "t8splits",        "easyhom",
    "counting",          "potentialExtension", "gallaiCycle",
};
static_assert(kLemmaIds.size() == 18, "the lemma registry must stay complete");

inline constexpr std::array<const char*, 3> kMutationIds = {
    "mutK4eVertexDisjoint",
    "mutFoundationalBForbidden",
    "mutSplittingNoEscape",
};

inline std::vector<std::string> lemma_ids() {
  return std::vector<std::string>(kLemmaIds.begin(), kLemmaIds.end());
}

inline std::vector<std::string> mutation_ids() {
  return std::vector<std::string>(kMutationIds.begin(), kMutationIds.end());
}

inline LemmaVerdict verify_lemma(const std::string& id, const VerifyOptions& o = {}) {
  using Fn = LemmaVerdict (*)(const VerifyOptions&);
  static const std::map<std::string, Fn> table = {
      {"deletingavertex", detail::lemma_deletingavertex},
      {"deletingaclique", detail::lemma_deletingaclique},
      {"cliqueboundinequality", detail::lemma_cliqueboundinequality},
      {"kkbound", detail::lemma_kkbound},
      {"onecliquecharacterization", detail::lemma_onecliquecharacterization},
      {"K4e", detail::lemma_K4e},
      {"splittinglemma", detail::lemma_splittinglemma},
      {"deletingatriangle", detail::lemma_deletingatriangle},
      {"foundational4Ore", detail::lemma_foundational4Ore},
      {"split3triangle", detail::lemma_split3triangle},
      {"oreArithmetic", detail::lemma_oreArithmetic},
      {"kyClassB", detail::lemma_kyClassB},
      {"foundationalB", detail::lemma_foundationalB},
      {"t8splits", detail::lemma_t8splits},
      {"easyhom", detail::lemma_easyhom},
      {"counting", detail::lemma_counting},
      {"potentialExtension", detail::lemma_potentialExtension},
      {"gallaiCycle", detail::lemma_gallaiCycle},
      {"mutK4eVertexDisjoint", detail::mutation_K4e_vertex_disjoint},
      {"mutFoundationalBForbidden", detail::mutation_foundationalB_forbidden},
      {"mutSplittingNoEscape", detail::mutation_splitting_no_escape},
  };
  auto it = table.find(id);
  if (it == table.end()) throw argument_error("unknown lemma id: " + id);
  return it->second(o);
}

inline std::vector<LemmaVerdict> verify_all(const VerifyOptions& o = {}) {
  std::vector<LemmaVerdict> out;
  out.reserve(kLemmaIds.size());
  for (const char* id : kLemmaIds) out.push_back(verify_lemma(id, o));
  return out;
}

// --- corpus-level theorems --------------------------------------------------

// Every corpus member must be 4-critical and fall into a classification
// case whose potential matches: 1 for K4, 0 for packing-number-2 members of
// kOre(4), -1 for W5 / class B / packing-number-3 members, at most -2
// otherwise.
inline LemmaVerdict verify_main_theorem(const Corpus& corpus) {
  LemmaVerdict v;
  v.lemma = "maintheorem";
  v.universe = "corpus " + corpus.name + " (" + std::to_string(corpus.graphs.size()) + " graphs)";
  for (const Graph& g : corpus.graphs) {
    ++v.checked;
    if (!v.pass) continue;
    if (!is_k_critical(g, 4).is_critical) {
      v.pass = false;
      v.witness = detail::graph_witness(g);
      v.witness["reason"] = "corpus member is not 4-critical";
      continue;
    }
    Classification c = classify_critical(g);
    if (!c.consistent) {
      v.pass = false;
      v.witness = detail::graph_witness(g);
      v.witness["class"] = to_string(c.cls);
      v.witness["p"] = c.p;
      v.witness["t3"] = c.t3;
    }
  }
  return v;
}

// Triangle-free 4-critical members satisfy 3e >= 5v + 2; the conjectured
// 3e >= 5v + 5 is reported as informational.
inline LemmaVerdict verify_density(const Corpus& corpus) {
  LemmaVerdict v;
  v.lemma = "density";
  v.universe = "corpus " + corpus.name + " (" + std::to_string(corpus.graphs.size()) + " graphs)";
  long conjecture_holds = 0, conjecture_equality = 0;
  for (const Graph& g : corpus.graphs) {
    ++v.checked;
    if (!v.pass) continue;
    if (has_triangle(g)) {
      v.pass = false;
      v.witness = detail::graph_witness(g);
      v.witness["reason"] = "corpus member contains a triangle";
      continue;
    }
    if (!is_k_critical(g, 4).is_critical) {
      v.pass = false;
      v.witness = detail::graph_witness(g);
      v.witness["reason"] = "corpus member is not 4-critical";
      continue;
    }
    if (3 * g.m() < 5 * g.n() + 2) {
      v.pass = false;
      v.witness = detail::graph_witness(g);
      v.witness["v"] = g.n();
      v.witness["e"] = g.m();
      continue;
    }
    if (3 * g.m() >= 5 * g.n() + 5) {
      ++conjecture_holds;
      if (3 * g.m() == 5 * g.n() + 5) ++conjecture_equality;
    }
  }
  v.note = "conjecture 3e >= 5v+5: holds on " + std::to_string(conjecture_holds) + "/" +
           std::to_string(v.checked) + " members, equality on " +
           std::to_string(conjecture_equality);
  return v;
}

}  // namespace critlab

#endif  // CRITLAB_VERIFY_HPP
