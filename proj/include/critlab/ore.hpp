#ifndef CRITLAB_ORE_HPP
#define CRITLAB_ORE_HPP

// Ore composition and vertex splitting, generation of the 4-Ore family and
// the class-B family (closure of T8 under composition with 4-Ore graphs,
// keeping triangle packing number 2), recognition by recursive 2-cut
// decomposition, foundational edges, and the packing correction term.

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "canonical.hpp"
#include "catalog.hpp"
#include "cliques.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph6.hpp"

namespace critlab {

// A split of vertex z: z1 keeps index z and the part1 neighbours, z2 is
// appended as a new vertex owning the part2 neighbours.  Both parts must be
// nonempty, disjoint, and together cover N(z).
struct SplitSpec {
  int z = -1;
  Vset part1 = 0;
  Vset part2 = 0;

  bool operator==(const SplitSpec&) const = default;
};

inline void validate_split(const Graph& g, const SplitSpec& s) {
  if (s.z < 0 || s.z >= g.n()) throw argument_error("split vertex out of range");
  if (!s.part1 || !s.part2) throw argument_error("both split parts must be nonempty");
  if (s.part1 & s.part2) throw argument_error("split parts overlap");
  if ((s.part1 | s.part2) != g.neighbors(s.z))
    throw argument_error("split parts must cover the neighbourhood exactly");
}

inline Graph split_vertex(const Graph& g, const SplitSpec& s) {
  validate_split(g, s);
  Graph out(g.n() + 1);
  for (auto [u, v] : g.edges()) {
    if (u == s.z || v == s.z) {
      int w = (u == s.z) ? v : u;
      out.add_edge((s.part2 & vbit(w)) ? g.n() : s.z, w);
    } else {
      out.add_edge(u, v);
    }
  }
  return out;
}

// Result of composing h1 (edge side, edge xy deleted) with h2 (split side,
// z split per `split`).  Vertices of h1 keep their labels; vertices of h2
// other than z are appended in ascending order.  x absorbs the part1 edges
// and y the part2 edges.
struct OreComposition {
  Graph edge_side;
  std::pair<int, int> deleted_edge;
  Graph split_side;
  SplitSpec split;
  Graph result;
  std::vector<int> split_map;  // h2 vertex -> result vertex, z -> -1
};

inline OreComposition ore_compose(const Graph& h1, int x, int y, const Graph& h2,
                                  const SplitSpec& s) {
  if (!h1.has_edge(x, y)) throw argument_error("edge side must contain the deleted edge");
  validate_split(h2, s);
  std::vector<int> map2(h2.n(), -1);
  int next = h1.n();
  for (int v = 0; v < h2.n(); ++v)
    if (v != s.z) map2[v] = next++;

  Graph out(h1.n() + h2.n() - 1);
  for (auto [u, v] : h1.edges())
    if (!((u == x && v == y) || (u == y && v == x))) out.add_edge(u, v);
  for (auto [u, v] : h2.edges()) {
    if (u == s.z || v == s.z) {
      int w = (u == s.z) ? v : u;
      out.add_edge((s.part1 & vbit(w)) ? x : y, map2[w]);
    } else {
      out.add_edge(map2[u], map2[v]);
    }
  }
  return OreComposition{h1, {x, y}, h2, s, std::move(out), std::move(map2)};
}

// Every composition of h1 and h2 over all edges, split vertices, and
// neighbourhood bipartitions, one representative per isomorphism class of
// the result, ordered by canonical form.
inline std::vector<OreComposition> enumerate_compositions(const Graph& h1, const Graph& h2) {
  std::vector<std::pair<std::string, OreComposition>> keyed;
  std::set<std::string> seen;
  for (auto [x, y] : h1.edges()) {
    for (int z = 0; z < h2.n(); ++z) {
      Vset nz = h2.neighbors(z);
      if (popcount(nz) < 2) continue;
      for (Vset p1 = (nz - 1) & nz; p1; p1 = (p1 - 1) & nz) {
        OreComposition comp = ore_compose(h1, x, y, h2, {z, p1, nz ^ p1});
        std::string key = canonical_form(comp.result).bytes;
        if (seen.insert(key).second) keyed.emplace_back(std::move(key), std::move(comp));
      }
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<OreComposition> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

// --- family generation ------------------------------------------------

enum class Family { Ore4, ClassB };

struct FamilyMember {
  Graph g;          // stored in canonical labelling
  std::string g6;   // graph6 of g; the identity key
  bool base = false;
  // Recipe for non-base members, with coordinates in the parents' stored
  // labellings.  Parents are referenced by their own graph6 strings.
  std::string edge_parent;
  std::string split_parent;
  int x = -1, y = -1;
  SplitSpec split;
};

struct FamilyIndex {
  Family family = Family::Ore4;
  int max_n = 0;
  bool complete = true;
  std::vector<FamilyMember> members;  // sorted by (order, g6)

  bool contains(const Graph& g) const {
    std::string key = to_graph6(canonical_graph(g));
    for (const auto& m : members)
      if (m.g6 == key) return true;
    return false;
  }
};

inline constexpr int kFamilyBudget = 14;

inline FamilyIndex generate_family(Family fam, int max_n) {
  if (max_n > kFamilyBudget)
    throw capability_error("family generation is budgeted to " +
                           std::to_string(kFamilyBudget) + " vertices");

  std::map<std::string, FamilyMember> members;
  auto add = [&](const Graph& raw, const FamilyMember& recipe) {
    Graph canon = canonical_graph(raw);
    std::string key = to_graph6(canon);
    if (members.count(key)) return false;
    FamilyMember m = recipe;
    m.g = std::move(canon);
    m.g6 = key;
    members.emplace(std::move(key), std::move(m));
    return true;
  };

  std::vector<FamilyMember> orePool;
  if (fam == Family::Ore4) {
    if (max_n >= 4) add(complete_graph(4), {.base = true});
  } else {
    if (max_n >= 8) add(catalog(NamedGraph::T8), {.base = true});
    // 4-Ore partners never need more than max_n - 7 vertices: the smallest
    // class-B graph has 8.
    if (max_n - 7 >= 4) orePool = generate_family(Family::Ore4, max_n - 7).members;
  }

  std::set<std::pair<std::string, std::string>> done;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<FamilyMember, FamilyMember>> jobs;
    for (const auto& [ka, a] : members) {
      if (fam == Family::Ore4) {
        for (const auto& [kb, b] : members) jobs.emplace_back(a, b);
      } else {
        for (const auto& h : orePool) {
          jobs.emplace_back(a, h);  // class-B member as edge side
          jobs.emplace_back(h, a);  // class-B member as split side
        }
      }
    }
    for (const auto& [a, b] : jobs) {
      if (a.g.n() + b.g.n() - 1 > max_n) continue;
      if (!done.emplace(a.g6, b.g6).second) continue;
      for (const OreComposition& comp : enumerate_compositions(a.g, b.g)) {
        if (fam == Family::ClassB && packing_number(comp.result, 3) != 2) continue;
        grew |= add(comp.result, {.base = false,
                                  .edge_parent = a.g6,
                                  .split_parent = b.g6,
                                  .x = comp.deleted_edge.first,
                                  .y = comp.deleted_edge.second,
                                  .split = comp.split});
      }
    }
  }

  FamilyIndex idx{fam, max_n, true, {}};
  idx.members.reserve(members.size());
  for (auto& [key, m] : members) idx.members.push_back(std::move(m));
  std::sort(idx.members.begin(), idx.members.end(), [](const auto& a, const auto& b) {
    return std::pair(a.g.n(), a.g6) < std::pair(b.g.n(), b.g6);
  });
  return idx;
}

// --- family persistence -----------------------------------------------

namespace detail {

inline std::vector<int> set_to_list(Vset s) {
  std::vector<int> out;
  for (Vset r = s; r; r &= r - 1) out.push_back(lowest_bit(r));
  return out;
}

inline Vset list_to_set(const std::vector<int>& vs) {
  Vset s = 0;
  for (int v : vs) s |= vbit(v);
  return s;
}

}  // namespace detail

// Writes dir/members.g6 and dir/provenance.json.  Deterministic: re-saving
// a loaded index reproduces the bytes exactly.
inline void save_family(const FamilyIndex& idx, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream g6(dir / "members.g6");
  for (const auto& m : idx.members) g6 << m.g6 << '\n';
  if (!g6) throw argument_error("cannot write " + (dir / "members.g6").string());

  nlohmann::json j;
  j["family"] = idx.family == Family::Ore4 ? "4ore" : "classb";
  j["max_n"] = idx.max_n;
  j["complete"] = idx.complete;
  j["members"] = nlohmann::json::array();
  for (const auto& m : idx.members) {
    nlohmann::json e;
    e["g6"] = m.g6;
    e["base"] = m.base;
    if (!m.base) {
      e["edge_parent"] = m.edge_parent;
      e["split_parent"] = m.split_parent;
      e["x"] = m.x;
      e["y"] = m.y;
      e["z"] = m.split.z;
      e["part1"] = detail::set_to_list(m.split.part1);
      e["part2"] = detail::set_to_list(m.split.part2);
    }
    j["members"].push_back(std::move(e));
  }
  std::ofstream prov(dir / "provenance.json");
  prov << j.dump(2) << '\n';
  if (!prov) throw argument_error("cannot write " + (dir / "provenance.json").string());
}

inline FamilyIndex load_family(const std::filesystem::path& dir) {
  std::ifstream prov(dir / "provenance.json");
  if (!prov) throw argument_error("cannot read " + (dir / "provenance.json").string());
  nlohmann::json j = nlohmann::json::parse(prov);

  FamilyIndex idx;
  std::string fam = j.at("family").get<std::string>();
  if (fam == "4ore")
    idx.family = Family::Ore4;
  else if (fam == "classb")
    idx.family = Family::ClassB;
  else
    throw parse_error("unknown family '" + fam + "'");
  idx.max_n = j.at("max_n").get<int>();
  idx.complete = j.at("complete").get<bool>();
  for (const auto& e : j.at("members")) {
    FamilyMember m;
    m.g6 = e.at("g6").get<std::string>();
    m.g = from_graph6(m.g6);
    m.base = e.at("base").get<bool>();
    if (!m.base) {
      m.edge_parent = e.at("edge_parent").get<std::string>();
      m.split_parent = e.at("split_parent").get<std::string>();
      m.x = e.at("x").get<int>();
      m.y = e.at("y").get<int>();
      m.split.z = e.at("z").get<int>();
      m.split.part1 = detail::list_to_set(e.at("part1").get<std::vector<int>>());
      m.split.part2 = detail::list_to_set(e.at("part2").get<std::vector<int>>());
    }
    idx.members.push_back(std::move(m));
  }

  std::ifstream g6file(dir / "members.g6");
  if (!g6file) throw argument_error("cannot read " + (dir / "members.g6").string());
  std::string line;
  std::size_t row = 0;
  while (std::getline(g6file, line)) {
    if (line.empty()) continue;
    if (row >= idx.members.size() || idx.members[row].g6 != line)
      throw parse_error("members.g6 disagrees with provenance.json at line " +
                        std::to_string(row + 1));
    ++row;
  }
  if (row != idx.members.size())
    throw parse_error("members.g6 is missing entries listed in provenance.json");
  return idx;
}

// --- recognition --------------------------------------------------------

// Witness tree for k-Ore membership.  A leaf holds K_k; an inner node holds
// the composed graph plus the recipe that rebuilds it from its children.
struct OreDecompositionNode;
using OreDecomposition = std::shared_ptr<const OreDecompositionNode>;

struct OreDecompositionNode {
  Graph g;
  OreDecomposition edge_side;   // null for leaves
  OreDecomposition split_side;  // null for leaves
  int x = -1, y = -1;           // deleted edge, in edge_side labels
  SplitSpec split;              // in split_side labels

  bool leaf() const { return edge_side == nullptr; }
};

namespace detail {

inline std::vector<Vset> components_within(const Graph& g, Vset domain) {
  std::vector<Vset> comps;
  Vset left = domain;
  while (left) {
    Vset comp = 0, frontier = vbit(lowest_bit(left));
    while (frontier) {
      comp |= frontier;
      Vset next = 0;
      for (Vset f = frontier; f; f &= f - 1) next |= g.neighbors(lowest_bit(f));
      frontier = next & domain & ~comp;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

inline int rank_in(Vset set, int v) { return popcount(set & (vbit(v) - 1)); }

inline std::optional<OreDecomposition> ore_decompose(const Graph& g, int k,
                                                     std::map<std::string, bool>& known) {
  int clique_edges = k * (k - 1) / 2;
  if (g.n() == k && g.m() == clique_edges)
    return std::make_shared<OreDecompositionNode>(OreDecompositionNode{g, nullptr, nullptr});
  // Composition arithmetic: v and e both grow by (v2 - 1, e2 - 1), so
  // 5v - 3e is invariant at its K4 value of 2.  Cheap necessary filter.
  if (k == 4 && 5 * g.n() - 3 * g.m() != 2) return std::nullopt;
  if (g.n() < 2 * k - 1 || g.min_degree() < k - 1) return std::nullopt;
  std::string key = canonical_form(g).bytes;
  if (auto it = known.find(key); it != known.end() && !it->second) return std::nullopt;

  Vset all = vbit(g.n()) - 1;
  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      if (g.has_edge(a, b)) continue;
      Vset rest = all & ~(vbit(a) | vbit(b));
      std::vector<Vset> comps = components_within(g, rest);
      if (comps.size() < 2) continue;
      for (unsigned pick = 1; pick + 1 < (1u << comps.size()); ++pick) {
        Vset s1 = 0;
        for (std::size_t i = 0; i < comps.size(); ++i)
          if (pick & (1u << i)) s1 |= comps[i];
        Vset s2 = rest & ~s1;
        Vset na = g.neighbors(a), nb = g.neighbors(b);
        // a and b need neighbours on both sides, and the split side may not
        // contain a common neighbour (split parts are disjoint).
        if (!(na & s1) || !(nb & s1) || !(na & s2) || !(nb & s2)) continue;
        if (na & nb & s2) continue;

        Vset side1 = s1 | vbit(a) | vbit(b);
        Graph h1 = g.induced(side1);
        h1.add_edge(rank_in(side1, a), rank_in(side1, b));

        Graph h2(popcount(s2) + 1);
        int zz = h2.n() - 1;
        for (auto [u, v] : g.induced(s2).edges()) h2.add_edge(u, v);
        SplitSpec spec{zz, 0, 0};
        for (Vset f = na & s2; f; f &= f - 1) spec.part1 |= vbit(rank_in(s2, lowest_bit(f)));
        for (Vset f = nb & s2; f; f &= f - 1) spec.part2 |= vbit(rank_in(s2, lowest_bit(f)));
        for (Vset f = spec.part1 | spec.part2; f; f &= f - 1) h2.add_edge(zz, lowest_bit(f));

        auto left = ore_decompose(h1, k, known);
        if (!left) continue;
        auto right = ore_decompose(h2, k, known);
        if (!right) continue;
        known[key] = true;
        return std::make_shared<OreDecompositionNode>(OreDecompositionNode{
            g, *left, *right, rank_in(side1, a), rank_in(side1, b), spec});
      }
    }
  }
  known[key] = false;
  return std::nullopt;
}

}  // namespace detail

// Present iff g is k-Ore; the witness decomposes g down to K_k leaves.
inline std::optional<OreDecomposition> is_k_ore(const Graph& g, int k = 4) {
  if (k < 3) throw argument_error("k-Ore needs k >= 3");
  std::map<std::string, bool> known;
  return detail::ore_decompose(g, k, known);
}

namespace detail {

inline bool class_b_search(const Graph& g, const std::string& t8key,
                           std::map<std::string, bool>& known) {
  // Every class-B graph has 5v - 3e = 1 (T8 does, and composition with a
  // 4-Ore partner adds 2 - 2) and triangle packing number exactly 2.
  if (5 * g.n() - 3 * g.m() != 1) return false;
  std::string key = canonical_form(g).bytes;
  if (auto it = known.find(key); it != known.end()) return it->second;
  bool& slot = known[key];
  slot = false;
  if (key == t8key) return slot = true;
  if (packing_number(g, 3) != 2) return false;

  Vset all = vbit(g.n()) - 1;
  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      if (g.has_edge(a, b)) continue;
      Vset rest = all & ~(vbit(a) | vbit(b));
      std::vector<Vset> comps = components_within(g, rest);
      if (comps.size() < 2) continue;
      for (unsigned pick = 1; pick + 1 < (1u << comps.size()); ++pick) {
        Vset s1 = 0;
        for (std::size_t i = 0; i < comps.size(); ++i)
          if (pick & (1u << i)) s1 |= comps[i];
        Vset s2 = rest & ~s1;
        Vset na = g.neighbors(a), nb = g.neighbors(b);
        if (!(na & s1) || !(nb & s1) || !(na & s2) || !(nb & s2)) continue;
        if (na & nb & s2) continue;

        Vset side1 = s1 | vbit(a) | vbit(b);
        Graph h1 = g.induced(side1);
        h1.add_edge(rank_in(side1, a), rank_in(side1, b));

        Graph h2(popcount(s2) + 1);
        int zz = h2.n() - 1;
        for (auto [u, v] : g.induced(s2).edges()) h2.add_edge(u, v);
        for (Vset f = (na | nb) & s2; f; f &= f - 1) h2.add_edge(zz, rank_in(s2, lowest_bit(f)));

        if (class_b_search(h1, t8key, known) && is_k_ore(h2, 4)) return slot = true;
        if (is_k_ore(h1, 4) && class_b_search(h2, t8key, known)) return slot = true;
      }
    }
  }
  return false;
}

}  // namespace detail

// Membership in class B: T8, or a composition of a class-B graph with a
// 4-Ore graph (either side) whose triangle packing number stays 2.
inline bool is_class_b(const Graph& g) {
  if (g.n() < 8) return false;
  if (packing_number(g, 3) != 2) return false;
  std::map<std::string, bool> known;
  std::string t8key = canonical_form(catalog(NamedGraph::T8)).bytes;
  return detail::class_b_search(g, t8key, known);
}

// --- foundational edges and the packing correction ----------------------

enum class FoundationalRegime { Ore4, ClassB };

// 4-Ore regime (for T3 = 3 members): deleting the edge drops the packing
// number to 2 and leaves no kite.  Class-B regime: the packing number drops
// to 1 and no K4-minus-an-edge subgraph survives.
inline std::vector<std::pair<int, int>> foundational_edges(const Graph& g,
                                                           FoundationalRegime regime) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g.edges()) {
    Graph h = g.without_edge(u, v);
    bool found = regime == FoundationalRegime::Ore4
                     ? packing_number(h, 3) == 2 && !has_kite(h)
                     : packing_number(h, 3) == 1 && !has_k4_minus_e(h);
    if (found) out.emplace_back(u, v);
  }
  return out;
}

// Number of forced sides of a composition: 1 for h1 if every maximum
// packing there uses the deleted edge, plus 1 for h2 if every maximum
// packing uses the split vertex.  The composed graph then satisfies
// T(result) >= T(h1) + T(h2) - f_correction.
inline int f_correction(const Graph& h1, std::pair<int, int> xy, const Graph& h2,
                        const SplitSpec& s, int r = 3) {
  if (!h1.has_edge(xy.first, xy.second))
    throw argument_error("edge side must contain the deleted edge");
  validate_split(h2, s);
  int f = 0;
  if (every_packing_uses_edge(h1, r, xy)) ++f;
  if (every_packing_uses_vertex(h2, r, s.z)) ++f;
  return f;
}

}  // namespace critlab

#endif  // CRITLAB_ORE_HPP
