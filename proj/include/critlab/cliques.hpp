#ifndef CRITLAB_CLIQUES_HPP
#define CRITLAB_CLIQUES_HPP

// Exact clique-packing machinery: maximum families of vertex-disjoint
// r-cliques (with certificates), packings avoiding a vertex or an edge,
// kites and K4-minus-an-edge patterns, the degree-3 subgraph, and
// spindle-derived gadget detection.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "critlab/canonical.hpp"
#include "critlab/catalog.hpp"
#include "critlab/graph.hpp"

namespace critlab {

// All r-cliques as vertex sets, ordered by ascending bitmask.
inline std::vector<Vset> cliques_of_size(const Graph& g, int r) {
  if (r < 1) throw argument_error("clique size must be positive");
  std::vector<Vset> out;
  std::vector<int> stack;
  auto extend = [&](auto&& self, Vset cur, Vset candidates) -> void {
    if (static_cast<int>(stack.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (Vset t = candidates; t; t &= t - 1) {
      int v = lowest_bit(t);
      stack.push_back(v);
      self(self, cur | vbit(v), candidates & g.neighbors(v) & ~(vbit(v) | (vbit(v) - 1)));
      stack.pop_back();
    }
  };
  extend(extend, 0, g.vertices());
  std::sort(out.begin(), out.end());
  return out;
}

inline bool has_triangle(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (g.neighbors(u) & g.neighbors(v)) return true;
  return false;
}

struct Packing {
  std::vector<Vset> cliques;  // pairwise disjoint, in choice order
  int size() const { return static_cast<int>(cliques.size()); }
};

// Constraints for packings that must avoid part of the graph.
struct PackingAvoid {
  Vset vertices = 0;                              // no clique may touch these
  std::optional<std::pair<int, int>> edge;        // no clique may contain both ends
};

namespace detail {

inline void pack_search(const std::vector<Vset>& cliques, std::size_t idx, Vset used,
                        std::vector<Vset>& cur, std::vector<Vset>& best, int r, int nverts) {
  if (static_cast<int>(cur.size()) > static_cast<int>(best.size())) best = cur;
  int room = (nverts - popcount(used)) / r;
  if (static_cast<int>(cur.size()) + room <= static_cast<int>(best.size())) return;
  for (std::size_t i = idx; i < cliques.size(); ++i) {
    if (cliques[i] & used) continue;
    cur.push_back(cliques[i]);
    pack_search(cliques, i + 1, used | cliques[i], cur, best, r, nverts);
    cur.pop_back();
  }
}

}  // namespace detail

// Maximum packing among the given cliques (branch and bound, exact).
inline Packing pack_cliques(const Graph& g, std::vector<Vset> cliques, int r) {
  std::vector<Vset> cur, best;
  detail::pack_search(cliques, 0, 0, cur, best, r, g.n());
  return Packing{std::move(best)};
}

inline Packing clique_packing(const Graph& g, int r) {
  return pack_cliques(g, cliques_of_size(g, r), r);
}

// T^{r}(g): the size of a maximum vertex-disjoint r-clique packing.
inline int packing_number(const Graph& g, int r) { return clique_packing(g, r).size(); }

inline Packing packing_avoiding(const Graph& g, int r, const PackingAvoid& avoid) {
  std::vector<Vset> cliques = cliques_of_size(g, r);
  std::erase_if(cliques, [&](Vset c) {
    if (c & avoid.vertices) return true;
    if (avoid.edge) {
      Vset both = vbit(avoid.edge->first) | vbit(avoid.edge->second);
      if ((c & both) == both) return true;
    }
    return false;
  });
  return pack_cliques(g, std::move(cliques), r);
}

// Does every maximum r-clique packing use the given edge / vertex?
inline bool every_packing_uses_edge(const Graph& g, int r, std::pair<int, int> e) {
  return packing_avoiding(g, r, {.vertices = 0, .edge = e}).size() < packing_number(g, r);
}

inline bool every_packing_uses_vertex(const Graph& g, int r, int v) {
  return packing_avoiding(g, r, {.vertices = vbit(v)}).size() < packing_number(g, r);
}

// A kite is a K4-minus-an-edge subgraph whose two triangle-shared vertices
// (the spar ends) have degree 3 in the host graph.  Equivalently: an edge
// (a,b) with deg(a) = deg(b) = 3 plus two common neighbours p, q; the pair
// {p,q} is the missing edge slot (p and q may or may not be adjacent).
struct Kite {
  std::array<int, 4> vertices;   // a, b, p, q
  std::pair<int, int> spar;      // (a, b)
  std::pair<int, int> missing;   // (p, q)
  Vset vertex_set() const {
    return vbit(vertices[0]) | vbit(vertices[1]) | vbit(vertices[2]) | vbit(vertices[3]);
  }
  // The five edges of the K4-e pattern.
  std::vector<std::pair<int, int>> edge_set() const {
    auto [a, b] = spar;
    auto [p, q] = missing;
    return {{std::min(a, b), std::max(a, b)}, {std::min(a, p), std::max(a, p)},
            {std::min(a, q), std::max(a, q)}, {std::min(b, p), std::max(b, p)},
            {std::min(b, q), std::max(b, q)}};
  }
};

inline std::vector<Kite> find_kites(const Graph& g) {
  std::vector<Kite> out;
  for (auto [a, b] : g.edges()) {
    if (g.degree(a) != 3 || g.degree(b) != 3) continue;
    Vset common = g.neighbors(a) & g.neighbors(b);
    std::vector<int> cs;
    for (Vset t = common; t; t &= t - 1) cs.push_back(lowest_bit(t));
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j)
        out.push_back(Kite{{a, b, cs[i], cs[j]}, {a, b}, {cs[i], cs[j]}});
  }
  return out;
}

inline bool has_kite(const Graph& g) { return !find_kites(g).empty(); }

// Vertex 4-sets whose induced subgraph contains K4-e (so induces K4-e or K4).
inline std::vector<Vset> find_k4_minus_e(const Graph& g) {
  std::vector<Vset> out;
  for (auto [a, b] : g.edges()) {
    Vset common = g.neighbors(a) & g.neighbors(b);
    std::vector<int> cs;
    for (Vset t = common; t; t &= t - 1) cs.push_back(lowest_bit(t));
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        // (a,b) is the spar slot; count each 4-set once via its smallest spar.
        Vset set = vbit(a) | vbit(b) | vbit(cs[i]) | vbit(cs[j]);
        out.push_back(set);
      }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool has_k4_minus_e(const Graph& g) {
  for (auto [a, b] : g.edges())
    if (popcount(g.neighbors(a) & g.neighbors(b)) >= 2) return true;
  return false;
}

// The subgraph induced on degree-3 vertices, with its components classified.
struct Degree3Subgraph {
  Graph d3;
  std::vector<int> to_host;  // d3 label -> host label
  enum class Shape { Isolated, Path, Star, Tree, HasCycle };
  struct Component {
    Vset vertices;  // in d3 labels
    Shape shape;
  };
  std::vector<Component> components;
  Vset host_vertices() const {
    Vset s = 0;
    for (int v : to_host) s |= vbit(v);
    return s;
  }
};

// A spindle gadget: take the Moser spindle, split its degree-4 vertex into
// z1/z2 over a neighbourhood bipartition chosen so the split graph has no
// K4-e, then attach a new end vertex adjacent to exactly z1 and z2.  Nine
// vertices, thirteen edges.  Occurrences are induced embeddings.
struct MGadget {
  Vset vertices;                 // the nine host vertices
  int end;                       // host image of the attached end vertex
  std::pair<int, int> split_pair;  // host images of z1, z2 (min, max)
};

namespace detail {

// The distinct gadget patterns, as graphs on 9 vertices where vertex 7 is
// z2, vertex 8 is the end (z1 keeps the spindle's degree-4 slot, label 1).
inline const std::vector<Graph>& m_gadget_patterns() {
  static const std::vector<Graph> patterns = [] {
    std::vector<Graph> out;
    std::vector<std::string> seen;
    Graph m = catalog(NamedGraph::MoserSpindle);
    int hub = 1;  // the unique degree-4 vertex
    Vset nb = m.neighbors(hub);
    std::vector<int> nbrs;
    for (Vset t = nb; t; t &= t - 1) nbrs.push_back(lowest_bit(t));
    for (unsigned mask = 1; mask < (1u << nbrs.size()) - 1; ++mask) {
      if (!(mask & 1u)) continue;  // fix nbrs[0] in part1: unordered bipartitions
      Vset part2 = 0;
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        if (!(mask & (1u << i))) part2 |= vbit(nbrs[i]);
      if (part2 == 0) continue;
      Graph split = m;
      for (Vset t = part2; t; t &= t - 1) split.remove_edge(hub, lowest_bit(t));
      split = split.with_new_vertex(part2);
      if (has_k4_minus_e(split)) continue;
      Graph gadget = split.with_new_vertex(vbit(hub) | vbit(split.n() - 1));
      std::string form = canonical_form(gadget).bytes;
      if (std::find(seen.begin(), seen.end(), form) == seen.end()) {
        seen.push_back(form);
        out.push_back(gadget);
      }
    }
    return out;
  }();
  return patterns;
}

// All induced embeddings of `pat` into `host`, streamed to `sink` as
// pattern->host vertex maps.
template <typename Sink>
inline void induced_embeddings(const Graph& pat, const Graph& host, Sink&& sink) {
  int pn = pat.n();
  std::vector<int> order(static_cast<std::size_t>(pn));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&pat](int a, int b) { return pat.degree(a) > pat.degree(b); });
  std::vector<int> image(static_cast<std::size_t>(pn), -1);
  Vset used = 0;
  auto go = [&](auto&& self, int i) -> void {
    if (i == pn) {
      sink(image);
      return;
    }
    int v = order[static_cast<std::size_t>(i)];
    for (int w = 0; w < host.n(); ++w) {
      if (used & vbit(w)) continue;
      if (host.degree(w) < pat.degree(v)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        int u = order[static_cast<std::size_t>(j)];
        if (pat.has_edge(u, v) != host.has_edge(image[static_cast<std::size_t>(u)], w)) ok = false;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used |= vbit(w);
      self(self, i + 1);
      used &= ~vbit(w);
      image[static_cast<std::size_t>(v)] = -1;
    }
  };
  go(go, 0);
}

}  // namespace detail

inline std::vector<MGadget> find_m_gadgets(const Graph& g) {
  std::vector<MGadget> out;
  for (const Graph& pat : detail::m_gadget_patterns()) {
    int z1 = 1, z2 = 7, end = 8;
    detail::induced_embeddings(pat, g, [&](const std::vector<int>& image) {
      Vset verts = 0;
      for (int w : image) verts |= vbit(w);
      int a = image[static_cast<std::size_t>(z1)], b = image[static_cast<std::size_t>(z2)];
      MGadget found{verts, image[static_cast<std::size_t>(end)], {std::min(a, b), std::max(a, b)}};
      for (const MGadget& have : out)
        if (have.vertices == found.vertices && have.end == found.end &&
            have.split_pair == found.split_pair)
          return;
      out.push_back(found);
    });
  }
  std::sort(out.begin(), out.end(), [](const MGadget& x, const MGadget& y) {
    return std::tie(x.vertices, x.end, x.split_pair) < std::tie(y.vertices, y.end, y.split_pair);
  });
  return out;
}

inline Degree3Subgraph degree3_subgraph(const Graph& g) {
  Degree3Subgraph out;
  Vset keep = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 3) keep |= vbit(v);
  out.d3 = g.induced(keep);
  for (Vset t = keep; t; t &= t - 1) out.to_host.push_back(lowest_bit(t));
  for (Vset comp : out.d3.components()) {
    int nv = popcount(comp);
    int ne = 0;
    int maxdeg = 0, leaves = 0;
    for (Vset t = comp; t; t &= t - 1) {
      int v = lowest_bit(t);
      int d = popcount(out.d3.neighbors(v) & comp);
      ne += d;
      maxdeg = std::max(maxdeg, d);
      if (d == 1) ++leaves;
    }
    ne /= 2;
    Degree3Subgraph::Shape shape;
    if (nv == 1)
      shape = Degree3Subgraph::Shape::Isolated;
    else if (ne >= nv)
      shape = Degree3Subgraph::Shape::HasCycle;
    else if (maxdeg <= 2)
      shape = Degree3Subgraph::Shape::Path;
    else if (leaves == nv - 1)
      shape = Degree3Subgraph::Shape::Star;
    else
      shape = Degree3Subgraph::Shape::Tree;
    out.components.push_back({comp, shape});
  }
  return out;
}

}  // namespace critlab

#endif
