#ifndef CRITLAB_COLORING_HPP
#define CRITLAB_COLORING_HPP

// Proper colourings, homomorphisms, criticality, and the consequences of
// the Gallai-tree structure for cycles of degree-3 vertices.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "critlab/graph.hpp"

namespace critlab {

using Coloring = std::vector<int>;

// Deterministic backtracking: vertices in descending-degree order (index
// breaks ties), and a vertex may only open colour c+1 if colours 0..c are
// already in use, which kills colour-permutation symmetry.
inline std::optional<Coloring> find_coloring(const Graph& g, int k) {
  if (k < 0) throw argument_error("colour count must be nonnegative");
  int n = g.n();
  if (n == 0) return Coloring{};
  if (k == 0) return std::nullopt;

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&g](int a, int b) { return g.degree(a) > g.degree(b); });

  Coloring color(static_cast<std::size_t>(n), -1);
  std::vector<Vset> by_color(static_cast<std::size_t>(k), 0);

  std::function<bool(int, int)> go = [&](int i, int used) -> bool {
    if (i == n) return true;
    int v = order[static_cast<std::size_t>(i)];
    int limit = std::min(k - 1, used);  // at most one fresh colour
    for (int c = 0; c <= limit; ++c) {
      if (g.neighbors(v) & by_color[static_cast<std::size_t>(c)]) continue;
      color[static_cast<std::size_t>(v)] = c;
      by_color[static_cast<std::size_t>(c)] |= vbit(v);
      if (go(i + 1, std::max(used, c + 1))) return true;
      by_color[static_cast<std::size_t>(c)] &= ~vbit(v);
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (!go(0, 0)) return std::nullopt;
  return color;
}

inline bool colorable(const Graph& g, int k) { return find_coloring(g, k).has_value(); }

// Edge-preserving vertex map g -> h.  A k-colouring is the special case
// h = K_k.
inline std::optional<std::vector<int>> find_homomorphism(const Graph& g, const Graph& h) {
  int n = g.n();
  if (n == 0) return std::vector<int>{};
  if (h.n() == 0) return std::nullopt;

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&g](int a, int b) { return g.degree(a) > g.degree(b); });

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == n) return true;
    int v = order[static_cast<std::size_t>(i)];
    for (int w = 0; w < h.n(); ++w) {
      bool ok = true;
      for (Vset t = g.neighbors(v); t && ok; t &= t - 1) {
        int u = lowest_bit(t);
        int iu = image[static_cast<std::size_t>(u)];
        if (iu >= 0 && (iu == w || !h.has_edge(iu, w))) ok = false;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      if (go(i + 1)) return true;
      image[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return image;
}

// Why a graph is or is not k-critical.  A graph is k-critical when it is
// not (k-1)-colourable but every proper subgraph is; it suffices to check
// every single-edge and single-vertex deletion.
struct CriticalityVerdict {
  enum class Reason {
    Critical,
    Colorable,           // g itself is (k-1)-colourable
    UndeletableEdge,     // some g-e is still not (k-1)-colourable
    UndeletableVertex,   // some g-v is still not (k-1)-colourable (isolated vertices)
  };
  bool is_critical = false;
  Reason reason = Reason::Critical;
  std::optional<Coloring> coloring;              // when Colorable
  std::optional<std::pair<int, int>> bad_edge;   // when UndeletableEdge
  std::optional<int> bad_vertex;                 // when UndeletableVertex
  // For critical graphs: a (k-1)-colouring of g-e for every edge e.
  std::map<std::pair<int, int>, Coloring> edge_colorings;
};

inline CriticalityVerdict is_k_critical(const Graph& g, int k) {
  if (k < 2) throw argument_error("criticality needs k >= 2");
  CriticalityVerdict out;
  if (auto c = find_coloring(g, k - 1)) {
    out.reason = CriticalityVerdict::Reason::Colorable;
    out.coloring = std::move(*c);
    return out;
  }
  for (auto e : g.edges()) {
    auto c = find_coloring(g.without_edge(e.first, e.second), k - 1);
    if (!c) {
      out.reason = CriticalityVerdict::Reason::UndeletableEdge;
      out.bad_edge = e;
      return out;
    }
    out.edge_colorings.emplace(e, std::move(*c));
  }
  // Edge deletions cover all vertex deletions except isolated vertices,
  // which keep the whole edge set; K4 plus an isolated vertex passes every
  // edge test but is not critical.
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0 && g.n() > 1) {
      out.reason = CriticalityVerdict::Reason::UndeletableVertex;
      out.bad_vertex = v;
      out.edge_colorings.clear();
      return out;
    }
  out.is_critical = true;
  return out;
}

// Nonadjacent pairs of r that cannot receive distinct colours in any
// (k-1)-colouring, i.e. r plus that edge is not (k-1)-colourable.
inline std::vector<std::pair<int, int>> identifiable_pairs(const Graph& r, int k = 4) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < r.n(); ++u)
    for (int v = u + 1; v < r.n(); ++v) {
      if (r.has_edge(u, v)) continue;
      if (!colorable(r.with_edge(u, v), k - 1)) out.emplace_back(u, v);
    }
  return out;
}

// For a cycle c (vertex sequence) of degree-3 vertices in a 4-critical g:
// the cycle must be odd, its neighbourhood independent, and every
// 3-colouring of g - c must colour that neighbourhood monochromatically.
struct GallaiCycleReport {
  bool valid_cycle = false;        // input really is a cycle of degree-3 vertices
  bool odd = false;
  bool neighborhood_independent = false;
  bool always_monochromatic = false;
  long colorings_checked = 0;
  Vset neighborhood = 0;           // N(c) in g labels
  std::optional<Coloring> counterexample;  // a colouring of g-c splitting N(c)
  bool pass() const {
    return valid_cycle && odd && neighborhood_independent && always_monochromatic;
  }
};

inline GallaiCycleReport gallai_cycle_check(const Graph& g, const std::vector<int>& cycle) {
  GallaiCycleReport rep;
  std::size_t len = cycle.size();
  if (len < 3) return rep;
  Vset cset = 0;
  for (int v : cycle) {
    if (v < 0 || v >= g.n() || g.degree(v) != 3) return rep;
    if (cset & vbit(v)) return rep;
    cset |= vbit(v);
  }
  for (std::size_t i = 0; i < len; ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % len])) return rep;
  rep.valid_cycle = true;
  rep.odd = (len % 2) == 1;

  Vset nbhd = 0;
  for (int v : cycle) nbhd |= g.neighbors(v);
  nbhd &= ~cset;
  rep.neighborhood = nbhd;
  rep.neighborhood_independent = true;
  for (Vset t = nbhd; t; t &= t - 1)
    if (g.neighbors(lowest_bit(t)) & nbhd) {
      rep.neighborhood_independent = false;
      break;
    }

  // Enumerate every proper 3-colouring of g - c and test N(c).
  Graph rest = g.without_vertices(cset);
  std::vector<int> old_label;  // rest label -> g label
  for (Vset t = g.vertices() & ~cset; t; t &= t - 1) old_label.push_back(lowest_bit(t));
  std::vector<int> nbhd_rest;  // rest labels of N(c)
  for (std::size_t i = 0; i < old_label.size(); ++i)
    if (nbhd & vbit(old_label[i])) nbhd_rest.push_back(static_cast<int>(i));

  rep.always_monochromatic = true;
  Coloring col(static_cast<std::size_t>(rest.n()), -1);
  std::vector<Vset> by_color(3, 0);
  std::function<void(int)> go = [&](int v) {
    if (!rep.always_monochromatic) return;
    if (v == rest.n()) {
      ++rep.colorings_checked;
      for (std::size_t i = 1; i < nbhd_rest.size(); ++i)
        if (col[static_cast<std::size_t>(nbhd_rest[i])] != col[static_cast<std::size_t>(nbhd_rest[0])]) {
          rep.always_monochromatic = false;
          rep.counterexample = col;
          return;
        }
      return;
    }
    for (int c = 0; c < 3; ++c) {
      if (rest.neighbors(v) & by_color[static_cast<std::size_t>(c)]) continue;
      col[static_cast<std::size_t>(v)] = c;
      by_color[static_cast<std::size_t>(c)] |= vbit(v);
      go(v + 1);
      by_color[static_cast<std::size_t>(c)] &= ~vbit(v);
      col[static_cast<std::size_t>(v)] = -1;
      if (!rep.always_monochromatic) return;
    }
  };
  go(0);
  return rep;
}

}  // namespace critlab

#endif
