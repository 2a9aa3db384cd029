#ifndef CRITLAB_GRAPH_HPP
#define CRITLAB_GRAPH_HPP

// Simple undirected graphs on at most 62 labelled vertices.
// Adjacency is one 64-bit word per vertex, so neighbourhood intersection,
// degree counts and subset tests are single instructions.

#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "critlab/errors.hpp"

namespace critlab {

// A set of vertices as a bitmask.
using Vset = std::uint64_t;

inline constexpr Vset vbit(int v) { return Vset{1} << v; }
inline int popcount(Vset s) { return std::popcount(s); }
inline int lowest_bit(Vset s) { return std::countr_zero(s); }

// for (Vset t = s; t; t &= t - 1) { int v = lowest_bit(t); ... }

class Graph {
 public:
  static constexpr int kMaxVertices = 62;

  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw argument_error("vertex count out of range: " + std::to_string(n));
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int n() const { return n_; }

  int m() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
    return twice / 2;
  }

  Vset vertices() const { return n_ == 64 ? ~Vset{0} : (Vset{1} << n_) - 1; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] & vbit(v)) != 0;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw argument_error("self-loops are not supported");
    adj_[u] |= vbit(v);
    adj_[v] |= vbit(u);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~vbit(v);
    adj_[v] &= ~vbit(u);
  }

  Vset neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return popcount(neighbors(v)); }

  int min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m()));
    for (int u = 0; u < n_; ++u)
      for (Vset t = adj_[u] & ~(vbit(u) | (vbit(u) - 1)); t; t &= t - 1)
        out.emplace_back(u, lowest_bit(t));
    return out;
  }

  // Subgraph induced on `keep`; kept vertices are relabelled 0.. in
  // increasing order of their old labels.
  Graph induced(Vset keep) const {
    keep &= vertices();
    Graph out(popcount(keep));
    std::array<int, kMaxVertices> newlab{};
    int next = 0;
    for (Vset t = keep; t; t &= t - 1) newlab[lowest_bit(t)] = next++;
    for (Vset t = keep; t; t &= t - 1) {
      int u = lowest_bit(t);
      for (Vset s = adj_[u] & keep; s; s &= s - 1) {
        int v = lowest_bit(s);
        if (u < v) out.add_edge(newlab[u], newlab[v]);
      }
    }
    return out;
  }

  Graph without_vertex(int v) const {
    check_vertex(v);
    return induced(vertices() & ~vbit(v));
  }

  Graph without_vertices(Vset drop) const { return induced(vertices() & ~drop); }

  Graph without_edge(int u, int v) const {
    Graph out = *this;
    out.remove_edge(u, v);
    return out;
  }

  Graph with_edge(int u, int v) const {
    Graph out = *this;
    out.add_edge(u, v);
    return out;
  }

  // Appends one vertex (label n) adjacent to `nbrs`.
  Graph with_new_vertex(Vset nbrs) const {
    if (n_ + 1 > kMaxVertices) throw argument_error("graph is full");
    if ((nbrs & ~vertices()) != 0) throw argument_error("neighbour set out of range");
    Graph out = *this;
    out.n_ = n_ + 1;
    out.adj_[n_] = nbrs;
    for (Vset t = nbrs; t; t &= t - 1) out.adj_[lowest_bit(t)] |= vbit(n_);
    return out;
  }

  // Relabels: old vertex i becomes perm[i].
  Graph permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
      throw argument_error("permutation size mismatch");
    Graph out(n_);
    for (int u = 0; u < n_; ++u)
      for (Vset t = adj_[u]; t; t &= t - 1) {
        int v = lowest_bit(t);
        if (u < v) out.add_edge(perm[u], perm[v]);
      }
    return out;
  }

  bool connected() const {
    if (n_ <= 1) return true;
    Vset seen = reach_from(0);
    return seen == vertices();
  }

  // Connected components as vertex sets, ordered by smallest member.
  std::vector<Vset> components() const {
    std::vector<Vset> out;
    Vset left = vertices();
    while (left) {
      Vset comp = reach_from(lowest_bit(left));
      out.push_back(comp);
      left &= ~comp;
    }
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw argument_error("vertex out of range: " + std::to_string(v));
  }

  Vset reach_from(int start) const {
    Vset seen = vbit(start);
    Vset frontier = seen;
    while (frontier) {
      Vset next = 0;
      for (Vset t = frontier; t; t &= t - 1) next |= adj_[lowest_bit(t)];
      frontier = next & ~seen;
      seen |= frontier;
    }
    return seen;
  }

  int n_ = 0;
  std::array<Vset, kMaxVertices> adj_{};  // rows >= n_ stay zero
};

}  // namespace critlab

#endif
