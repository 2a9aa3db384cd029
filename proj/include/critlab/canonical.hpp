#ifndef CRITLAB_CANONICAL_HPP
#define CRITLAB_CANONICAL_HPP

// Canonical labelling by equitable refinement plus backtracking, in the
// McKay style: individualize a vertex of the first non-singleton cell,
// re-refine, recurse; the lexicographically smallest relabelled adjacency
// wins.  Automorphisms discovered at equal leaves prune sibling branches
// (orbit pruning restricted to permutations fixing the individualized
// path, which keeps it sound).

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "critlab/graph.hpp"
#include "critlab/graph6.hpp"

namespace critlab {

struct CanonicalForm {
  std::string bytes;          // graph6 of the canonically labelled graph
  std::vector<int> labeling;  // labeling[v] = canonical position of input vertex v
};

namespace detail {

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.n()) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
  }

  CanonicalForm run() {
    CanonicalForm out;
    if (n_ == 0) {
      out.bytes = to_graph6(Graph(0));
      return out;
    }
    std::vector<std::vector<int>> cells(1);
    cells[0].resize(n_);
    std::iota(cells[0].begin(), cells[0].end(), 0);
    search(cells);
    out.labeling = best_lab_;
    out.bytes = to_graph6(g_.permuted(best_lab_));
    return out;
  }

 private:
  // Split cells by neighbour counts into other cells until stable.
  void refine(std::vector<std::vector<int>>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        Vset smask = 0;
        for (int v : cells[s]) smask |= vbit(v);
        for (std::size_t c = 0; c < cells.size() && !changed; ++c) {
          if (cells[c].size() <= 1) continue;
          int lo = Graph::kMaxVertices + 1, hi = -1;
          std::array<int, Graph::kMaxVertices> cnt;
          for (int v : cells[c]) {
            int d = popcount(adj_[v] & smask);
            cnt[static_cast<std::size_t>(v)] = d;
            lo = std::min(lo, d);
            hi = std::max(hi, d);
          }
          if (lo == hi) continue;
          std::vector<std::vector<int>> parts(static_cast<std::size_t>(hi - lo + 1));
          for (int v : cells[c]) parts[static_cast<std::size_t>(cnt[static_cast<std::size_t>(v)] - lo)].push_back(v);
          std::vector<std::vector<int>> next;
          next.reserve(cells.size() + parts.size());
          for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i == c) {
              for (auto& p : parts)
                if (!p.empty()) next.push_back(std::move(p));
            } else {
              next.push_back(std::move(cells[i]));
            }
          }
          cells = std::move(next);
          changed = true;
        }
      }
    }
  }

  void search(std::vector<std::vector<int>> cells) {
    refine(cells);

    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        target = i;
        break;
      }

    if (target == cells.size()) {
      leaf(cells);
      return;
    }

    std::vector<int> explored;
    for (int v : cells[target]) {
      if (in_explored_orbit(v, explored)) continue;
      std::vector<std::vector<int>> child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == target) {
          child.push_back({v});
          std::vector<int> rest;
          for (int w : cells[i])
            if (w != v) rest.push_back(w);
          child.push_back(std::move(rest));
        } else {
          child.push_back(cells[i]);
        }
      }
      path_.push_back(v);
      search(std::move(child));
      path_.pop_back();
      explored.push_back(v);
    }
  }

  void leaf(const std::vector<std::vector<int>>& cells) {
    std::vector<int> lab(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < cells.size(); ++i) lab[static_cast<std::size_t>(cells[i][0])] = static_cast<int>(i);

    std::array<Vset, Graph::kMaxVertices> rows{};
    for (int v = 0; v < n_; ++v) {
      Vset r = 0;
      for (Vset t = adj_[v]; t; t &= t - 1) r |= vbit(lab[static_cast<std::size_t>(lowest_bit(t))]);
      rows[static_cast<std::size_t>(lab[static_cast<std::size_t>(v)])] = r;
    }

    if (!have_best_) {
      best_rows_ = rows;
      best_lab_ = lab;
      have_best_ = true;
      return;
    }
    int cmp = 0;
    for (int i = 0; i < n_ && cmp == 0; ++i)
      cmp = rows[static_cast<std::size_t>(i)] < best_rows_[static_cast<std::size_t>(i)]   ? -1
            : rows[static_cast<std::size_t>(i)] > best_rows_[static_cast<std::size_t>(i)] ? 1
                                                                                          : 0;
    if (cmp < 0) {
      best_rows_ = rows;
      best_lab_ = lab;
    } else if (cmp == 0) {
      // Equal leaf: lab and best_lab_ name the same labelled graph, so
      // best_lab_^{-1} o lab is an automorphism.
      std::vector<int> inv(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) inv[static_cast<std::size_t>(best_lab_[static_cast<std::size_t>(v)])] = v;
      std::vector<int> sigma(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) sigma[static_cast<std::size_t>(v)] = inv[static_cast<std::size_t>(lab[static_cast<std::size_t>(v)])];
      generators_.push_back(std::move(sigma));
    }
  }

  // True if some product of discovered automorphisms that fixes every
  // vertex on the current individualization path maps an explored sibling
  // to v.  Those permutations stabilize every cell of the current
  // partition, so the subtree under v repeats an explored one.
  bool in_explored_orbit(int v, const std::vector<int>& explored) const {
    if (explored.empty() || generators_.empty()) return false;
    std::array<int, Graph::kMaxVertices> root{};
    for (int i = 0; i < n_; ++i) root[static_cast<std::size_t>(i)] = i;
    auto find = [&root](int x) {
      while (root[static_cast<std::size_t>(x)] != x) {
        root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
        x = root[static_cast<std::size_t>(x)];
      }
      return x;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) root[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };
    for (const auto& sigma : generators_) {
      bool fixes_path = true;
      for (int w : path_)
        if (sigma[static_cast<std::size_t>(w)] != w) {
          fixes_path = false;
          break;
        }
      if (!fixes_path) continue;
      for (int u = 0; u < n_; ++u)
        if (sigma[static_cast<std::size_t>(u)] != u) unite(u, sigma[static_cast<std::size_t>(u)]);
    }
    for (int u : explored)
      if (find(u) == find(v)) return true;
    return false;
  }

  const Graph& g_;
  int n_;
  std::array<Vset, Graph::kMaxVertices> adj_{};
  std::vector<int> path_;
  std::vector<std::vector<int>> generators_;
  std::array<Vset, Graph::kMaxVertices> best_rows_{};
  std::vector<int> best_lab_;
  bool have_best_ = false;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) { return detail::Canonicalizer(g).run(); }

// The graph relabelled into canonical position.
inline Graph canonical_graph(const Graph& g) {
  if (g.n() == 0) return g;
  return g.permuted(canonical_form(g).labeling);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  return canonical_form(a).bytes == canonical_form(b).bytes;
}

// Canonical form packed into one word: order in the top bits, the upper
// triangle of the canonical adjacency below.  Only defined through n = 10
// (10 choose 2 = 45 bits).
inline std::uint64_t canonical_code(const Graph& g) {
  if (g.n() > 10) throw argument_error("canonical_code needs n <= 10");
  Graph c = canonical_graph(g);
  std::uint64_t code = static_cast<std::uint64_t>(c.n()) << 45;
  int bit = 0;
  for (int j = 1; j < c.n(); ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (c.has_edge(i, j)) code |= std::uint64_t{1} << bit;
  return code;
}

inline Graph graph_from_code(std::uint64_t code) {
  int n = static_cast<int>(code >> 45);
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (code & (std::uint64_t{1} << bit)) g.add_edge(i, j);
  return g;
}

}  // namespace critlab

#endif
