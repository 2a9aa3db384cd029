#ifndef CRITLAB_TESTS_ORACLES_HPP
#define CRITLAB_TESTS_ORACLES_HPP

// Independent brute-force reference implementations.  Deliberately naive:
// these exist so the real algorithms have something dumb and obviously
// correct to disagree with.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "critlab/graph.hpp"
#include "critlab/graph6.hpp"

namespace oracles {

using critlab::Graph;
using critlab::Vset;

// Minimum graph6 string over all n! relabellings.  Usable through n = 7.
inline std::string brute_canonical(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.n()));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s = critlab::to_graph6(g.permuted(perm));
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best.empty()) best = critlab::to_graph6(g);
  return best;
}

// Proper k-colouring by scanning all k^n assignments.
inline bool brute_colorable(const Graph& g, int k) {
  int n = g.n();
  if (n == 0) return true;
  std::vector<int> col(static_cast<std::size_t>(n), 0);
  while (true) {
    bool proper = true;
    for (auto [u, v] : g.edges())
      if (col[static_cast<std::size_t>(u)] == col[static_cast<std::size_t>(v)]) {
        proper = false;
        break;
      }
    if (proper) return true;
    int i = 0;
    while (i < n && ++col[static_cast<std::size_t>(i)] == k) col[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return false;
  }
}

// Largest family of pairwise vertex-disjoint r-cliques, by trying every
// subset of the clique list.
inline int brute_packing_number(const Graph& g, int r) {
  std::vector<Vset> cliques;
  auto extend = [&](auto&& self, Vset cur, int last, int depth) -> void {
    if (depth == r) {
      cliques.push_back(cur);
      return;
    }
    for (int v = last + 1; v < g.n(); ++v) {
      bool ok = true;
      for (Vset t = cur; t; t &= t - 1)
        if (!g.has_edge(critlab::lowest_bit(t), v)) {
          ok = false;
          break;
        }
      if (ok) self(self, cur | critlab::vbit(v), v, depth + 1);
    }
  };
  extend(extend, 0, -1, 0);

  auto best = [&](auto&& self, std::size_t i, Vset used) -> int {
    if (i == cliques.size()) return 0;
    int skip = self(self, i + 1, used);
    if (cliques[i] & used) return skip;
    return std::max(skip, 1 + self(self, i + 1, used | cliques[i]));
  };
  return best(best, 0, 0);
}

}  // namespace oracles

#endif
