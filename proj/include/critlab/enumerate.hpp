#ifndef CRITLAB_ENUMERATE_HPP
#define CRITLAB_ENUMERATE_HPP

// Isomorph-free generation of all graphs on n <= 10 vertices: each level
// extends the previous one by a new vertex over every neighbourhood subset,
// then dedups by canonical code.  Levels stay small enough (12,005,168
// classes at n = 10) that generate-then-dedup is fine.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "critlab/canonical.hpp"
#include "critlab/graph.hpp"

namespace critlab {

struct EnumOptions {
  // When true the filter is promised to be closed under induced subgraphs,
  // so filtered-out graphs are dropped mid-generation instead of only at
  // the end.  (Deleting the newest vertex of a child gives back its parent,
  // which makes the pruning exhaustive for hereditary properties.)
  bool hereditary = false;
};

using GraphFilter = std::function<bool(const Graph&)>;
using GraphSink = std::function<void(const Graph&)>;

// Streams one representative per isomorphism class of graphs on exactly n
// vertices that satisfy `filter` (pass nullptr for all graphs), in
// canonical-code order.  Returns how many were emitted.
inline long enumerate_graphs(int n, const GraphFilter& filter, const GraphSink& sink,
                             const EnumOptions& opt = {}) {
  if (n < 1) throw argument_error("enumeration needs n >= 1");
  if (n > 10)
    throw capability_error("built-in enumeration stops at n = 10; supply an external corpus");

  std::vector<std::uint64_t> level = {canonical_code(Graph(1))};
  if (opt.hereditary && filter && !filter(Graph(1))) level.clear();

  for (int sz = 2; sz <= n; ++sz) {
    std::unordered_set<std::uint64_t> next;
    next.reserve(level.size() * 8);
    for (std::uint64_t code : level) {
      Graph parent = graph_from_code(code);
      Vset all = parent.vertices();
      for (Vset nbrs = 0;; ++nbrs) {
        Graph child = parent.with_new_vertex(nbrs);
        if (!opt.hereditary || !filter || filter(child)) next.insert(canonical_code(child));
        if (nbrs == all) break;
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }

  long emitted = 0;
  for (std::uint64_t code : level) {
    Graph g = graph_from_code(code);
    if (filter && !filter(g)) continue;  // no-op for hereditary mode, already pruned
    ++emitted;
    if (sink) sink(g);
  }
  return emitted;
}

// All graphs with 1..max_n vertices satisfying the filter.
inline std::vector<Graph> enumerate_up_to(int max_n, const GraphFilter& filter,
                                          const EnumOptions& opt = {}) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    enumerate_graphs(n, filter, [&out](const Graph& g) { out.push_back(g); }, opt);
  return out;
}

}  // namespace critlab

#endif
