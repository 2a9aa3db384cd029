#ifndef CRITLAB_CATALOG_HPP
#define CRITLAB_CATALOG_HPP

// Named graphs used as test anchors and family seeds, with fixed labels.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critlab/graph.hpp"

namespace critlab {

enum class NamedGraph { K4, K3, C5, W5, MoserSpindle, T8, Grotzsch };

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph catalog(NamedGraph which) {
  switch (which) {
    case NamedGraph::K4:
      return complete_graph(4);
    case NamedGraph::K3:
      return complete_graph(3);
    case NamedGraph::C5:
      return cycle_graph(5);
    case NamedGraph::W5: {
      // Rim 0..4, hub 5.
      Graph g = cycle_graph(5);
      g = g.with_new_vertex(g.vertices());
      return g;
    }
    case NamedGraph::MoserSpindle:
      // Ore composition of two K4s; vertex 1 is the unique degree-4 vertex,
      // the two kite spars are (2,3) and (5,6).
      return Graph::from_edges(7, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5},
                                   {1, 6}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    case NamedGraph::T8:
      // Vertices 0,1 have degree four; (0,1) is the unique foundational edge.
      return Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                                   {2, 7}, {3, 6}, {4, 5}, {5, 6}, {5, 7}, {6, 7}});
    case NamedGraph::Grotzsch: {
      // Mycielski construction over C5: cycle 0..4, shadow vertices 5..9
      // (5+i covers the cycle neighbours of i), apex 10.
      Graph g = cycle_graph(5);
      for (int i = 0; i < 5; ++i) g = g.with_new_vertex(vbit((i + 4) % 5) | vbit((i + 1) % 5));
      g = g.with_new_vertex(vbit(5) | vbit(6) | vbit(7) | vbit(8) | vbit(9));
      return g;
    }
  }
  throw argument_error("unknown catalog entry");
}

inline std::optional<NamedGraph> named_graph_by_name(std::string_view name) {
  if (name == "k4" || name == "K4") return NamedGraph::K4;
  if (name == "k3" || name == "K3") return NamedGraph::K3;
  if (name == "c5" || name == "C5") return NamedGraph::C5;
  if (name == "w5" || name == "W5") return NamedGraph::W5;
  if (name == "moser" || name == "spindle" || name == "moser-spindle") return NamedGraph::MoserSpindle;
  if (name == "t8" || name == "T8") return NamedGraph::T8;
  if (name == "grotzsch" || name == "groetzsch" || name == "mycielski4") return NamedGraph::Grotzsch;
  return std::nullopt;
}

inline const std::vector<std::pair<std::string, NamedGraph>>& catalog_entries() {
  static const std::vector<std::pair<std::string, NamedGraph>> entries = {
      {"k4", NamedGraph::K4},           {"k3", NamedGraph::K3},
      {"c5", NamedGraph::C5},           {"w5", NamedGraph::W5},
      {"moser", NamedGraph::MoserSpindle}, {"t8", NamedGraph::T8},
      {"grotzsch", NamedGraph::Grotzsch}};
  return entries;
}

}  // namespace critlab

#endif
