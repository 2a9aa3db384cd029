#ifndef CRITLAB_GRAPH6_HPP
#define CRITLAB_GRAPH6_HPP

// graph6 text codec, bit-exact with the standard format for graphs on at
// most 62 vertices (single-byte order field).
//
// Layout: first byte is 63+n.  Then the upper triangle of the adjacency
// matrix, column by column ((0,1),(0,2),(1,2),(0,3),...), packed into
// 6-bit groups most significant bit first, each group stored as one
// printable byte 63+value.  K4 is "C~", K3 is "Bw", K1 is "@".

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "critlab/graph.hpp"

namespace critlab {

inline std::string to_graph6(const Graph& g) {
  std::string out;
  out.push_back(static_cast<char>(63 + g.n()));
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.n(); ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  // Tolerate the conventional ">>graph6<<" prefix and trailing whitespace.
  std::size_t base = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) base = header.size();
  std::size_t end = text.size();
  while (end > base && (text[end - 1] == '\n' || text[end - 1] == '\r' ||
                        text[end - 1] == ' ' || text[end - 1] == '\t'))
    --end;
  if (end == base) throw parse_error("empty graph6 string", base);

  unsigned char first = static_cast<unsigned char>(text[base]);
  if (first == 126)
    throw capability_error("multi-byte graph6 order field: only n <= 62 is supported");
  if (first < 63 || first > 63 + Graph::kMaxVertices)
    throw parse_error("invalid graph6 order byte", base);
  int n = first - 63;

  std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (end - base - 1 != need)
    throw parse_error("graph6 payload has wrong length", base + 1 + std::min(end - base - 1, need));

  Graph g(n);
  int acc = 0, nbits = 0;
  std::size_t pos = base + 1;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw parse_error("invalid graph6 payload byte", pos);
        acc = c - 63;
        nbits = 6;
        ++pos;
      }
      if (acc & (1 << (nbits - 1))) g.add_edge(i, j);
      --nbits;
    }
  if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
    throw parse_error("nonzero padding bits in graph6 payload", pos - 1);
  return g;
}

// One graph per line; blank lines and lines holding only the format header
// are skipped.  Parse errors are tagged with the line number.
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv = line;
    while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ')) sv.remove_suffix(1);
    if (sv.empty() || sv == ">>graph6<<") continue;
    try {
      out.push_back(from_graph6(sv));
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(lineno) + ": " + e.what(), e.offset);
    }
  }
  return out;
}

inline void write_graph6_lines(std::ostream& os, const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) os << to_graph6(g) << '\n';
}

}  // namespace critlab

#endif
