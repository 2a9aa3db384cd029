#ifndef CRITLAB_POTENTIAL_HPP
#define CRITLAB_POTENTIAL_HPP

// Potentials, the quotient-by-colouring operation, extraction of the
// extension/extender/source triple, the counting and potential-extension
// inequalities, and the main classification of 4-critical graphs.

#include <optional>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "catalog.hpp"
#include "cliques.hpp"
#include "coloring.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "ore.hpp"

namespace critlab {

struct PotentialParams {
  int a = 5;
  int b = 3;
  int c = 1;
  int k = 4;
};

// The (a,b,c)-potential a*v - b*e - c*T^{k-1}.
inline int potential(const Graph& g, const PotentialParams& p = {}) {
  return p.a * g.n() - p.b * g.m() - p.c * packing_number(g, p.k - 1);
}

inline int ky_potential(const Graph& g) { return 5 * g.n() - 3 * g.m(); }

// Bookkeeping constant from the subgraph-potential argument: the minimum
// potential a source on 1, 2, or 3 vertices can account for.
inline int proof_ledger_f(int source_order) {
  switch (source_order) {
    case 1: return 5;
    case 2: return 7;
    case 3: return 6;
  }
  throw argument_error("ledger is defined on source orders 1..3");
}

// --- quotient ------------------------------------------------------------

// Quotient of g by a proper colouring f of the induced subgraph on F.
// Outside vertices keep their relative order at indices 0..n_out-1; one
// vertex per non-empty colour class is appended after them.
struct QuotientResult {
  Graph quotient;
  std::vector<int> outside_map;    // g vertex -> quotient vertex, -1 inside F
  std::vector<int> class_vertex;   // colour -> quotient vertex, -1 if class empty
  std::vector<Vset> originals;     // quotient vertex -> original class, 0 for outside
  int outside_count = 0;

  Vset class_vertices() const {
    Vset s = 0;
    for (int c : class_vertex)
      if (c >= 0) s |= vbit(c);
    return s;
  }
};

inline QuotientResult quotient(const Graph& g, Vset F, const Coloring& f) {
  if ((F & ~(vbit(g.n()) - 1)) != 0) throw argument_error("F contains vertices outside g");
  if (popcount(F) == g.n()) throw argument_error("F must induce a strict subgraph");

  int max_colour = -1;
  for (Vset r = F; r; r &= r - 1) {
    int v = lowest_bit(r);
    if (v >= static_cast<int>(f.size()) || f[v] < 0)
      throw argument_error("colouring must cover every vertex of F");
    max_colour = std::max(max_colour, f[v]);
  }
  for (Vset r = F; r; r &= r - 1) {
    int v = lowest_bit(r);
    for (Vset nb = g.neighbors(v) & F; nb; nb &= nb - 1)
      if (f[lowest_bit(nb)] == f[v]) throw argument_error("colouring is not proper on F");
  }

  QuotientResult out;
  out.outside_map.assign(g.n(), -1);
  int next = 0;
  for (int v = 0; v < g.n(); ++v)
    if (!(F & vbit(v))) out.outside_map[v] = next++;
  out.outside_count = next;

  out.class_vertex.assign(max_colour + 1, -1);
  std::vector<Vset> classes;
  for (int colour = 0; colour <= max_colour; ++colour) {
    Vset members = 0;
    for (Vset r = F; r; r &= r - 1)
      if (f[lowest_bit(r)] == colour) members |= vbit(lowest_bit(r));
    if (!members) continue;  // empty classes produce no vertex
    out.class_vertex[colour] = next++;
    classes.push_back(members);
  }

  Graph q(next);
  out.originals.assign(next, 0);
  for (std::size_t i = 0; i < classes.size(); ++i)
    out.originals[out.outside_count + static_cast<int>(i)] = classes[i];

  for (auto [u, v] : g.edges()) {
    int qu = (F & vbit(u)) ? -1 : out.outside_map[u];
    int qv = (F & vbit(v)) ? -1 : out.outside_map[v];
    if (qu < 0) qu = out.class_vertex[f[u]];
    if (qv < 0) qv = out.class_vertex[f[v]];
    if (qu != qv && !q.has_edge(qu, qv)) q.add_edge(qu, qv);
  }
  out.quotient = std::move(q);
  return out;
}

// The explicit map behind "G has a homomorphism to its quotient": outside
// vertices to themselves, F members to their class vertex.  True when that
// map really is a homomorphism.
inline bool quotient_homomorphism_ok(const Graph& g, Vset F, const Coloring& f,
                                     const QuotientResult& q) {
  auto image = [&](int v) {
    return (F & vbit(v)) ? q.class_vertex[f[v]] : q.outside_map[v];
  };
  for (auto [u, v] : g.edges()) {
    int iu = image(u), iv = image(v);
    if (iu == iv || !q.quotient.has_edge(iu, iv)) return false;
  }
  return true;
}

// --- extension / extender / source ---------------------------------------

struct ExtensionTriple {
  Graph host;            // g
  Vset F;                // in g
  Graph F_induced;
  QuotientResult q;
  Graph W;               // 4-critical subgraph of the quotient, own labels
  Vset W_vertices;       // in quotient labels
  Vset X;                // source, in W labels
  Graph X_induced;       // induced in W
  Graph extension;       // F', induced in g
  Vset extension_vertices;
};

// Deterministic 4-critical subgraph of a non-3-colourable graph: delete
// edges in ascending order whenever the remainder stays non-3-colourable,
// then drop isolated vertices.
namespace detail {

inline std::pair<Graph, Vset> critical_subgraph(const Graph& q) {
  Graph w = q;
  for (auto [u, v] : q.edges()) {
    Graph trial = w.without_edge(u, v);
    if (!colorable(trial, 3)) w = std::move(trial);
  }
  Vset keep = 0;
  for (int v = 0; v < w.n(); ++v)
    if (w.degree(v) > 0) keep |= vbit(v);
  return {w.induced(keep), keep};
}

}  // namespace detail

// Builds the triple from an explicitly chosen extender: `w_vertices` are the
// quotient vertices of W and `w` the subgraph on them (relabelled ascending).
inline ExtensionTriple make_extension(const Graph& g, Vset F, const Coloring& f,
                                      QuotientResult q, Graph w, Vset w_vertices) {
  ExtensionTriple t;
  t.host = g;
  t.F = F;
  t.F_induced = g.induced(F);
  t.q = std::move(q);
  t.W = std::move(w);
  t.W_vertices = w_vertices;

  t.X = 0;
  Vset class_set = t.q.class_vertices();
  int idx = 0;
  for (Vset r = w_vertices; r; r &= r - 1, ++idx)
    if (class_set & vbit(lowest_bit(r))) t.X |= vbit(idx);
  t.X_induced = t.W.induced(t.X);

  // F' = G[V(F) plus the originals of W's outside vertices].
  t.extension_vertices = F;
  for (Vset r = w_vertices & ~class_set; r; r &= r - 1) {
    int qv = lowest_bit(r);
    for (int v = 0; v < g.n(); ++v)
      if (t.q.outside_map[v] == qv) t.extension_vertices |= vbit(v);
  }
  t.extension = g.induced(t.extension_vertices);
  return t;
}

// Quotients g by f and extracts a deterministic extender.  Absent only when
// the quotient is 3-colourable, which cannot happen for 4-critical g.
inline std::optional<ExtensionTriple> find_extension(const Graph& g, Vset F, const Coloring& f) {
  QuotientResult q = quotient(g, F, f);
  if (colorable(q.quotient, 3)) return std::nullopt;
  auto [w, keep] = detail::critical_subgraph(q.quotient);
  return make_extension(g, F, f, std::move(q), std::move(w), keep);
}

// --- the counting and potential-extension inequalities -------------------

struct PotentialExtensionReport {
  int p_f = 0, p_w = 0, p_ext = 0;
  int v_x = 0, e_x = 0;
  int t_w = 0, t_w_minus_x = 0;
  bool counting_v = false;      // v(F') = v(F) + v(W) - v(X)
  bool counting_e = false;      // e(F') >= e(F) + e(W) - e(X)
  bool counting_t = false;      // T(F') >= T(F) + T(W \ X)
  bool packing_split = false;   // T(W) <= T(W \ X) + v(X)
  int slack_t = 0;              // T-difference form
  int slack_v = 0;              // v(X)-relaxed form
  bool outside_vertex = false;  // W has a vertex outside the source

  bool pass() const {
    return counting_v && counting_e && counting_t && packing_split && slack_t >= 0 &&
           slack_v >= 0 && outside_vertex;
  }
};

inline PotentialExtensionReport check_potential_extension(const ExtensionTriple& t,
                                                          const PotentialParams& params = {}) {
  PotentialExtensionReport r;
  int rr = params.k - 1;
  r.p_f = potential(t.F_induced, params);
  r.p_w = potential(t.W, params);
  r.p_ext = potential(t.extension, params);
  r.v_x = popcount(t.X);
  r.e_x = t.X_induced.m();
  r.t_w = packing_number(t.W, rr);
  Graph w_minus_x = t.W.without_vertices(t.X);
  r.t_w_minus_x = packing_number(w_minus_x, rr);

  r.counting_v = t.extension.n() == t.F_induced.n() + t.W.n() - r.v_x;
  r.counting_e = t.extension.m() >= t.F_induced.m() + t.W.m() - r.e_x;
  r.counting_t = packing_number(t.extension, rr) >=
                 packing_number(t.F_induced, rr) + r.t_w_minus_x;
  r.packing_split = r.t_w <= r.t_w_minus_x + r.v_x;

  int bound_t = r.p_f + r.p_w - params.a * r.v_x + params.b * r.e_x +
                params.c * r.t_w - params.c * r.t_w_minus_x;
  int bound_v = r.p_f + r.p_w - params.a * r.v_x + params.b * r.e_x + params.c * r.v_x;
  r.slack_t = bound_t - r.p_ext;
  r.slack_v = bound_v - r.p_ext;
  r.outside_vertex = (t.W_vertices & ~t.q.class_vertices()) != 0;
  return r;
}

// --- classification -------------------------------------------------------

enum class CriticalClass { K4, FourOreT2, W5, ClassB, FourOreT3, Other };

struct Classification {
  CriticalClass cls = CriticalClass::Other;
  int p = 0;
  int t3 = 0;
  bool consistent = false;  // the potential matches the class's required value
};

inline const char* to_string(CriticalClass c) {
  switch (c) {
    case CriticalClass::K4: return "K4";
    case CriticalClass::FourOreT2: return "4-ore-T2";
    case CriticalClass::W5: return "W5";
    case CriticalClass::ClassB: return "class-B";
    case CriticalClass::FourOreT3: return "4-ore-T3";
    case CriticalClass::Other: return "other";
  }
  return "?";
}

// Classifies a 4-critical graph into the exceptional-potential classes and
// checks the classification's potential value: 1 for K4; 0 for 4-Ore with
// two disjoint triangles; -1 for W5, class B, and 4-Ore with three; at most
// -2 for everything else.
inline Classification classify_critical(const Graph& g) {
  if (!is_k_critical(g, 4).is_critical) throw argument_error("graph is not 4-critical");
  Classification c;
  c.p = potential(g);
  c.t3 = packing_number(g, 3);

  if (g.n() == 4) {
    c.cls = CriticalClass::K4;
    c.consistent = c.p == 1;
  } else if (isomorphic(g, catalog(NamedGraph::W5))) {
    c.cls = CriticalClass::W5;
    c.consistent = c.p == -1;
  } else if (is_k_ore(g, 4)) {
    if (c.t3 == 2) {
      c.cls = CriticalClass::FourOreT2;
      c.consistent = c.p == 0;
    } else if (c.t3 == 3) {
      c.cls = CriticalClass::FourOreT3;
      c.consistent = c.p == -1;
    } else {
      c.cls = CriticalClass::Other;
      c.consistent = c.p <= -2;
    }
  } else if (is_class_b(g)) {
    c.cls = CriticalClass::ClassB;
    c.consistent = c.p == -1;
  } else {
    c.cls = CriticalClass::Other;
    c.consistent = c.p <= -2;
  }
  return c;
}

}  // namespace critlab

#endif  // CRITLAB_POTENTIAL_HPP
