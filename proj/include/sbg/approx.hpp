#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "sbg/connectivity.hpp"
#include "sbg/graph.hpp"
#include "sbg/sparsify.hpp"
#include "sbg/strong_biconnectivity.hpp"

namespace sbg {

enum class ApproxMethod { alg1, union_construction };

struct AugmentStep {
  Arc arc;
  int components_before;  // t of the b-deleted subgraph when the arc was picked
};

struct BapTrace {
  VertexId b;
  std::vector<AugmentStep> steps;
};

struct ApproxResult {
  std::vector<Arc> arcs;  // E_2s
  int l = 0;              // b-articulation points of the core
  int bound = 0;          // l*(n-1) + 4n
  std::vector<BapTrace> trace;
  ApproxMethod method = ApproxMethod::alg1;
};

struct UnionResult {
  std::vector<Arc> core_arcs;         // L, minimal 2-vertex-connected
  std::vector<Edge> undirected_edges; // U, minimal 3-vertex-connected
  std::vector<Arc> lifted_arcs;       // A = arcs of E whose underlying edge is in U
  std::vector<Arc> union_arcs;        // L ∪ A
};

struct BoundReport {
  int n = 0, m = 0, l = 0;
  int result_size = 0;
  int bound = 0;
  int lower_bound = 0;
  std::optional<int> exact_size;
  double ratio = 0.0;
};

namespace detail {

inline bool same_sbcc(const SbccDecomposition& d, VertexId u, VertexId w) {
  for (const auto& comp : d.components)
    if (std::binary_search(comp.begin(), comp.end(), u) &&
        std::binary_search(comp.begin(), comp.end(), w))
      return true;
  return false;
}

}  // namespace detail

/// Grows `current` until the subgraph minus b is strongly biconnected.
/// Each round takes the lexicographically smallest arc outside the
/// current set, not incident to b, whose endpoints lie in different
/// strongly biconnected components of the b-deleted subgraph.
inline std::vector<AugmentStep> augment_for_bap(const Digraph& g,
                                                std::vector<Arc>& current,
                                                VertexId b) {
  if (!g.has_vertex(b)) throw GraphError("unknown vertex " + std::to_string(b));
  std::set<Arc> in_current(current.begin(), current.end());
  std::vector<AugmentStep> steps;
  while (true) {
    Digraph h = g.subgraph_with_arcs(current).remove_vertex(b);
    if (is_strongly_biconnected(h)) break;
    SbccDecomposition d = sbcc(h);
    bool added = false;
    for (const Arc& a : g.arcs()) {
      if (in_current.count(a)) continue;
      if (a.first == b || a.second == b) continue;
      if (detail::same_sbcc(d, a.first, a.second)) continue;
      current.insert(std::lower_bound(current.begin(), current.end(), a), a);
      in_current.insert(a);
      steps.push_back({a, d.t});
      added = true;
      break;
    }
    if (!added)
      throw GraphError("input graph is not 2-vertex strongly biconnected");
  }
  return steps;
}

/// Minimal 2-vertex-connected core plus per-b-articulation-point
/// augmentation. Output is 2-vertex strongly biconnected with
/// |arcs| <= l(n-1) + 4n.
inline ApproxResult approx_m2vsbss_alg1(const Digraph& g,
                                        const DeletionOrder& order) {
  if (!is_2vsb(g))
    throw GraphError("input not 2-vertex strongly biconnected");
  ApproxResult r;
  r.method = ApproxMethod::alg1;
  std::vector<Arc> core = minimal_2vc_subgraph(g, order);
  Digraph core_graph = g.subgraph_with_arcs(core);
  BapReport bap = b_articulation_points(core_graph);  // core is strongly biconnected
  r.l = bap.l;
  r.bound = r.l * (g.n() - 1) + 4 * g.n();
  r.arcs = std::move(core);
  if (bap.l > 0) {
    for (VertexId b : bap.points) {
      BapTrace t{b, augment_for_bap(g, r.arcs, b)};
      r.trace.push_back(std::move(t));
    }
    if (!is_2vsb(g.subgraph_with_arcs(r.arcs)))
      throw GraphError("augmentation failed to reach 2-vertex strong biconnectivity");
  }
  return r;
}

/// L ∪ A construction: minimal 2-vertex-connected directed core plus
/// the arcs lying over a minimal 3-vertex-connected undirected
/// subgraph. |L ∪ A| <= 7n.
inline UnionResult union_algorithm(const Digraph& g, const DeletionOrder& order) {
  if (g.n() < 4)
    throw GraphError("union construction requires n >= 4");
  if (!is_2vsb(g))
    throw GraphError("input not 2-vertex strongly biconnected");
  UnionResult r;
  r.core_arcs = minimal_2vc_subgraph(g, order);
  r.undirected_edges = minimal_3vc_subgraph(underlying(g), order);
  std::set<Edge> in_u(r.undirected_edges.begin(), r.undirected_edges.end());
  for (const Arc& a : g.arcs())
    if (in_u.count({std::min(a.first, a.second), std::max(a.first, a.second)}))
      r.lifted_arcs.push_back(a);
  r.union_arcs = r.core_arcs;
  r.union_arcs.insert(r.union_arcs.end(), r.lifted_arcs.begin(), r.lifted_arcs.end());
  std::sort(r.union_arcs.begin(), r.union_arcs.end());
  r.union_arcs.erase(std::unique(r.union_arcs.begin(), r.union_arcs.end()),
                     r.union_arcs.end());
  return r;
}

inline BoundReport bound_report(const Digraph& g, const ApproxResult& r,
                                std::optional<int> exact_size = std::nullopt) {
  BoundReport rep;
  rep.n = g.n();
  rep.m = g.m();
  rep.l = r.l;
  rep.result_size = static_cast<int>(r.arcs.size());
  rep.bound = r.bound;
  rep.lower_bound = 2 * g.n();
  rep.exact_size = exact_size;
  int denom = std::max(rep.lower_bound, exact_size.value_or(rep.lower_bound));
  rep.ratio = denom > 0 ? static_cast<double>(rep.result_size) / denom : 0.0;
  return rep;
}

}  // namespace sbg
