#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sbg/connectivity.hpp"
#include "sbg/graph.hpp"

namespace sbg {

enum class OrderMode { input, lexicographic, random };

/// Fully determines the edge visitation sequence of the greedy passes.
struct DeletionOrder {
  OrderMode mode = OrderMode::lexicographic;
  std::uint64_t seed = 0;
};

namespace detail {

// Visitation order over m items. Graphs store arcs canonically, so
// input and lexicographic coincide; random shuffles with the seed.
inline std::vector<int> visit_order(int m, const DeletionOrder& order) {
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  if (order.mode == OrderMode::random) {
    std::mt19937_64 rng(order.seed);
    for (int i = m - 1; i > 0; --i)
      std::swap(idx[i], idx[rng() % (i + 1)]);
  }
  return idx;
}

}  // namespace detail

/// Inclusion-minimal 2-vertex-connected spanning subgraph by greedy arc
/// deletion. Monotonicity of the predicate makes one pass sufficient.
inline std::vector<Arc> minimal_2vc_subgraph(const Digraph& g,
                                             const DeletionOrder& order) {
  if (!is_2vc_digraph(g)) throw GraphError("input not 2-vertex-connected");
  std::vector<char> kept(g.m(), 1);
  for (int i : detail::visit_order(g.m(), order)) {
    kept[i] = 0;
    std::vector<Arc> candidate;
    for (int j = 0; j < g.m(); ++j)
      if (kept[j]) candidate.push_back(g.arcs()[j]);
    if (!is_2vc_digraph(Digraph(g.vertices(), std::move(candidate))))
      kept[i] = 1;
  }
  std::vector<Arc> result;
  for (int j = 0; j < g.m(); ++j)
    if (kept[j]) result.push_back(g.arcs()[j]);
  return result;
}

/// Inclusion-minimal 3-vertex-connected spanning subgraph of an
/// undirected graph, same greedy scheme.
inline std::vector<Edge> minimal_3vc_subgraph(const UGraph& ug,
                                              const DeletionOrder& order) {
  if (!is_3vc_ugraph(ug))
    throw GraphError("underlying graph not 3-vertex-connected");
  std::vector<char> kept(ug.m(), 1);
  for (int i : detail::visit_order(ug.m(), order)) {
    kept[i] = 0;
    std::vector<Edge> candidate;
    for (int j = 0; j < ug.m(); ++j)
      if (kept[j]) candidate.push_back(ug.edges()[j]);
    if (!is_3vc_ugraph(UGraph(ug.vertices(), std::move(candidate))))
      kept[i] = 1;
  }
  std::vector<Edge> result;
  for (int j = 0; j < ug.m(); ++j)
    if (kept[j]) result.push_back(ug.edges()[j]);
  return result;
}

}  // namespace sbg
