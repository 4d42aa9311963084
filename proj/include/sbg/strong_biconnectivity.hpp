#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "sbg/connectivity.hpp"
#include "sbg/graph.hpp"

namespace sbg {

/// Strongly biconnected components: within each SCC, the blocks of the
/// underlying induced graph. Components may overlap at cut vertices;
/// the arc map is the partition (inter-SCC arcs map to no component).
struct SbccDecomposition {
  std::vector<std::vector<VertexId>> components;
  int t = 0;
  std::map<Arc, int> arc_component;
};

struct BapReport {
  std::vector<VertexId> points;
  int l = 0;
};

inline bool is_strongly_biconnected(const Digraph& g) {
  return is_strongly_connected(g) && is_biconnected(underlying(g));
}

inline SbccDecomposition sbcc(const Digraph& g) {
  Partition p = scc(g);
  std::vector<std::pair<std::vector<VertexId>, std::vector<Edge>>> comps;
  for (const auto& cls : p.classes) {
    if (cls.size() == 1) {
      comps.push_back({cls, {}});
      continue;
    }
    Digraph sub = g.induced(cls);
    BlockDecomposition bd = blocks(underlying(sub));
    std::vector<std::vector<Edge>> per_block(bd.blocks.size());
    for (const auto& [e, b] : bd.edge_block) per_block[b].push_back(e);
    for (std::size_t b = 0; b < bd.blocks.size(); ++b)
      comps.push_back({bd.blocks[b], per_block[b]});
  }
  std::sort(comps.begin(), comps.end());

  SbccDecomposition d;
  d.t = static_cast<int>(comps.size());
  std::map<Edge, int> edge_comp;
  for (int i = 0; i < d.t; ++i) {
    d.components.push_back(comps[i].first);
    for (const Edge& e : comps[i].second) edge_comp[e] = i;
  }
  for (const Arc& a : g.arcs()) {
    if (p.index.at(a.first) != p.index.at(a.second)) continue;
    Edge e{std::min(a.first, a.second), std::max(a.first, a.second)};
    d.arc_component[a] = edge_comp.at(e);
  }
  return d;
}

inline BapReport b_articulation_points(const Digraph& g) {
  if (!is_strongly_biconnected(g))
    throw GraphError("input not strongly biconnected");
  BapReport r;
  for (VertexId v : g.vertices())
    if (!is_strongly_biconnected(g.remove_vertex(v))) r.points.push_back(v);
  r.l = static_cast<int>(r.points.size());
  return r;
}

/// n >= 3 and strongly biconnected after removal of any single vertex.
inline bool is_2vsb(const Digraph& g) {
  if (g.n() < 3) return false;
  if (!is_strongly_biconnected(g)) return false;
  for (VertexId v : g.vertices())
    if (!is_strongly_biconnected(g.remove_vertex(v))) return false;
  return true;
}

}  // namespace sbg
