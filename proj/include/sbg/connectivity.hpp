#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "sbg/graph.hpp"

namespace sbg {

/// Vertex partition (e.g. strongly connected components). Classes are
/// sorted internally and ordered by smallest member.
struct Partition {
  std::vector<std::vector<VertexId>> classes;
  std::map<VertexId, int> index;
};

/// Block/cut-vertex decomposition of an undirected graph. Each block is
/// a maximal 2-connected subgraph or a bridge edge; isolated vertices
/// form singleton blocks. edge_block maps every edge to its block.
struct BlockDecomposition {
  std::vector<std::vector<VertexId>> blocks;
  std::vector<VertexId> articulation_points;
  std::map<Edge, int> edge_block;
};

namespace detail {

// Tarjan SCC over dense out-adjacency; skip < 0 means no vertex skipped.
struct TarjanScc {
  const std::vector<std::vector<int>>& adj;
  int skip;
  std::vector<int> num, low, comp, stack;
  std::vector<char> on_stack;
  int counter = 0, ncomp = 0;

  explicit TarjanScc(const std::vector<std::vector<int>>& a, int skip_ = -1)
      : adj(a), skip(skip_), num(a.size(), -1), low(a.size(), 0),
        comp(a.size(), -1), on_stack(a.size(), 0) {}

  void run() {
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
      if (v != skip && num[v] == -1) dfs(v);
  }

  void dfs(int v) {
    num[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int w : adj[v]) {
      if (w == skip) continue;
      if (num[w] == -1) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], num[w]);
      }
    }
    if (low[v] == num[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = ncomp;
      } while (w != v);
      ++ncomp;
    }
  }
};

inline bool strongly_connected_dense(const std::vector<std::vector<int>>& out,
                                     int skip = -1) {
  int n = static_cast<int>(out.size());
  int active = 0;
  for (int v = 0; v < n; ++v)
    if (v != skip) ++active;
  if (active == 0) return false;
  TarjanScc t(out, skip);
  t.run();
  return t.ncomp == 1;
}

// Articulation points / biconnectivity over dense undirected adjacency.
struct ArtDfs {
  const std::vector<std::vector<int>>& adj;
  int skip;
  std::vector<int> num, low, parent;
  std::vector<char> is_ap;
  int counter = 0;

  explicit ArtDfs(const std::vector<std::vector<int>>& a, int skip_ = -1)
      : adj(a), skip(skip_), num(a.size(), -1), low(a.size(), 0),
        parent(a.size(), -1), is_ap(a.size(), 0) {}

  void dfs(int v) {
    num[v] = low[v] = counter++;
    int children = 0;
    for (int w : adj[v]) {
      if (w == skip || w == v) continue;
      if (num[w] == -1) {
        parent[w] = v;
        ++children;
        dfs(w);
        low[v] = std::min(low[v], low[w]);
        if (parent[v] != -1 && low[w] >= num[v]) is_ap[v] = 1;
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], num[w]);
      }
    }
    if (parent[v] == -1 && children >= 2) is_ap[v] = 1;
  }
};

// Connected after deleting up to two vertices; false on empty remainder.
inline bool connected_dense(const std::vector<std::vector<int>>& adj,
                            int skip1 = -1, int skip2 = -1) {
  int n = static_cast<int>(adj.size());
  int start = -1, active = 0;
  for (int v = 0; v < n; ++v)
    if (v != skip1 && v != skip2) {
      ++active;
      if (start == -1) start = v;
    }
  if (active == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> queue{start};
  seen[start] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int w : adj[v]) {
      if (w == skip1 || w == skip2 || seen[w]) continue;
      seen[w] = 1;
      ++reached;
      queue.push_back(w);
    }
  }
  return reached == active;
}

// Connected with no articulation point; single vertex and K2 count as
// biconnected. skip removes one vertex from consideration.
inline bool biconnected_dense(const std::vector<std::vector<int>>& adj,
                              int skip = -1) {
  if (!connected_dense(adj, skip)) return false;
  ArtDfs a(adj, skip);
  for (int v = 0; v < static_cast<int>(adj.size()); ++v)
    if (v != skip && a.num[v] == -1) a.dfs(v);
  for (int v = 0; v < static_cast<int>(adj.size()); ++v)
    if (v != skip && a.is_ap[v]) return false;
  return true;
}

}  // namespace detail

inline Partition scc(const Digraph& g) {
  detail::TarjanScc t(g.out_adj());
  t.run();
  std::vector<std::vector<VertexId>> classes(t.ncomp);
  for (int i = 0; i < g.n(); ++i)
    classes[t.comp[i]].push_back(g.vertices()[i]);
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  Partition p;
  p.classes = std::move(classes);
  for (int i = 0; i < static_cast<int>(p.classes.size()); ++i)
    for (VertexId v : p.classes[i]) p.index[v] = i;
  return p;
}

inline bool is_strongly_connected(const Digraph& g) {
  if (g.n() == 0) return false;
  return detail::strongly_connected_dense(g.out_adj());
}

inline BlockDecomposition blocks(const UGraph& ug) {
  int n = ug.n();
  const auto& adj = ug.adj();
  BlockDecomposition result;

  std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> is_ap(n, 0);
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<std::pair<int, int>>> block_edges;
  int counter = 0;

  // Hopcroft-Tarjan with an explicit edge stack; recursive helper.
  struct Dfs {
    const std::vector<std::vector<int>>& adj;
    std::vector<int>& num;
    std::vector<int>& low;
    std::vector<int>& parent;
    std::vector<char>& is_ap;
    std::vector<std::pair<int, int>>& edge_stack;
    std::vector<std::vector<std::pair<int, int>>>& block_edges;
    int& counter;

    void run(int v) {
      num[v] = low[v] = counter++;
      int children = 0;
      for (int w : adj[v]) {
        if (num[w] == -1) {
          parent[w] = v;
          ++children;
          edge_stack.emplace_back(v, w);
          run(w);
          low[v] = std::min(low[v], low[w]);
          if (low[w] >= num[v]) {
            if (parent[v] != -1) is_ap[v] = 1;
            std::vector<std::pair<int, int>> blk;
            while (true) {
              auto e = edge_stack.back();
              edge_stack.pop_back();
              blk.push_back(e);
              if (e.first == v && e.second == w) break;
            }
            block_edges.push_back(std::move(blk));
          }
        } else if (w != parent[v] && num[w] < num[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], num[w]);
        }
      }
      if (parent[v] == -1 && children >= 2) is_ap[v] = 1;
    }
  };

  Dfs dfs{adj, num, low, parent, is_ap, edge_stack, block_edges, counter};
  for (int v = 0; v < n; ++v)
    if (num[v] == -1) {
      dfs.run(v);
      if (adj[v].empty()) block_edges.push_back({});  // isolated: singleton block
    }

  // Assemble blocks with external labels; singleton marker carries the root.
  int iso_cursor = 0;
  std::vector<std::pair<std::vector<VertexId>, std::vector<Edge>>> assembled;
  std::vector<int> iso_roots;
  for (int v = 0; v < n; ++v)
    if (adj[v].empty()) iso_roots.push_back(v);
  for (auto& blk : block_edges) {
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    if (blk.empty()) {
      vs.push_back(ug.vertices()[iso_roots[iso_cursor++]]);
    } else {
      for (auto& e : blk) {
        VertexId a = ug.vertices()[e.first], b = ug.vertices()[e.second];
        vs.push_back(a);
        vs.push_back(b);
        es.emplace_back(std::min(a, b), std::max(a, b));
      }
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      std::sort(es.begin(), es.end());
      es.erase(std::unique(es.begin(), es.end()), es.end());
    }
    assembled.emplace_back(std::move(vs), std::move(es));
  }
  std::sort(assembled.begin(), assembled.end());
  for (int i = 0; i < static_cast<int>(assembled.size()); ++i) {
    result.blocks.push_back(assembled[i].first);
    for (const Edge& e : assembled[i].second) result.edge_block[e] = i;
  }
  for (int v = 0; v < n; ++v)
    if (is_ap[v]) result.articulation_points.push_back(ug.vertices()[v]);
  std::sort(result.articulation_points.begin(), result.articulation_points.end());
  return result;
}

inline bool is_biconnected(const UGraph& ug) {
  if (ug.n() == 0) return false;
  return detail::biconnected_dense(ug.adj());
}

/// n >= 3, strongly connected, and strongly connected after removal of
/// any single vertex.
inline bool is_2vc_digraph(const Digraph& g) {
  if (g.n() < 3) return false;
  if (!detail::strongly_connected_dense(g.out_adj())) return false;
  for (int v = 0; v < g.n(); ++v)
    if (!detail::strongly_connected_dense(g.out_adj(), v)) return false;
  return true;
}

/// n >= 4, connected, and connected after deleting any vertex pair.
inline bool is_3vc_ugraph(const UGraph& ug) {
  if (ug.n() < 4) return false;
  if (!detail::connected_dense(ug.adj())) return false;
  for (int u = 0; u < ug.n(); ++u)
    for (int v = u + 1; v < ug.n(); ++v)
      if (!detail::connected_dense(ug.adj(), u, v)) return false;
  return true;
}

}  // namespace sbg
