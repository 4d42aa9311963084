#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sbg {

using VertexId = int;
using Arc = std::pair<VertexId, VertexId>;   // (tail, head)
using Edge = std::pair<VertexId, VertexId>;  // stored with first < second

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple directed graph with external non-negative integer
/// vertex labels. Vertices iterate in ascending label order, arcs in
/// lexicographic (tail, head) order. Internally labels map to dense
/// indices 0..n-1.
class Digraph {
 public:
  Digraph() = default;

  Digraph(std::vector<VertexId> vertices, std::vector<Arc> arcs) {
    for (const Arc& a : arcs) {
      if (a.first == a.second)
        throw GraphError("self-loop " + std::to_string(a.first) + " -> " +
                         std::to_string(a.second));
      vertices.push_back(a.first);
      vertices.push_back(a.second);
    }
    for (VertexId v : vertices)
      if (v < 0) throw GraphError("negative vertex label " + std::to_string(v));
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    verts_ = std::move(vertices);
    arcs_ = std::move(arcs);
    for (int i = 0; i < static_cast<int>(verts_.size()); ++i) index_[verts_[i]] = i;
    out_.assign(verts_.size(), {});
    in_.assign(verts_.size(), {});
    for (const Arc& a : arcs_) {
      out_[index_.at(a.first)].push_back(index_.at(a.second));
      in_[index_.at(a.second)].push_back(index_.at(a.first));
    }
  }

  /// Parses "tail head" lines; '#' comments and blank lines are skipped.
  static Digraph from_edge_list(std::istream& in) {
    std::vector<Arc> arcs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream ls(line);
      long long tail, head;
      if (!(ls >> tail >> head))
        throw ParseError("line " + std::to_string(lineno) + ": expected \"tail head\"");
      std::string rest;
      if (ls >> rest)
        throw ParseError("line " + std::to_string(lineno) + ": trailing data \"" + rest + "\"");
      if (tail < 0 || head < 0)
        throw ParseError("line " + std::to_string(lineno) + ": negative vertex label");
      if (tail == head)
        throw ParseError("line " + std::to_string(lineno) + ": self-loop rejected");
      arcs.emplace_back(static_cast<VertexId>(tail), static_cast<VertexId>(head));
    }
    return Digraph({}, std::move(arcs));
  }

  static Digraph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list(in);
  }

  int n() const { return static_cast<int>(verts_.size()); }
  int m() const { return static_cast<int>(arcs_.size()); }
  const std::vector<VertexId>& vertices() const { return verts_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool has_vertex(VertexId v) const { return index_.count(v) != 0; }
  bool has_arc(VertexId u, VertexId w) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, w});
  }

  int index_of(VertexId v) const {
    auto it = index_.find(v);
    if (it == index_.end())
      throw GraphError("unknown vertex " + std::to_string(v));
    return it->second;
  }

  // dense-index adjacency
  const std::vector<std::vector<int>>& out_adj() const { return out_; }
  const std::vector<std::vector<int>>& in_adj() const { return in_; }

  /// Induced subgraph on V \ {v}; remaining labels unchanged.
  Digraph remove_vertex(VertexId v) const {
    if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
    std::vector<VertexId> vs;
    for (VertexId u : verts_)
      if (u != v) vs.push_back(u);
    std::vector<Arc> as;
    for (const Arc& a : arcs_)
      if (a.first != v && a.second != v) as.push_back(a);
    return Digraph(std::move(vs), std::move(as));
  }

  /// Induced subgraph on a vertex subset.
  Digraph induced(const std::vector<VertexId>& keep) const {
    std::vector<VertexId> vs;
    for (VertexId v : keep) {
      if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
      vs.push_back(v);
    }
    std::vector<Arc> as;
    for (const Arc& a : arcs_)
      if (std::find(vs.begin(), vs.end(), a.first) != vs.end() &&
          std::find(vs.begin(), vs.end(), a.second) != vs.end())
        as.push_back(a);
    return Digraph(std::move(vs), std::move(as));
  }

  /// Spanning subgraph (V, s); every arc of s must belong to this graph.
  Digraph subgraph_with_arcs(const std::vector<Arc>& s) const {
    for (const Arc& a : s)
      if (!has_arc(a.first, a.second))
        throw GraphError("arc (" + std::to_string(a.first) + "," +
                         std::to_string(a.second) + ") not in graph");
    return Digraph(verts_, s);
  }

  std::string to_edge_list() const {
    std::string out;
    for (const Arc& a : arcs_) {
      out += std::to_string(a.first);
      out += ' ';
      out += std::to_string(a.second);
      out += '\n';
    }
    return out;
  }

  bool operator==(const Digraph& other) const {
    return verts_ == other.verts_ && arcs_ == other.arcs_;
  }

 private:
  std::vector<VertexId> verts_;
  std::vector<Arc> arcs_;
  std::map<VertexId, int> index_;
  std::vector<std::vector<int>> out_, in_;
};

/// Immutable simple undirected graph; edges stored as {min, max} pairs.
class UGraph {
 public:
  UGraph() = default;

  UGraph(std::vector<VertexId> vertices, std::vector<Edge> edges) {
    for (Edge& e : edges) {
      if (e.first == e.second)
        throw GraphError("self-loop on " + std::to_string(e.first));
      if (e.first > e.second) std::swap(e.first, e.second);
      vertices.push_back(e.first);
      vertices.push_back(e.second);
    }
    for (VertexId v : vertices)
      if (v < 0) throw GraphError("negative vertex label " + std::to_string(v));
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    verts_ = std::move(vertices);
    edges_ = std::move(edges);
    for (int i = 0; i < static_cast<int>(verts_.size()); ++i) index_[verts_[i]] = i;
    adj_.assign(verts_.size(), {});
    for (const Edge& e : edges_) {
      adj_[index_.at(e.first)].push_back(index_.at(e.second));
      adj_[index_.at(e.second)].push_back(index_.at(e.first));
    }
  }

  int n() const { return static_cast<int>(verts_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexId>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(VertexId v) const { return index_.count(v) != 0; }
  bool has_edge(VertexId u, VertexId w) const {
    if (u > w) std::swap(u, w);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, w});
  }

  int index_of(VertexId v) const {
    auto it = index_.find(v);
    if (it == index_.end())
      throw GraphError("unknown vertex " + std::to_string(v));
    return it->second;
  }

  const std::vector<std::vector<int>>& adj() const { return adj_; }

  UGraph remove_vertex(VertexId v) const {
    if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
    std::vector<VertexId> vs;
    for (VertexId u : verts_)
      if (u != v) vs.push_back(u);
    std::vector<Edge> es;
    for (const Edge& e : edges_)
      if (e.first != v && e.second != v) es.push_back(e);
    return UGraph(std::move(vs), std::move(es));
  }

  bool operator==(const UGraph& other) const {
    return verts_ == other.verts_ && edges_ == other.edges_;
  }

 private:
  std::vector<VertexId> verts_;
  std::vector<Edge> edges_;
  std::map<VertexId, int> index_;
  std::vector<std::vector<int>> adj_;
};

/// Underlying graph: forget directions, merge antiparallel arcs.
inline UGraph underlying(const Digraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (const Arc& a : g.arcs())
    edges.emplace_back(std::min(a.first, a.second), std::max(a.first, a.second));
  return UGraph(g.vertices(), std::move(edges));
}

}  // namespace sbg
