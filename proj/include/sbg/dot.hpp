#pragma once

#include <set>
#include <string>
#include <vector>

#include "sbg/graph.hpp"

namespace sbg {

/// Byte-stable DOT rendering; highlighted arcs are drawn bold red.
inline std::string to_dot(const Digraph& g, const std::vector<Arc>& highlight = {}) {
  std::set<Arc> hi(highlight.begin(), highlight.end());
  std::string out = "digraph G {\n";
  out += "  node [shape=circle];\n";
  for (VertexId v : g.vertices())
    out += "  " + std::to_string(v) + ";\n";
  for (const Arc& a : g.arcs()) {
    out += "  " + std::to_string(a.first) + " -> " + std::to_string(a.second);
    if (hi.count(a)) out += " [color=red, penwidth=2.0]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace sbg
