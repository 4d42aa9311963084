#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sbg/graph.hpp"
#include "sbg/strong_biconnectivity.hpp"

namespace sbg {

/// Bundled instances: the three graphs of the worked figure plus the
/// directed triangle and the bidirected K4.
inline Digraph fixture(const std::string& name) {
  if (name == "fig1a") {
    return Digraph({}, {{1, 2}, {2, 1}, {1, 5}, {5, 1}, {5, 7}, {7, 5},
                        {7, 6}, {6, 7}, {6, 4}, {4, 6}, {4, 3}, {3, 4},
                        {3, 2}, {2, 3}, {1, 7}, {5, 6}, {6, 3}, {4, 2},
                        {3, 1}, {4, 5}, {2, 5}, {2, 6}, {3, 5}, {7, 4}});
  }
  if (name == "fig1b") {
    // bidirected cycle 1-2-3-4-6-7-5-1
    const std::vector<VertexId> cycle{1, 2, 3, 4, 6, 7, 5};
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      VertexId u = cycle[i], w = cycle[(i + 1) % cycle.size()];
      arcs.push_back({u, w});
      arcs.push_back({w, u});
    }
    return Digraph({}, std::move(arcs));
  }
  if (name == "fig1c") {
    return Digraph({}, {{2, 5}, {2, 1}, {1, 5}, {5, 7}, {7, 6}, {6, 4},
                        {4, 3}, {3, 2}, {1, 7}, {5, 6}, {6, 3}, {4, 2},
                        {3, 1}, {7, 4}});
  }
  if (name == "tri") {
    return Digraph({}, {{1, 2}, {2, 3}, {3, 1}});
  }
  if (name == "k4bi") {
    std::vector<Arc> arcs;
    for (VertexId u = 1; u <= 4; ++u)
      for (VertexId w = 1; w <= 4; ++w)
        if (u != w) arcs.push_back({u, w});
    return Digraph({}, std::move(arcs));
  }
  throw GraphError("unknown fixture \"" + name + "\"");
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"fig1a", "fig1b", "fig1c", "tri",
                                              "k4bi"};
  return names;
}

/// Seeded random 2-vertex strongly biconnected graph on labels 1..n:
/// bidirected Hamiltonian cycle over a random permutation, then random
/// arcs one at a time until the 2VSB check passes, then extra_arcs more.
inline Digraph random_2vsb(int n, int extra_arcs, std::uint64_t seed) {
  if (n < 4) throw GraphError("random2vsb requires n >= 4");
  std::mt19937_64 rng(seed);
  std::vector<VertexId> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng() % (i + 1)]);

  std::vector<Arc> arcs;
  std::set<Arc> present;
  auto add = [&](VertexId u, VertexId w) {
    arcs.push_back({u, w});
    present.insert({u, w});
  };
  for (int i = 0; i < n; ++i) {
    VertexId u = perm[i], w = perm[(i + 1) % n];
    add(u, w);
    add(w, u);
  }
  const std::size_t complete = static_cast<std::size_t>(n) * (n - 1);
  auto add_random_arc = [&]() {
    while (true) {
      VertexId u = 1 + static_cast<VertexId>(rng() % n);
      VertexId w = 1 + static_cast<VertexId>(rng() % n);
      if (u == w || present.count({u, w})) continue;
      add(u, w);
      return;
    }
  };
  while (!is_2vsb(Digraph({}, arcs))) {
    if (present.size() >= complete) break;
    add_random_arc();
  }
  for (int i = 0; i < extra_arcs && present.size() < complete; ++i)
    add_random_arc();
  return Digraph({}, std::move(arcs));
}

}  // namespace sbg
