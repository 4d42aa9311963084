#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

#include "sbg/connectivity.hpp"
#include "sbg/graph.hpp"
#include "sbg/strong_biconnectivity.hpp"

namespace sbg {

struct ExactLimits {
  int max_n = 10;
  int max_m = 32;
  std::int64_t time_budget_ms = 60000;
};

struct ExactResult {
  std::vector<Arc> arcs;  // an optimum O (or incumbent when not proven)
  int size = 0;
  std::uint64_t nodes_explored = 0;
  bool proven_optimal = false;
  bool time_limit_hit = false;
};

/// Every feasible solution has at least 2n arcs.
inline int lower_bound(const Digraph& g) {
  if (!is_2vsb(g))
    throw GraphError("input not 2-vertex strongly biconnected");
  return 2 * g.n();
}

namespace detail {

// 2-vertex strong biconnectivity over dense arcs without building Digraphs.
inline bool is_2vsb_dense(int n, const std::vector<std::pair<int, int>>& arcs,
                          const std::vector<char>& take) {
  if (n < 3) return false;
  std::vector<std::vector<int>> out(n), und(n);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (!take[i]) continue;
    out[arcs[i].first].push_back(arcs[i].second);
    int a = std::min(arcs[i].first, arcs[i].second);
    int b = std::max(arcs[i].first, arcs[i].second);
    und[a].push_back(b);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(und[v].begin(), und[v].end());
    und[v].erase(std::unique(und[v].begin(), und[v].end()), und[v].end());
  }
  std::vector<std::vector<int>> sym(n);
  for (int v = 0; v < n; ++v)
    for (int w : und[v]) {
      sym[v].push_back(w);
      sym[w].push_back(v);
    }
  for (int skip = -1; skip < n; ++skip) {
    if (!strongly_connected_dense(out, skip)) return false;
    if (!biconnected_dense(sym, skip)) return false;
  }
  return true;
}

struct ExactSearch {
  int n, m;
  std::vector<std::pair<int, int>> arcs;  // dense, canonical order
  std::vector<char> state;                // 0 undecided, 1 in, 2 out
  std::vector<int> out_in, in_in;         // chosen degrees
  std::vector<int> out_avail, in_avail;   // chosen + undecided degrees
  int chosen_count = 0;
  std::vector<int> best;                  // arc indices of incumbent
  std::uint64_t nodes = 0;
  bool timed_out = false;
  std::chrono::steady_clock::time_point deadline;

  bool feasible(bool chosen_only) const {
    std::vector<char> take(m, 0);
    for (int i = 0; i < m; ++i)
      take[i] = chosen_only ? (state[i] == 1) : (state[i] != 2);
    return is_2vsb_dense(n, arcs, take);
  }

  void record_candidate() {
    std::vector<int> cur;
    for (int i = 0; i < m; ++i)
      if (state[i] == 1) cur.push_back(i);
    if (cur.size() < best.size() || (cur.size() == best.size() && cur < best))
      best = std::move(cur);
  }

  void dfs(int i) {
    ++nodes;
    if ((nodes & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline)
      timed_out = true;
    if (timed_out) return;

    if (chosen_count >= 2 * n && feasible(true)) {
      record_candidate();  // supersets are strictly larger
      return;
    }
    int out_deficit = 0, in_deficit = 0;
    for (int v = 0; v < n; ++v) {
      if (out_avail[v] < 2 || in_avail[v] < 2) return;  // degree unreachable
      out_deficit += std::max(0, 2 - out_in[v]);
      in_deficit += std::max(0, 2 - in_in[v]);
    }
    if (chosen_count + std::max(out_deficit, in_deficit) >
        static_cast<int>(best.size()))
      return;
    if (i == m) return;

    auto [u, w] = arcs[i];

    state[i] = 1;
    ++chosen_count;
    ++out_in[u];
    ++in_in[w];
    dfs(i + 1);
    --out_in[u];
    --in_in[w];
    --chosen_count;

    state[i] = 2;
    --out_avail[u];
    --in_avail[w];
    if (feasible(false)) dfs(i + 1);  // exclusion kept a feasible completion
    ++out_avail[u];
    ++in_avail[w];
    state[i] = 0;
  }
};

}  // namespace detail

/// Branch-and-bound over arc subsets in canonical order; returns the
/// minimum-size feasible subset, lexicographically least among optima.
inline ExactResult exact_m2vsbss(const Digraph& g, const ExactLimits& limits = {}) {
  if (!is_2vsb(g))
    throw GraphError("input not 2-vertex strongly biconnected");
  ExactResult result;
  if (g.n() > limits.max_n || g.m() > limits.max_m) {
    // too large to search: report the input itself as the incumbent
    result.arcs = g.arcs();
    result.size = g.m();
    result.proven_optimal = false;
    result.time_limit_hit = true;
    return result;
  }

  detail::ExactSearch s;
  s.n = g.n();
  s.m = g.m();
  for (const Arc& a : g.arcs())
    s.arcs.emplace_back(g.index_of(a.first), g.index_of(a.second));
  s.state.assign(s.m, 0);
  s.out_in.assign(s.n, 0);
  s.in_in.assign(s.n, 0);
  s.out_avail.assign(s.n, 0);
  s.in_avail.assign(s.n, 0);
  for (auto& [u, w] : s.arcs) {
    ++s.out_avail[u];
    ++s.in_avail[w];
  }
  s.best.resize(s.m);
  for (int i = 0; i < s.m; ++i) s.best[i] = i;  // input graph is feasible
  s.deadline = std::chrono::steady_clock::now() +
               std::chrono::milliseconds(limits.time_budget_ms);
  s.dfs(0);

  for (int i : s.best) result.arcs.push_back(g.arcs()[i]);
  result.size = static_cast<int>(result.arcs.size());
  result.nodes_explored = s.nodes;
  result.time_limit_hit = s.timed_out;
  result.proven_optimal = !s.timed_out;
  return result;
}

}  // namespace sbg
