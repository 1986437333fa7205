#pragma once

// Reference computations by direct definition, kept independent of the
// library's own search code: permutations via std::next_permutation, sigma
// counted arc by arc.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "hamdisc/graph.hpp"

namespace brute {

using hamdisc::OrientedGraph;

inline int forward_arcs(const OrientedGraph& g, const std::vector<int>& seq, bool closed) {
  int plus = 0;
  const std::size_t k = seq.size();
  const std::size_t edges = closed ? k : k - 1;
  for (std::size_t i = 0; i < edges; ++i)
    if (g.has_arc(seq[i], seq[(i + 1) % k])) ++plus;
  return plus;
}

inline int backward_arcs(const OrientedGraph& g, const std::vector<int>& seq, bool closed) {
  int minus = 0;
  const std::size_t k = seq.size();
  const std::size_t edges = closed ? k : k - 1;
  for (std::size_t i = 0; i < edges; ++i)
    if (g.has_arc(seq[(i + 1) % k], seq[i])) ++minus;
  return minus;
}

inline bool is_cycle(const OrientedGraph& g, const std::vector<int>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!g.has_edge(seq[i], seq[(i + 1) % seq.size()])) return false;
  return seq.size() >= 3;
}

inline bool is_path(const OrientedGraph& g, const std::vector<int>& seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!g.has_edge(seq[i], seq[i + 1])) return false;
  return !seq.empty();
}

inline int min_degree(const OrientedGraph& g) {
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) {
    int d = 0;
    for (int u = 0; u < g.order(); ++u)
      if (u != v && (g.has_arc(u, v) || g.has_arc(v, u))) ++d;
    best = std::min(best, d);
  }
  return best;
}

/// Every Hamilton cycle once as a vertex sequence starting at 0.
inline std::vector<std::vector<int>> hamilton_cycles(const OrientedGraph& g) {
  std::vector<std::vector<int>> out;
  const int n = g.order();
  if (n < 3) return out;
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  do {
    if (rest.front() > rest.back()) continue;
    std::vector<int> seq{0};
    seq.insert(seq.end(), rest.begin(), rest.end());
    if (is_cycle(g, seq)) out.push_back(seq);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

inline std::optional<int> best_cycle_sigma_max(const OrientedGraph& g) {
  std::optional<int> best;
  for (const auto& c : hamilton_cycles(g)) {
    const int plus = forward_arcs(g, c, true);
    const int s = std::max(plus, g.order() - plus);
    if (!best || s > *best) best = s;
  }
  return best;
}

/// Visits every path (as an ordered sequence, both directions) by DFS.
inline void for_each_path(const OrientedGraph& g, const std::function<void(const std::vector<int>&)>& visit) {
  const int n = g.order();
  std::vector<int> seq;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void()> grow = [&] {
    visit(seq);
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)] || !g.has_edge(seq.back(), v)) continue;
      used[static_cast<std::size_t>(v)] = 1;
      seq.push_back(v);
      grow();
      seq.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    used[static_cast<std::size_t>(s)] = 1;
    seq.assign(1, s);
    grow();
    used[static_cast<std::size_t>(s)] = 0;
  }
}

inline int longest_path_vertices(const OrientedGraph& g) {
  std::size_t best = 0;
  for_each_path(g, [&](const std::vector<int>& p) { best = std::max(best, p.size()); });
  return static_cast<int>(best);
}

inline int best_path_sigma_max(const OrientedGraph& g) {
  int best = 0;
  for_each_path(g, [&](const std::vector<int>& p) {
    best = std::max({best, forward_arcs(g, p, false), backward_arcs(g, p, false)});
  });
  return best;
}

inline OrientedGraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
  OrientedGraph g(n);
  for (auto [u, v] : arcs) g.add_arc(u, v);
  return g;
}

inline OrientedGraph cyclic_triangle() { return from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline OrientedGraph two_cyclic_triangles() {
  return from_arcs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

inline OrientedGraph transitive_tournament(int n) {
  OrientedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_arc(u, v);
  return g;
}

/// Underlying cycle 0-1-...-(n-1)-0, all arcs forward.
inline OrientedGraph directed_cycle(int n) {
  OrientedGraph g(n);
  for (int v = 0; v < n; ++v) g.add_arc(v, (v + 1) % n);
  return g;
}

}  // namespace brute
