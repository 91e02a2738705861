// Shared helpers and independent oracles for the test binaries.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "lrep/graph.hpp"

namespace lrep::testing {

inline OrderedGraph make_graph(int n, std::vector<Edge> edges) {
  return OrderedGraph::on_range(n, edges);
}

// K3,3 with parts {0,1,2}, {3,4,5} plus the same-side edge 0–1.
inline OrderedGraph k33_plus_edge() {
  std::vector<Edge> es{{0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) es.emplace_back(i, j);
  return OrderedGraph::on_range(6, es);
}

// Smallest vertex set avoiding s and t whose removal disconnects them, with
// the s–t edge (if any) counted as one unremovable path.
inline int brute_min_vertex_cut(const OrderedGraph& g, Vertex s, Vertex t) {
  std::vector<Vertex> others;
  for (Vertex v : g.vertices())
    if (v != s && v != t) others.push_back(v);
  const int m = static_cast<int>(others.size());
  int best = m;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::vector<bool> removed(g.max_vertex() + 1, false);
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) removed[others[i]] = true;
    std::vector<bool> seen(g.max_vertex() + 1, false);
    std::vector<Vertex> stack{s};
    seen[s] = true;
    bool reached = false;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (v == s && u == t) continue;
        if (u == t) reached = true;
        if (seen[u] || removed[u] || u == t) continue;
        seen[u] = true;
        stack.push_back(u);
      }
    }
    if (!reached) best = size;
  }
  return best + (g.has_edge(s, t) ? 1 : 0);
}

// Treewidth as the minimum over all elimination orders of the largest
// neighbourhood met during elimination.
inline int brute_treewidth(const OrderedGraph& g) {
  const int n = g.num_vertices();
  if (n == 0) return -1;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = n - 1;
  do {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j : g.neighbor_indices(i)) adj[i][j] = true;
    std::vector<bool> gone(n, false);
    int width = 0;
    for (int v : order) {
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (!gone[u] && adj[v][u]) nb.push_back(u);
      width = std::max(width, static_cast<int>(nb.size()));
      for (int a : nb)
        for (int b : nb)
          if (a != b) adj[a][b] = true;
      gone[v] = true;
      if (width >= best) break;
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace lrep::testing
