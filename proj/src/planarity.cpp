// SPDX-License-Identifier: Apache-2.0
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "lrep/minors.hpp"

namespace lrep {
namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

// Decided by counting alone: a non-planar graph contains a subdivision of K5
// or K3,3 and so has at least 9 edges; a planar one has at most 3n - 6.
std::optional<bool> trivially(const DenseGraph& g) {
  int m = g.num_edges();
  if (g.n <= 4 || m <= 8) return true;
  if (m > 3 * g.n - 6) return false;
  return std::nullopt;
}

// Removes vertices of degree <= 1 and suppresses degree-2 vertices.
DenseGraph reduce(DenseGraph g) {
  bool changed = true;
  while (changed && g.n > 0) {
    changed = false;
    for (int v = 0; v < g.n; ++v) {
      int d = g.degree(v);
      if (d <= 1) {
        g = g.without(v);
        changed = true;
        break;
      }
      if (d == 2) {
        int a = lowest(g.adj[v]);
        int b = lowest(g.adj[v] & ~bit(a));
        g.add_edge(a, b);
        g = g.without(v);
        changed = true;
        break;
      }
    }
  }
  return g;
}

}  // namespace

bool is_planar(const DenseGraph& input) {
  if (auto t = trivially(input)) return *t;
  DenseGraph g = reduce(input);
  if (auto t = trivially(g)) return *t;
  BoostGraph bg(g.n);
  for (int i = 0; i < g.n; ++i)
    for (Mask m = g.adj[i] & ~((bit(i) << 1) - 1); m; m &= m - 1)
      boost::add_edge(i, lowest(m), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_planar(const OrderedGraph& g) {
  if (g.num_vertices() <= 64) return is_planar(DenseGraph::from(g));
  BoostGraph bg(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i)
    for (int j : g.neighbor_indices(i))
      if (i < j) boost::add_edge(i, j, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace lrep
