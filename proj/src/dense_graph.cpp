// SPDX-License-Identifier: Apache-2.0
#include "lrep/dense_graph.hpp"

#include "lrep/error.hpp"

namespace lrep {

DenseGraph::DenseGraph(int vertices) : n(vertices), adj(vertices, 0) {
  if (vertices > 64) throw CapacityError("dense graphs hold at most 64 vertices");
}

DenseGraph DenseGraph::from(const OrderedGraph& g) {
  DenseGraph d(g.num_vertices());
  for (int i = 0; i < d.n; ++i)
    for (int j : g.neighbor_indices(i)) d.adj[i] |= bit(j);
  return d;
}

OrderedGraph DenseGraph::to_ordered() const {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (Mask m = adj[i] & ~((bit(i) << 1) - 1); m; m &= m - 1)
      es.emplace_back(i, lowest(m));
  return OrderedGraph::on_range(n, es);
}

int DenseGraph::num_edges() const {
  int total = 0;
  for (Mask m : adj) total += popcount(m);
  return total / 2;
}

int DenseGraph::add_vertex() {
  if (n == 64) throw CapacityError("dense graphs hold at most 64 vertices");
  adj.push_back(0);
  return n++;
}

namespace {

// Drops bit `pos` from a mask and shifts higher bits down by one.
inline Mask squeeze(Mask m, int pos) {
  Mask low = m & (bit(pos) - 1);
  Mask high = pos == 63 ? 0 : (m >> (pos + 1)) << pos;
  return low | high;
}

}  // namespace

DenseGraph DenseGraph::induced(Mask keep) const {
  std::vector<int> pos(n, -1);
  int k = 0;
  for (int i = 0; i < n; ++i)
    if (keep >> i & 1) pos[i] = k++;
  DenseGraph out(k);
  for (int i = 0; i < n; ++i) {
    if (pos[i] < 0) continue;
    for (Mask m = adj[i] & keep; m; m &= m - 1) out.adj[pos[i]] |= bit(pos[lowest(m)]);
  }
  return out;
}

DenseGraph DenseGraph::contracted(int i, int j) const {
  DenseGraph g = *this;
  Mask merged = (g.adj[i] | g.adj[j]) & ~bit(i) & ~bit(j);
  for (int v = 0; v < n; ++v) {
    if (g.adj[v] >> j & 1) {
      g.adj[v] &= ~bit(j);
      if (v != i) g.adj[v] |= bit(i);
    }
  }
  g.adj[i] = merged;
  return g.without(j);
}

DenseGraph DenseGraph::without(int i) const {
  DenseGraph out;
  out.n = n - 1;
  out.adj.reserve(n - 1);
  for (int v = 0; v < n; ++v)
    if (v != i) out.adj.push_back(squeeze(adj[v], i));
  return out;
}

Mask neighborhood(const DenseGraph& g, Mask s) {
  Mask out = 0;
  for (Mask m = s; m; m &= m - 1) out |= g.adj[lowest(m)];
  return out & ~s;
}

Mask reach(const DenseGraph& g, int start, Mask within) {
  Mask seen = bit(start);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1) next |= g.adj[lowest(m)];
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected_mask(const DenseGraph& g, Mask s) {
  if (!s) return true;
  return reach(g, lowest(s), s) == s;
}

int count_components(const DenseGraph& g, Mask within) {
  int count = 0;
  while (within) {
    within &= ~reach(g, lowest(within), within);
    ++count;
  }
  return count;
}

}  // namespace lrep
