// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "lrep/graph.hpp"

namespace lrep {

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

// Bitset adjacency over positions 0..n-1, n <= 64. Used by the hot loops
// (minor search, canonical forms, DP); vertex identities live elsewhere.
struct DenseGraph {
  int n = 0;
  std::vector<Mask> adj;

  DenseGraph() = default;
  explicit DenseGraph(int vertices);
  // Positions follow g.vertices(); throws CapacityError above 64 vertices.
  static DenseGraph from(const OrderedGraph& g);
  // Vertex identifiers are the positions 0..n-1.
  OrderedGraph to_ordered() const;

  bool has_edge(int i, int j) const { return adj[i] >> j & 1; }
  void add_edge(int i, int j) {
    adj[i] |= bit(j);
    adj[j] |= bit(i);
  }
  void remove_edge(int i, int j) {
    adj[i] &= ~bit(j);
    adj[j] &= ~bit(i);
  }
  int degree(int i) const { return popcount(adj[i]); }
  int num_edges() const;
  Mask all() const { return n == 64 ? ~Mask{0} : bit(n) - 1; }
  // Appends an isolated vertex and returns its position.
  int add_vertex();

  // Subgraph induced by `keep`, positions renumbered in increasing order.
  DenseGraph induced(Mask keep) const;
  // Merges j into i (i < j or not); j is removed and later positions shift down.
  DenseGraph contracted(int i, int j) const;
  // Removes position i; later positions shift down.
  DenseGraph without(int i) const;

  friend bool operator==(const DenseGraph&, const DenseGraph&) = default;
};

// Neighbourhood mask of a vertex set.
Mask neighborhood(const DenseGraph& g, Mask s);
// Vertices reachable from `start` inside `within`.
Mask reach(const DenseGraph& g, int start, Mask within);
bool is_connected_mask(const DenseGraph& g, Mask s);
// Number of connected components of g[within].
int count_components(const DenseGraph& g, Mask within);

}  // namespace lrep
