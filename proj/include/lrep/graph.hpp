// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lrep {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph over integer vertex identifiers. The total order on
// vertices is the identifier order, so identities survive modifications.
// Instances are immutable once built.
class OrderedGraph {
 public:
  OrderedGraph() = default;

  // Rejects duplicate vertices, loops, duplicate edges and unknown endpoints.
  OrderedGraph(std::vector<Vertex> vertices, std::span<const Edge> edges);

  // Vertices 0..n-1.
  static OrderedGraph on_range(int n, std::span<const Edge> edges);

  // Like the constructor, but parallel edges collapse silently. Loops and
  // unknown endpoints are still rejected.
  static OrderedGraph collapsing(std::vector<Vertex> vertices,
                                 std::span<const Edge> edges);

  int num_vertices() const noexcept { return static_cast<int>(ids_.size()); }
  int num_edges() const noexcept { return num_edges_; }
  bool empty() const noexcept { return ids_.empty(); }

  // Sorted ascending; position i is the vertex of rank i + 1.
  const std::vector<Vertex>& vertices() const noexcept { return ids_; }
  bool has_vertex(Vertex v) const { return index_of(v) >= 0; }
  // Position of v in vertices(), or -1.
  int index_of(Vertex v) const;
  // Position of v; throws InputError for unknown vertices.
  int require_index(Vertex v) const;
  Vertex vertex_at(int index) const { return ids_[index]; }
  int rank(Vertex v) const { return require_index(v) + 1; }
  Vertex max_vertex() const;

  bool has_edge(Vertex u, Vertex v) const;
  bool has_edge_at(int i, int j) const;
  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  // Sorted neighbor positions of the vertex at `index`.
  const std::vector<int>& neighbor_indices(int index) const { return adj_[index]; }
  // Every edge once as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  std::string to_string() const;

  friend bool operator==(const OrderedGraph&, const OrderedGraph&) = default;

 private:
  OrderedGraph(std::vector<Vertex> vertices, std::span<const Edge> edges,
               bool collapse);

  std::vector<Vertex> ids_;
  std::vector<std::vector<int>> adj_;
  int num_edges_ = 0;
};

// (L, R) with L ∪ R = V(G) and no edge between L \ R and R \ L.
struct Separation {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  int order() const;
};

// Branch set of each pattern vertex inside the host.
struct MinorModel {
  std::map<Vertex, std::vector<Vertex>> branch_sets;
};

struct LeafBlock {
  OrderedGraph graph;
  std::vector<Vertex> core;  // V_B
  friend bool operator==(const LeafBlock&, const LeafBlock&) = default;
};

OrderedGraph induced_subgraph(const OrderedGraph& g, std::span<const Vertex> s);
OrderedGraph delete_vertices(const OrderedGraph& g, std::span<const Vertex> s);
OrderedGraph delete_edges(const OrderedGraph& g, std::span<const Edge> edges);
OrderedGraph add_edges(const OrderedGraph& g, std::span<const Edge> edges);
OrderedGraph disjoint_union(const OrderedGraph& a, const OrderedGraph& b);
OrderedGraph complement(const OrderedGraph& g);

// The merged vertex keeps the smaller identifier.
OrderedGraph contract_edge(const OrderedGraph& g, Vertex u, Vertex v);
// The new vertex gets identifier max_vertex() + 1.
OrderedGraph subdivide_edge(const OrderedGraph& g, Vertex u, Vertex v);
// Requires degree exactly 2; the neighbors become adjacent.
OrderedGraph dissolve_vertex(const OrderedGraph& g, Vertex v);

// Renames vertices through `mapping`, which must be injective on V(g).
OrderedGraph relabel(const OrderedGraph& g, const std::map<Vertex, Vertex>& mapping);

int detail(const OrderedGraph& g);
std::vector<std::vector<Vertex>> connected_components(const OrderedGraph& g);
bool is_connected(const OrderedGraph& g);
// Whether g[s] is connected (the empty set counts as connected).
bool is_connected_subset(const OrderedGraph& g, std::span<const Vertex> s);
std::vector<LeafBlock> leaf_blocks(const OrderedGraph& g);

bool is_separation(const OrderedGraph& g, const Separation& sep);

// Checks disjointness, connectivity and edge realisation of a model of
// `pattern` in `host`. On failure `reason` (if given) says which axiom broke.
bool validate_minor_model(const OrderedGraph& host, const OrderedGraph& pattern,
                          const MinorModel& model, std::string* reason = nullptr);

}  // namespace lrep
