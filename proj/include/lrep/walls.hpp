// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "lrep/graph.hpp"
#include "lrep/minors.hpp"
#include "lrep/parallel.hpp"

namespace lrep {

// An r-wall, possibly subdivided. Skeleton vertices carry their position in
// the 2r × r grid the elementary wall is cut from; every skeleton edge may
// be replaced by a path whose inner vertices are listed in `subdivisions`
// (ordered from the smaller skeleton endpoint).
struct Wall {
  OrderedGraph graph;
  int height = 0;
  std::map<Vertex, std::pair<int, int>> coords;
  std::map<Edge, std::vector<Vertex>> subdivisions;

  // Skeleton vertex at (x, y); throws InputError if absent.
  Vertex at(int x, int y) const;
  bool has_position(int x, int y) const;
  // (1, 1), (2, r), (2r − 1, 1), (2r, r).
  std::vector<Vertex> corners() const;
};

// 2r × r grid, minus the vertical edges {(x, y), (x, y + 1)} with x + y odd,
// minus the two resulting degree-one vertices. Vertices are numbered
// row-major from the bottom row.
Wall elementary_wall(int r);
// Subdivides the graph edge {u, v}, which must lie on a skeleton edge.
Wall subdivide_wall_edge(const Wall& w, Vertex u, Vertex v);
// Throws InputError unless w is a well-formed (subdivided) wall.
void validate_wall(const Wall& w);

struct WallStructure {
  std::vector<std::vector<Vertex>> vertical;    // P_1..P_r, bottom to top
  std::vector<std::vector<Vertex>> horizontal;  // L_1..L_r, left to right
  std::vector<std::vector<Vertex>> layers;      // cycles, outermost first
  std::vector<Vertex> perimeter;
  std::vector<Vertex> central;
};

WallStructure wall_structure(const Wall& w);
// Number of edges on each finite face of the skeleton drawn at its grid
// coordinates.
std::vector<int> finite_face_lengths(const Wall& w);
// The q-wall left after removing the first (r − q)/2 layers and every
// vertex of degree one.
Wall central_subwall(const Wall& w, int q);

// Internal bags Q_{i,j}, i, j ∈ [2, r − 1], stored at (i − 2)(r − 2) + j − 2,
// and the external bag. Each bag is sorted.
struct CanonicalPartition {
  int height = 0;
  std::vector<std::vector<Vertex>> internal;
  std::vector<Vertex> external;
  const std::vector<Vertex>& bag(int i, int j) const;
};

CanonicalPartition canonical_partition(const Wall& w);
// Grows the bags of q over the rest of g: a vertex outside every bag joins
// the bag of its first reached neighbour in breadth-first order; vertices
// never reached join the external bag.
CanonicalPartition enhance_partition(const OrderedGraph& g, const Wall& w,
                                     const CanonicalPartition& q);

// Graph on 0..bags.size()-1 with t ~ u when some edge joins bag t and bag u.
// Vertices in no bag are dropped.
OrderedGraph quotient_graph(const OrderedGraph& g, const std::vector<std::vector<Vertex>>& bags);

// r × r grid on 0..r²−1 plus apex vertices r²..r²+a−1. With `complete`
// every apex sees every grid vertex; apexes are adjacent to each other only
// with `apex_clique`.
struct ApexGrid {
  OrderedGraph graph;
  std::vector<Vertex> apexes;
};
ApexGrid apex_grid(int r, int a, bool complete, bool apex_clique = false);

// Elementary r-wall plus `a` apex vertices, each joined to one random vertex
// in each of `d` distinct internal bags of the canonical partition, and
// `noise` extra vertices joined to fewer than d random wall vertices.
struct ApexWall {
  OrderedGraph graph;
  Wall wall;
  std::vector<Vertex> apexes;
};
ApexWall apex_wall(int r, int a, int d, int noise, std::uint64_t seed);

// Whether h is obtained from a subgraph of g containing a by contracting
// edges with no endpoint in a, each vertex of a mapped to itself.
bool is_fixed_minor(const OrderedGraph& g, std::span<const Vertex> a, const OrderedGraph& h,
                    const MinorGuards& guards = {});

// Maximum number of internally vertex-disjoint s–t paths, by augmenting
// paths in the vertex-split network.
int count_internally_disjoint_paths(const OrderedGraph& g, Vertex s, Vertex t);

// Contracts each bag of the canonical partition of w, adds a vertex joined
// to every internal bag, and returns the vertices outside w with at least q
// internally disjoint paths to it.
std::vector<Vertex> detect_high_flow_vertices(const OrderedGraph& g, const Wall& w, int q,
                                              Execution exec = Execution::kParallel);

}  // namespace lrep
