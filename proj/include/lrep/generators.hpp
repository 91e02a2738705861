// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "lrep/graph.hpp"

namespace lrep {

// All generators use vertices 0..n-1.
OrderedGraph empty_graph(int n);
OrderedGraph complete_graph(int n);
OrderedGraph path_graph(int n);
OrderedGraph cycle_graph(int n);
OrderedGraph star_graph(int leaves);
// Sides are 0..a-1 and a..a+b-1.
OrderedGraph complete_bipartite(int a, int b);
// Vertex (i, j) is i * cols + j.
OrderedGraph grid_graph(int rows, int cols);
// G(n, p) with a seeded mt19937_64.
OrderedGraph random_graph(int n, double p, std::uint64_t seed);
// Uniform random labelled tree (Prüfer sequence).
OrderedGraph random_tree(int n, std::uint64_t seed);

// One representative per isomorphism class of graphs on exactly n vertices
// (n <= 7), in a deterministic order.
std::vector<OrderedGraph> all_graphs(int n);

}  // namespace lrep
