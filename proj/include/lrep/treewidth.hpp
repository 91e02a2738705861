// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lrep/graph.hpp"

namespace lrep {

// Bags indexed by node; `tree` lists the tree edges between node indices.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;  // each sorted
  std::vector<std::pair<int, int>> tree;
  // Largest bag size minus one; -1 without vertices.
  int width() const;
};

inline constexpr int kExactTreewidthGuard = 18;

struct TreewidthResult {
  int width = -1;
  TreeDecomposition td;
};

// Optimal width by dynamic programming over elimination prefixes.
TreewidthResult exact_treewidth(const OrderedGraph& g, int guard = kExactTreewidthGuard);
// Greedy minimum-degree elimination, ties to the smallest identifier.
TreeDecomposition heuristic_decomposition(const OrderedGraph& g);
// Decomposition induced by eliminating vertices in `order`.
TreeDecomposition decomposition_from_order(const OrderedGraph& g,
                                           const std::vector<Vertex>& order);
bool validate_td(const OrderedGraph& g, const TreeDecomposition& td,
                 std::string* reason = nullptr);

enum class NodeKind { kLeaf, kIntroduce, kForget, kJoin };
const char* to_string(NodeKind kind);

struct NiceNode {
  NodeKind kind = NodeKind::kLeaf;
  std::vector<Vertex> bag;  // sorted
  Vertex vertex = 0;        // introduced or forgotten vertex
  std::vector<int> children;
};

// Children always precede their parent, so index order is a valid
// bottom-up processing order. The root bag is empty.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;
  int width() const;
};

// make_nice emits at most kNiceNodeConstant * (width * n + n) nodes.
inline constexpr int kNiceNodeConstant = 7;

NiceTreeDecomposition make_nice(const OrderedGraph& g, const TreeDecomposition& td);
bool validate_nice(const OrderedGraph& g, const NiceTreeDecomposition& nice,
                   std::string* reason = nullptr);
// Decomposition of minimal width that the dynamic program uses.
NiceTreeDecomposition nice_decomposition(const OrderedGraph& g);

// Text form:
//   s td <bags> <max bag size> <vertices>
//   b <node> <rank>...        one line per node, nodes and ranks from 1
//   <node> <node>             one line per tree edge
std::string write_td(const OrderedGraph& g, const TreeDecomposition& td);

}  // namespace lrep
