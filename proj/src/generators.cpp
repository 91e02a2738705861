// SPDX-License-Identifier: Apache-2.0
#include "lrep/generators.hpp"

#include <map>
#include <random>

#include "lrep/canonical.hpp"
#include "lrep/error.hpp"

namespace lrep {

OrderedGraph empty_graph(int n) { return OrderedGraph::on_range(n, {}); }

OrderedGraph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return OrderedGraph::on_range(n, es);
}

OrderedGraph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return OrderedGraph::on_range(n, es);
}

OrderedGraph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return OrderedGraph::on_range(n, es);
}

OrderedGraph star_graph(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return OrderedGraph::on_range(leaves + 1, es);
}

OrderedGraph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return OrderedGraph::on_range(a + b, es);
}

OrderedGraph grid_graph(int rows, int cols) {
  std::vector<Edge> es;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) es.emplace_back(i * cols + j, i * cols + j + 1);
      if (i + 1 < rows) es.emplace_back(i * cols + j, (i + 1) * cols + j);
    }
  return OrderedGraph::on_range(rows * cols, es);
}

OrderedGraph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.emplace_back(i, j);
  return OrderedGraph::on_range(n, es);
}

OrderedGraph random_tree(int n, std::uint64_t seed) {
  if (n <= 1) return empty_graph(n);
  if (n == 2) return path_graph(2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  std::vector<int> deg(n, 1);
  for (int c : code) ++deg[c];
  std::vector<Edge> es;
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf)
      if (deg[leaf] == 1) {
        es.emplace_back(leaf, c);
        --deg[leaf];
        --deg[c];
        break;
      }
  }
  int a = -1;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        es.emplace_back(a, v);
        break;
      }
    }
  return OrderedGraph::on_range(n, es);
}

std::vector<OrderedGraph> all_graphs(int n) {
  if (n > 7) throw CapacityError("all_graphs supports n <= 7");
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::map<CanonicalKey, OrderedGraph> seen;
  std::vector<OrderedGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> es;
    for (size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1) es.push_back(pairs[b]);
    OrderedGraph g = OrderedGraph::on_range(n, es);
    if (seen.emplace(canonical_form(g), g).second) out.push_back(g);
  }
  return out;
}

}  // namespace lrep
