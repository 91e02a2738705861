#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "lrep/canonical.hpp"
#include "lrep/dense_graph.hpp"
#include "lrep/error.hpp"
#include "lrep/generators.hpp"
#include "lrep/graph.hpp"
#include "support.hpp"

using namespace lrep;
using lrep::testing::make_graph;

TEST_CASE("ordered graph rejects malformed input") {
  CHECK_THROWS_AS(make_graph(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(make_graph(2, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(make_graph(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(OrderedGraph(std::vector<Vertex>{1, 1}, std::vector<Edge>{}), InputError);
}

TEST_CASE("ranks follow identifiers") {
  OrderedGraph g(std::vector<Vertex>{7, 3, 5}, std::vector<Edge>{{3, 7}});
  CHECK(g.vertices() == std::vector<Vertex>{3, 5, 7});
  CHECK(g.rank(3) == 1);
  CHECK(g.rank(7) == 3);
}

TEST_CASE("induced subgraph") {
  std::vector<Vertex> three{0, 1, 2};
  CHECK(induced_subgraph(complete_graph(4), three).num_edges() == 3);
  std::vector<Vertex> ac{0, 2};
  OrderedGraph two = induced_subgraph(cycle_graph(4), ac);
  CHECK(two.num_vertices() == 2);
  CHECK(two.num_edges() == 0);
  std::vector<Vertex> ab{0, 1};
  OrderedGraph edge = induced_subgraph(path_graph(3), ab);
  CHECK(edge.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("contraction") {
  CHECK(canonical_form(contract_edge(cycle_graph(4), 0, 1)) == canonical_form(complete_graph(3)));
  CHECK(canonical_form(contract_edge(lrep::testing::k33_plus_edge(), 0, 1)) ==
        canonical_form(complete_bipartite(2, 3)));
  OrderedGraph k1 = contract_edge(complete_graph(2), 0, 1);
  CHECK(k1.vertices() == std::vector<Vertex>{0});
}

TEST_CASE("subdivision and dissolution") {
  CHECK(canonical_form(subdivide_edge(complete_graph(2), 0, 1)) == canonical_form(path_graph(3)));
  CHECK(canonical_form(subdivide_edge(complete_graph(3), 0, 1)) == canonical_form(cycle_graph(4)));
  CHECK(canonical_form(dissolve_vertex(path_graph(3), 1)) == canonical_form(complete_graph(2)));
  CHECK_THROWS_AS(dissolve_vertex(path_graph(3), 0), InputError);
}

TEST_CASE("detail") {
  CHECK(detail(complete_graph(4)) == 6);
  CHECK(detail(complete_graph(5)) == 10);
  CHECK(detail(OrderedGraph{}) == 0);
}

TEST_CASE("leaf blocks") {
  OrderedGraph bowtie = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  auto blocks = leaf_blocks(bowtie);
  auto has_core = [&](std::vector<Vertex> core) {
    return std::any_of(blocks.begin(), blocks.end(), [&](const LeafBlock& b) {
      auto c = b.core;
      std::sort(c.begin(), c.end());
      return c == core && canonical_form(b.graph) == canonical_form(complete_graph(3));
    });
  };
  CHECK(has_core({0, 1}));
  CHECK(has_core({3, 4}));
  // The whole component is a leaf-block as well.
  CHECK(std::any_of(blocks.begin(), blocks.end(),
                    [](const LeafBlock& b) { return b.core.size() == 5; }));
  OrderedGraph two = disjoint_union(complete_graph(3), complete_graph(3));
  for (const auto& b : leaf_blocks(two)) CHECK(b.core.size() <= 3);
}

TEST_CASE("canonical form") {
  OrderedGraph c5 = cycle_graph(5);
  std::map<Vertex, Vertex> perm{{0, 3}, {1, 0}, {2, 4}, {3, 1}, {4, 2}};
  CHECK(canonical_form(relabel(c5, perm)) == canonical_form(c5));
  CHECK(canonical_form(complete_graph(3)) != canonical_form(path_graph(3)));
}

TEST_CASE("canonical labelling matches the brute-force reference") {
  // Both keys must induce the same partition into isomorphism classes.
  std::map<CanonicalKey, CanonicalKey> fast_of, brute_of;
  auto check = [&](const DenseGraph& d, const std::vector<int>& colors) {
    auto fast = canonical_key(d, colors);
    auto brute = canonical_key_bruteforce(d, colors);
    CHECK(fast_of.emplace(brute, fast).first->second == fast);
    CHECK(brute_of.emplace(fast, brute).first->second == brute);
  };
  auto permuted = [](const DenseGraph& d, const std::vector<int>& colors, std::uint64_t seed) {
    std::vector<int> p(d.n);
    std::iota(p.begin(), p.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);
    DenseGraph e(d.n);
    std::vector<int> c(d.n);
    for (int i = 0; i < d.n; ++i) {
      c[p[i]] = colors[i];
      for (int j = i + 1; j < d.n; ++j)
        if (d.has_edge(i, j)) e.add_edge(p[i], p[j]);
    }
    return std::pair{e, c};
  };
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) {
      DenseGraph d = DenseGraph::from(g);
      std::vector<int> colors(n, 0);
      colors[0] = 1;
      check(d, colors);
      auto [e, c] = permuted(d, colors, static_cast<std::uint64_t>(n));
      check(e, c);
    }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    OrderedGraph g = random_graph(8, 0.4, seed);
    DenseGraph d = DenseGraph::from(g);
    std::vector<int> colors(8);
    for (int i = 0; i < 8; ++i) colors[i] = (i * 7 + static_cast<int>(seed)) % 3;
    check(d, colors);
    auto [e, c] = permuted(d, colors, seed + 100);
    check(e, c);
  }
}

TEST_CASE("graph census sizes") {
  // Counts of unlabelled graphs on n vertices.
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) CHECK(all_graphs(n).size() == expected[n]);
}

TEST_CASE("random graphs are reproducible") {
  CHECK(random_graph(8, 0.4, 5) == random_graph(8, 0.4, 5));
  CHECK(random_graph(8, 0.4, 5) != random_graph(8, 0.4, 6));
}
