#include <catch_amalgamated.hpp>

#include "lrep/error.hpp"
#include "lrep/generators.hpp"
#include "lrep/treewidth.hpp"
#include "support.hpp"

using namespace lrep;

TEST_CASE("exact treewidth of small families") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(exact_treewidth(random_tree(9, seed)).width == 1);
  CHECK(exact_treewidth(cycle_graph(6)).width == lrep::testing::brute_treewidth(cycle_graph(6)));
  CHECK(exact_treewidth(grid_graph(3, 3)).width == lrep::testing::brute_treewidth(grid_graph(3, 3)));
  CHECK(exact_treewidth(complete_graph(5)).width == 4);
}

TEST_CASE("exact treewidth matches elimination-order brute force") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    OrderedGraph g = random_graph(7 + static_cast<int>(seed % 2), 0.2 + 0.05 * (seed % 8), seed);
    auto res = exact_treewidth(g);
    CHECK(res.width == lrep::testing::brute_treewidth(g));
    CHECK(validate_td(g, res.td));
    CHECK(res.td.width() == res.width);
    CHECK(res.width <= heuristic_decomposition(g).width());
  }
}

TEST_CASE("heuristic decomposition") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    OrderedGraph t = random_tree(10, seed);
    CHECK(heuristic_decomposition(t).width() == 1);
  }
  CHECK(heuristic_decomposition(complete_graph(5)).width() == 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    OrderedGraph g = random_graph(12, 0.3, seed);
    CHECK(validate_td(g, heuristic_decomposition(g)));
  }
}

TEST_CASE("decomposition validation") {
  OrderedGraph p4 = path_graph(4);
  TreeDecomposition td{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
  CHECK(validate_td(p4, td));
  TreeDecomposition missing{{{0, 1}, {2, 3}}, {{0, 1}}};
  CHECK_FALSE(validate_td(p4, missing));
  TreeDecomposition split{{{0, 1}, {1, 2}, {2, 3}, {0}}, {{0, 1}, {1, 2}, {2, 3}}};
  CHECK_FALSE(validate_td(p4, split));
}

TEST_CASE("nice decompositions") {
  OrderedGraph p4 = path_graph(4);
  TreeDecomposition td{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
  auto nice = make_nice(p4, td);
  CHECK(nice.width() == 1);
  CHECK(validate_nice(p4, nice));
  CHECK(nice.nodes[nice.root].bag.empty());
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    int n = 2 + static_cast<int>(seed % 9);
    OrderedGraph g = random_graph(n, 0.15 + 0.07 * (seed % 10), 500 + seed);
    auto res = exact_treewidth(g);
    auto nt = make_nice(g, res.td);
    std::string why;
    CHECK(validate_nice(g, nt, &why));
    CHECK(nt.width() == res.width);
    CHECK(static_cast<int>(nt.nodes.size()) <= kNiceNodeConstant * (std::max(res.width, 0) * n + n));
    for (std::size_t i = 0; i < nt.nodes.size(); ++i) {
      const auto& node = nt.nodes[i];
      for (int c : node.children) CHECK(c < static_cast<int>(i));
      if (node.kind == NodeKind::kJoin) {
        REQUIRE(node.children.size() == 2);
        CHECK(nt.nodes[node.children[0]].bag == node.bag);
        CHECK(nt.nodes[node.children[1]].bag == node.bag);
      }
      if (node.kind == NodeKind::kIntroduce || node.kind == NodeKind::kForget) {
        REQUIRE(node.children.size() == 1);
        const auto& child = nt.nodes[node.children[0]].bag;
        int diff = static_cast<int>(node.bag.size()) - static_cast<int>(child.size());
        CHECK(diff == (node.kind == NodeKind::kIntroduce ? 1 : -1));
      }
    }
  }
}

TEST_CASE("exact treewidth guard") {
  CHECK_THROWS_AS(exact_treewidth(random_graph(20, 0.3, 1)), CapacityError);
}

TEST_CASE("td text form") {
  OrderedGraph p3 = path_graph(3);
  TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
  CHECK(write_td(p3, td) == "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
}
