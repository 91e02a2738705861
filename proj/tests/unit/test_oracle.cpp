#include <catch_amalgamated.hpp>

#include "lrep/error.hpp"
#include "lrep/generators.hpp"
#include "lrep/oracle.hpp"
#include "support.hpp"

using namespace lrep;

namespace {

Instance instance(OrderedGraph g, int k, std::string_view action, std::string_view cls) {
  Instance inst;
  inst.g = std::move(g);
  inst.k = k;
  inst.action = catalog_from_label(action);
  inst.f = builtin_class(cls);
  return inst;
}

// Apex 16 over the 4×4 grid.
OrderedGraph apex_over_grid() {
  auto g = grid_graph(4, 4);
  std::vector<Edge> es = g.edges();
  for (Vertex v = 0; v < 16; ++v) es.emplace_back(v, 16);
  return OrderedGraph::on_range(17, es);
}

}  // namespace

TEST_CASE("brute force on small cases") {
  auto c4 = instance(cycle_graph(4), 1, "vDel", "forests");
  auto sol = solve_brute(c4);
  REQUIRE(sol);
  CHECK(sol->s.size() == 1);
  CHECK(validate_solution(c4, *sol));
  CHECK_FALSE(solve_brute(instance(complete_graph(4), 1, "vDel", "forests")));
  // Contracting any edge of K3,3 leaves the planar wheel on five vertices.
  CHECK(is_planar(contract_edge(complete_bipartite(3, 3), 0, 3)));
  CHECK(solve_brute(instance(complete_bipartite(3, 3), 2, "Con(1)", "planar")));
  auto yes = instance(lrep::testing::k33_plus_edge(), 2, "Con(1)", "planar");
  auto con = solve_brute(yes);
  REQUIRE(con);
  CHECK(validate_solution(yes, *con));
}

TEST_CASE("serial and parallel brute force agree") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto inst = instance(random_graph(7, 0.5, seed), 2, "vDel", "forests");
    CHECK(solve_brute(inst, Execution::kSerial) == solve_brute(inst, Execution::kParallel));
  }
}

TEST_CASE("annotated brute force") {
  auto inst = instance(cycle_graph(4), 1, "vDel", "forests");
  inst.annotation = Annotation{};
  CHECK(solve_brute_annotated(inst).has_value() == solve_brute(inst).has_value());
  std::vector<Vertex> a{2};
  inst.annotation = Annotation{a, deletion_transformation(induced_subgraph(inst.g, a))};
  auto sol = solve_brute_annotated(inst);
  REQUIRE(sol);
  CHECK(sol->s == a);
  std::vector<Vertex> two{0, 2};
  inst.annotation = Annotation{two, deletion_transformation(induced_subgraph(inst.g, two))};
  CHECK_FALSE(solve_brute_annotated(inst));
}

TEST_CASE("annotation outside the action is rejected") {
  auto inst = instance(cycle_graph(4), 1, "vDel", "forests");
  std::vector<Vertex> a{2};
  inst.annotation = Annotation{a, identity_transformation(induced_subgraph(inst.g, a))};
  CHECK_THROWS_AS(validate_instance(inst), InputError);
}

TEST_CASE("irrelevant vertices") {
  OrderedGraph g = lrep::testing::make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto inst = instance(g, 1, "vDel", "forests");
  CHECK(check_irrelevant(inst, 4));
  auto tree = instance(path_graph(5), 0, "vDel", "forests");
  for (Vertex v : tree.g.vertices()) CHECK(check_irrelevant(tree, v));
  // At k = 1 both G and G - apex are yes-instances, so the apex only
  // changes the answer at k = 0.
  BruteGuards wide;
  wide.max_vertices = 17;
  auto apex_k1 = instance(apex_over_grid(), 1, "vDel", "planar");
  CHECK(check_irrelevant(apex_k1, 16, wide));
  auto apex = instance(apex_over_grid(), 0, "vDel", "planar");
  CHECK_FALSE(check_irrelevant(apex, 16, wide));
}

TEST_CASE("obligatory vertices") {
  auto apex = instance(apex_over_grid(), 1, "vDel", "planar");
  BruteGuards wide;
  wide.max_vertices = 17;
  CHECK(check_obligatory(apex, {16}, wide) == ObligatoryStatus::kHolds);
  auto c4 = instance(cycle_graph(4), 1, "vDel", "forests");
  for (Vertex v : c4.g.vertices()) CHECK(check_obligatory(c4, {v}) == ObligatoryStatus::kFails);
  CHECK(check_obligatory(c4, c4.g.vertices()) == ObligatoryStatus::kHolds);
  CHECK(check_obligatory(instance(complete_graph(4), 1, "vDel", "forests"), {0}) ==
        ObligatoryStatus::kVacuous);
}

TEST_CASE("solutions satisfy exc after deleting S") {
  for (std::uint64_t seed = 0; seed < 12; ++seed)
    for (auto action : {"vDel", "eDel(1)", "Con(1)", "Comp"}) {
      auto inst = instance(random_graph(6, 0.5, seed), 2, action, "forests");
      auto sol = solve_brute(inst, Execution::kSerial);
      if (!sol) continue;
      CHECK(validate_solution(inst, *sol));
      CHECK(in_exc(delete_vertices(inst.g, sol->s), inst.f));
    }
}

TEST_CASE("yes answers persist when k grows") {
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    for (int k = 0; k < 3; ++k) {
      auto lo = instance(random_graph(6, 0.5, seed), k, "vDel", "linear-forests");
      auto hi = lo;
      hi.k = k + 1;
      if (solve_brute(lo, Execution::kSerial)) CHECK(solve_brute(hi, Execution::kSerial));
    }
}

TEST_CASE("brute guards") {
  auto inst = instance(random_graph(12, 0.3, 1), 2, "vDel", "forests");
  CHECK_THROWS_AS(solve_brute(inst), CapacityError);
}
