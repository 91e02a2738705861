#include <catch_amalgamated.hpp>

#include "lrep/error.hpp"
#include "lrep/generators.hpp"
#include "lrep/minors.hpp"
#include "support.hpp"

using namespace lrep;

namespace {

// Fewest vertices whose removal leaves a planar graph, by subset search.
int brute_apex(const OrderedGraph& g) {
  const int n = g.num_vertices();
  for (int size = 0; size <= n; ++size)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      std::vector<Vertex> s;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(g.vertex_at(i));
      if (is_planar(delete_vertices(g, s))) return size;
    }
  return n;
}

}  // namespace

TEST_CASE("minor models") {
  auto k4 = find_minor_model(complete_graph(4), complete_graph(3));
  REQUIRE(k4);
  for (auto& [v, bs] : k4->branch_sets) CHECK(bs.size() == 1);
  auto c5 = find_minor_model(cycle_graph(5), complete_graph(3));
  REQUIRE(c5);
  CHECK(validate_minor_model(cycle_graph(5), complete_graph(3), *c5));
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    CHECK_FALSE(is_minor(random_tree(9, seed), complete_graph(3)));
}

TEST_CASE("exc membership") {
  auto forests = builtin_class("forests");
  CHECK(in_exc(path_graph(10), forests));
  CHECK_FALSE(in_exc(cycle_graph(4), forests));
  CHECK_FALSE(in_exc(complete_graph(5), builtin_class("planar")));
  CHECK_FALSE(in_exc(complete_bipartite(3, 3), builtin_class("planar")));
  CHECK(in_exc(grid_graph(4, 4), builtin_class("planar")));
  CHECK_FALSE(in_exc(star_graph(3), builtin_class("linear-forests")));
  CHECK(in_exc(empty_graph(4), builtin_class("edgeless")));
}

TEST_CASE("built-in membership agrees with the generic minor search") {
  for (const auto& name : builtin_class_names()) {
    auto f = builtin_class(name);
    for (int n = 1; n <= 6; ++n)
      for (const auto& g : all_graphs(n)) CHECK(in_exc(g, f) == in_exc_generic(g, f));
  }
}

TEST_CASE("apex number") {
  CHECK(apex_number(grid_graph(3, 3)) == 0);
  CHECK(apex_number(complete_graph(5)) == brute_apex(complete_graph(5)));
  CHECK(apex_number(complete_graph(6)) == brute_apex(complete_graph(6)));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    OrderedGraph g = random_graph(8, 0.6, seed);
    CHECK(apex_number(g) == brute_apex(g));
  }
}

TEST_CASE("class constants") {
  auto forests = builtin_class("forests").constants();
  CHECK(forests.max_vertices == 3);
  CHECK(forests.max_detail == 3);
  CHECK(forests.apex == brute_apex(complete_graph(3)));
  auto planar = builtin_class("planar").constants();
  CHECK(planar.max_vertices == 6);
  CHECK(planar.max_detail == 10);
  CHECK(planar.apex == std::min(brute_apex(complete_graph(5)), brute_apex(complete_bipartite(3, 3))));
  auto k2 = class_constants({complete_graph(2)});
  CHECK(k2.max_vertices == 2);
  CHECK(k2.max_detail == 2);
  CHECK(k2.apex == brute_apex(complete_graph(2)));
}

TEST_CASE("rooted minors pin their roots") {
  // Path 0-1-2 with both ends pinned cannot become the edge 0-2 without
  // contracting an edge at a pinned vertex.
  OrderedGraph p3 = path_graph(3);
  OrderedGraph edge(std::vector<Vertex>{0, 2}, std::vector<Edge>{{0, 2}});
  CHECK(find_minor_model(p3, edge).has_value());
  CHECK_FALSE(find_rooted_minor_model(p3, edge, {{0, 0}, {2, 2}}).has_value());
  CHECK(find_rooted_minor_model(p3, edge, {{0, 0}}).has_value());
}

TEST_CASE("minor search guards") {
  MinorGuards tight;
  tight.max_host_vertices = 5;
  CHECK_THROWS_AS(find_minor_model(complete_bipartite(4, 4), complete_graph(4), tight), CapacityError);
}
