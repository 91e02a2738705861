#include <catch_amalgamated.hpp>

#include <set>

#include "lrep/canonical.hpp"
#include "lrep/error.hpp"
#include "lrep/generators.hpp"
#include "lrep/walls.hpp"
#include "support.hpp"

using namespace lrep;

TEST_CASE("elementary walls") {
  CHECK_THROWS_AS(elementary_wall(4), InputError);
  CHECK_THROWS_AS(elementary_wall(1), InputError);
  Wall w3 = elementary_wall(3);
  CHECK(w3.corners() == std::vector<Vertex>{w3.at(1, 1), w3.at(2, 3), w3.at(5, 1), w3.at(6, 3)});
  // 2r·r grid positions minus the two stripped corners.
  CHECK(w3.graph.num_vertices() == 16);
  CHECK_FALSE(w3.has_position(1, 3));
  CHECK_FALSE(w3.has_position(6, 1));
  for (int r : {3, 5, 7, 9}) {
    Wall w = elementary_wall(r);
    CHECK_NOTHROW(validate_wall(w));
    auto faces = finite_face_lengths(w);
    CHECK(static_cast<int>(faces.size()) == (r - 1) * (r - 1));
    for (int len : faces) CHECK(len == 6);
    int max_degree = 0;
    for (Vertex v : w.graph.vertices()) max_degree = std::max(max_degree, w.graph.degree(v));
    CHECK(max_degree == 3);
  }
}

TEST_CASE("wall structure") {
  Wall w5 = elementary_wall(5);
  auto st = wall_structure(w5);
  CHECK(st.vertical.size() == 5);
  CHECK(st.horizontal.size() == 5);
  CHECK(st.layers.size() == 2);
  CHECK(st.perimeter == st.layers.front());
  CHECK(st.central.size() == 2);
  for (Vertex c : st.central) CHECK(w5.graph.degree(c) == 3);
  for (const auto& layer : st.layers)
    for (Vertex c : st.central) CHECK(std::find(layer.begin(), layer.end(), c) == layer.end());
  // Vertical and horizontal paths are paths of the wall.
  for (const auto* family : {&st.vertical, &st.horizontal})
    for (const auto& p : *family)
      for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(w5.graph.has_edge(p[i], p[i + 1]));
  // Layers are disjoint cycles.
  std::set<Vertex> seen;
  for (const auto& layer : st.layers) {
    for (std::size_t i = 0; i < layer.size(); ++i) {
      CHECK(w5.graph.has_edge(layer[i], layer[(i + 1) % layer.size()]));
      CHECK(seen.insert(layer[i]).second);
    }
  }
  // Horizontal and vertical paths together cover every edge.
  std::set<Edge> covered;
  for (const auto* family : {&st.vertical, &st.horizontal})
    for (const auto& p : *family)
      for (std::size_t i = 0; i + 1 < p.size(); ++i)
        covered.insert({std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])});
  CHECK(covered.size() == static_cast<std::size_t>(w5.graph.num_edges()));
}

TEST_CASE("central subwalls") {
  Wall w5 = elementary_wall(5);
  Wall same = central_subwall(w5, 5);
  CHECK(same.graph == w5.graph);
  Wall w3 = central_subwall(w5, 3);
  CHECK(w3.height == 3);
  CHECK_NOTHROW(validate_wall(w3));
  CHECK(canonical_form(w3.graph) == canonical_form(elementary_wall(3).graph));
  Wall w7 = elementary_wall(7);
  for (int q : {3, 5}) CHECK(canonical_form(central_subwall(w7, q).graph) == canonical_form(elementary_wall(q).graph));
  CHECK_THROWS_AS(central_subwall(w5, 4), InputError);
  CHECK_THROWS_AS(central_subwall(w5, 7), InputError);
}

TEST_CASE("canonical partitions") {
  for (int r : {3, 5, 7, 9}) {
    Wall w = elementary_wall(r);
    auto q = canonical_partition(w);
    CHECK(static_cast<int>(q.internal.size()) == (r - 2) * (r - 2));
    std::set<Vertex> all(q.external.begin(), q.external.end());
    std::size_t total = q.external.size();
    for (const auto& bag : q.internal) {
      CHECK(is_connected_subset(w.graph, bag));
      all.insert(bag.begin(), bag.end());
      total += bag.size();
    }
    CHECK(total == all.size());
    CHECK(static_cast<int>(all.size()) == w.graph.num_vertices());
    CHECK(canonical_form(quotient_graph(w.graph, q.internal)) == canonical_form(grid_graph(r - 2, r - 2)));
  }
  CHECK(canonical_partition(elementary_wall(3)).internal.size() == 1);
}

TEST_CASE("canonical partition of a subdivided wall") {
  Wall w = elementary_wall(5);
  for (auto [u, v] : std::vector<Edge>{{w.at(5, 3), w.at(6, 3)}, {w.at(4, 3), w.at(5, 3)}, {w.at(4, 2), w.at(4, 3)}})
    w = subdivide_wall_edge(w, u, v);
  w = subdivide_wall_edge(w, w.at(1, 1), w.at(2, 1));
  CHECK_NOTHROW(validate_wall(w));
  auto q = canonical_partition(w);
  std::size_t total = q.external.size();
  for (const auto& bag : q.internal) {
    CHECK(is_connected_subset(w.graph, bag));
    total += bag.size();
  }
  CHECK(static_cast<int>(total) == w.graph.num_vertices());
  CHECK(canonical_form(quotient_graph(w.graph, q.internal)) == canonical_form(grid_graph(3, 3)));
  auto st = wall_structure(w);
  CHECK(st.layers.size() == 2);
  CHECK(st.central.size() == 2);
}

TEST_CASE("enhanced partitions") {
  Wall w = elementary_wall(5);
  auto q = canonical_partition(w);
  auto same = enhance_partition(w.graph, w, q);
  CHECK(same.internal == q.internal);
  CHECK(same.external == q.external);
  Vertex inside = q.bag(3, 3).front();
  Vertex pendant = w.graph.max_vertex() + 1;
  Vertex isolated = pendant + 1;
  std::vector<Vertex> vs = w.graph.vertices();
  vs.push_back(pendant);
  vs.push_back(isolated);
  std::vector<Edge> es = w.graph.edges();
  es.emplace_back(inside, pendant);
  OrderedGraph g(vs, es);
  auto e = enhance_partition(g, w, q);
  const auto& bag = e.bag(3, 3);
  CHECK(std::find(bag.begin(), bag.end(), pendant) != bag.end());
  CHECK(std::find(e.external.begin(), e.external.end(), isolated) != e.external.end());
  CHECK_THROWS_AS(enhance_partition(path_graph(3), w, q), InputError);
}

TEST_CASE("internally disjoint paths") {
  CHECK(count_internally_disjoint_paths(complete_graph(4), 0, 1) ==
        lrep::testing::brute_min_vertex_cut(complete_graph(4), 0, 1));
  CHECK(count_internally_disjoint_paths(disjoint_union(path_graph(2), path_graph(2)), 0, 2) == 0);
  OrderedGraph k23 = complete_bipartite(2, 3);
  CHECK(count_internally_disjoint_paths(k23, 0, 1) == lrep::testing::brute_min_vertex_cut(k23, 0, 1));
  CHECK_THROWS_AS(count_internally_disjoint_paths(k23, 0, 0), InputError);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    OrderedGraph g = random_graph(5 + static_cast<int>(seed % 8), 0.3, 300 + seed);
    int n = g.num_vertices();
    Vertex s = static_cast<Vertex>(seed % n), t = static_cast<Vertex>((seed * 7 + 1) % n);
    if (s == t) continue;
    CHECK(count_internally_disjoint_paths(g, s, t) == lrep::testing::brute_min_vertex_cut(g, s, t));
  }
}

TEST_CASE("high-flow detection") {
  Wall w = elementary_wall(5);
  CHECK(detect_high_flow_vertices(w.graph, w, 1).empty());
  auto full = apex_wall(5, 1, 9, 0, 1);
  CHECK(detect_high_flow_vertices(full.graph, full.wall, 9) == full.apexes);
  // One edge into the wall gives flow at most one.
  std::vector<Vertex> vs = w.graph.vertices();
  Vertex x = w.graph.max_vertex() + 1;
  vs.push_back(x);
  std::vector<Edge> es = w.graph.edges();
  es.emplace_back(canonical_partition(w).bag(3, 3).front(), x);
  CHECK(detect_high_flow_vertices(OrderedGraph(vs, es), w, 5).empty());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto aw = apex_wall(7, 3, 12, 6, seed);
    CHECK(detect_high_flow_vertices(aw.graph, aw.wall, 12, Execution::kSerial) == aw.apexes);
    CHECK(detect_high_flow_vertices(aw.graph, aw.wall, 12, Execution::kParallel) == aw.apexes);
  }
}

TEST_CASE("apex grids") {
  auto ag = apex_grid(3, 1, true);
  CHECK(ag.graph.num_vertices() == 10);
  CHECK(ag.graph.num_edges() == 21);
  CHECK(apex_grid(4, 0, true).graph == grid_graph(4, 4));
  auto two = apex_grid(3, 2, true);
  CHECK_FALSE(two.graph.has_edge(two.apexes[0], two.apexes[1]));
  auto clique = apex_grid(3, 2, true, true);
  CHECK(clique.graph.has_edge(clique.apexes[0], clique.apexes[1]));
}

TEST_CASE("fixed minors") {
  auto big = apex_grid(3, 1, true);
  auto small = apex_grid(2, 1, true);
  // Rename the small apex to the big apex identifier.
  std::map<Vertex, Vertex> rename{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, big.apexes[0]}};
  OrderedGraph h = relabel(small.graph, rename);
  std::vector<Vertex> a{big.apexes[0]};
  CHECK(is_fixed_minor(big.graph, a, h));
  // Joining the two ends of a path needs a contraction at one of them.
  OrderedGraph p3 = path_graph(3);
  OrderedGraph ends(std::vector<Vertex>{0, 2}, std::vector<Edge>{{0, 2}});
  std::vector<Vertex> both{0, 2};
  CHECK(is_minor(p3, ends));
  CHECK_FALSE(is_fixed_minor(p3, both, ends));
  OrderedGraph path = path_graph(4);
  std::vector<Vertex> missing{42};
  OrderedGraph with_missing(std::vector<Vertex>{0, 42}, std::vector<Edge>{{0, 42}});
  CHECK_FALSE(is_fixed_minor(path, missing, with_missing));
}
