#include <catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "lrep/boundaried.hpp"
#include "lrep/canonical.hpp"
#include "lrep/error.hpp"
#include "lrep/generators.hpp"
#include "lrep/minors.hpp"
#include "support.hpp"

using namespace lrep;
using lrep::testing::make_graph;

namespace {

// Path between boundary vertices 0 (label 1) and 1 (label 2) through
// `internal` new vertices.
BoundariedGraph boundary_path(int internal) {
  std::vector<Edge> es;
  Vertex prev = 0;
  for (int i = 0; i < internal; ++i) {
    es.emplace_back(prev, 2 + i);
    prev = 2 + i;
  }
  es.emplace_back(std::min(prev, 1), std::max(prev, 1));
  return make_boundaried(OrderedGraph::on_range(2 + internal, es), {{0, 1}, {1, 2}});
}

BoundariedGraph pendant_triangle() {
  return make_boundaried(make_graph(3, {{0, 1}, {1, 2}, {0, 2}}), {{0, 1}});
}

BoundariedGraph pendant_edge() { return make_boundaried(make_graph(2, {{0, 1}}), {{0, 1}}); }

bool subset(const std::vector<CanonicalKey>& a, const std::vector<CanonicalKey>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("boundaried graph validation") {
  CHECK_THROWS_AS(make_boundaried(path_graph(2), {{0, 1}, {1, 1}}), InputError);
  CHECK_THROWS_AS(make_boundaried(path_graph(2), {{5, 1}}), InputError);
  CHECK_THROWS_AS(make_boundaried(path_graph(2), {{0, 0}}), InputError);
}

TEST_CASE("boundaried keys keep labels") {
  auto a = make_boundaried(path_graph(3), {{0, 1}, {2, 2}});
  auto b = make_boundaried(path_graph(3), {{0, 2}, {2, 1}});
  auto c = make_boundaried(path_graph(3), {{0, 1}, {1, 2}});
  CHECK(boundaried_key(a) == boundaried_key(b));
  CHECK(boundaried_key(a) != boundaried_key(c));
  CHECK(colored_key(to_colored(a)) == colored_key(to_colored(b)));
  CHECK(to_boundaried(to_colored(a)).labels.size() == 2);
}

TEST_CASE("gluing") {
  auto empty_a = make_boundaried(complete_graph(3), {});
  auto empty_b = make_boundaried(path_graph(2), {});
  CHECK(glue(empty_a, empty_b).num_vertices() == 5);
  CHECK(glue(empty_a, empty_b).num_edges() == 4);
  auto abc = make_boundaried(complete_graph(3), {{0, 1}, {1, 2}});
  auto abd = make_boundaried(complete_graph(3), {{0, 1}, {1, 2}});
  OrderedGraph g = glue(abc, abd);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 5);
  auto just_boundary = make_boundaried(complete_graph(2), {{0, 1}, {1, 2}});
  CHECK(canonical_form(glue(abc, just_boundary)) == canonical_form(complete_graph(3)));
}

TEST_CASE("compatibility") {
  auto with_edge = make_boundaried(complete_graph(2), {{0, 1}, {1, 2}});
  auto without = make_boundaried(empty_graph(2), {{0, 1}, {1, 2}});
  CHECK_FALSE(compatible(with_edge, without));
  CHECK(compatible(with_edge, with_edge));
  auto other = make_boundaried(complete_graph(2), {{0, 3}, {1, 4}});
  CHECK_FALSE(compatible(with_edge, other));
  CHECK_THROWS_AS(glue(with_edge, without), InputError);
}

TEST_CASE("boundaried minors") {
  auto edge = make_boundaried(complete_graph(2), {{0, 1}, {1, 2}});
  CHECK(boundaried_minor(boundary_path(1), edge));
  auto single = make_boundaried(empty_graph(1), {{0, 1}});
  CHECK_FALSE(boundaried_minor(edge, single));
  auto k4 = make_boundaried(complete_graph(4), {{0, 1}, {1, 2}});
  auto k3 = make_boundaried(complete_graph(3), {{0, 1}, {1, 2}});
  CHECK(boundaried_minor(k4, k3));
  CHECK_FALSE(boundaried_minor(k3, k4));
}

TEST_CASE("boundaried minor relation is reflexive and transitive") {
  std::vector<BoundariedGraph> corpus;
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : all_graphs(n)) {
      corpus.push_back(make_boundaried(g, {{0, 1}}));
      if (n >= 2) corpus.push_back(make_boundaried(g, {{0, 1}, {1, 2}}));
    }
  for (const auto& a : corpus) CHECK(boundaried_minor(a, a));
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      if (a.label_set() != b.label_set() || !boundaried_minor(a, b)) continue;
      for (const auto& c : corpus)
        if (c.label_set() == b.label_set() && boundaried_minor(b, c)) CHECK(boundaried_minor(a, c));
    }
}

TEST_CASE("folios") {
  auto k2 = make_boundaried(complete_graph(2), {{0, 1}, {1, 2}});
  CHECK(minor_folio(k2, 5).size() == 2);
  // Beyond the budget, long internal paths are indistinguishable.
  const int h = 3;
  CHECK(folio_key(boundary_path(4), h) == folio_key(boundary_path(5), h));
  CHECK(minor_folio(boundary_path(4), h + 2) == minor_folio(boundary_path(5), h + 2));
  CHECK_FALSE(equivalence_witness(boundary_path(4), boundary_path(5), h, 4).has_value());
  // A short path is its own folio key and differs from a long one.
  CHECK(folio_key(boundary_path(0), h) != folio_key(boundary_path(5), h));
  CHECK(folio_key(pendant_triangle(), h) != folio_key(pendant_edge(), h));
}

TEST_CASE("folio keys determine folios") {
  std::vector<BoundariedGraph> corpus;
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) {
      corpus.push_back(make_boundaried(g, {{0, 1}}));
      if (n >= 2) corpus.push_back(make_boundaried(g, {{0, 1}, {n - 1, 2}}));
    }
  const int h = 2;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      if (corpus[i].label_set() != corpus[j].label_set()) continue;
      if (!(folio_key(corpus[i], h) == folio_key(corpus[j], h))) continue;
      int budget = h + static_cast<int>(corpus[i].labels.size());
      CHECK(minor_folio(corpus[i], budget) == minor_folio(corpus[j], budget));
    }
}

TEST_CASE("folio monotone under boundaried minors") {
  auto k4 = make_boundaried(complete_graph(4), {{0, 1}, {1, 2}});
  auto k3 = make_boundaried(complete_graph(3), {{0, 1}, {1, 2}});
  CHECK(subset(minor_folio(k3, 4), minor_folio(k4, 4)));
  REQUIRE(boundaried_minor(boundary_path(3), boundary_path(1)));
  CHECK(subset(minor_folio(boundary_path(1), 4), minor_folio(boundary_path(3), 4)));
}

TEST_CASE("witnesses separate inequivalent graphs") {
  auto w = equivalence_witness(pendant_triangle(), pendant_edge(), 3, 2);
  REQUIRE(w.has_value());
  CHECK(is_minor(glue(w->f, pendant_triangle()), w->h) !=
        is_minor(glue(w->f, pendant_edge()), w->h));
  CHECK_FALSE(equivalence_witness(pendant_edge(), pendant_edge(), 3, 3).has_value());
}

TEST_CASE("topological folios") {
  auto k2 = make_boundaried(complete_graph(2), {{0, 1}, {1, 2}});
  CHECK(topo_folio(k2, 3).size() == 2);
  auto none = make_boundaried(OrderedGraph{}, {});
  CHECK(topo_folio(none, 0).size() == 1);
  // Subdividing an internal edge can only add members: the original is a
  // topological minor of the subdivision.
  auto tri = make_boundaried(complete_graph(3), {{0, 1}});
  auto sub = make_boundaried(subdivide_edge(complete_graph(3), 1, 2), {{0, 1}});
  for (int ell = 0; ell <= 6; ++ell) CHECK(subset(topo_folio(tri, ell), topo_folio(sub, ell)));
}

TEST_CASE("representative store") {
  RepresentativeStore store(3);
  auto long_path = boundary_path(5);
  auto short_path = boundary_path(4);
  auto first = store.lookup_or_insert(long_path);
  CHECK(store.lookup_or_insert(long_path) == first);
  auto rep = store.lookup_or_insert(short_path);
  CHECK(rep.graph.num_vertices() == 6);
  CHECK(store.lookup_or_insert(long_path).graph.num_vertices() == 6);
  CHECK(store.size() == 1);
  auto tri = store.lookup_or_insert(pendant_triangle());
  auto edge = store.lookup_or_insert(pendant_edge());
  CHECK_FALSE(boundaried_key(tri) == boundaried_key(edge));
  CHECK(store.size() == 3);
  std::stringstream ss;
  store.save(ss);
  RepresentativeStore again(3);
  again.load(ss);
  CHECK(again.size() == 3);
  RepresentativeStore other_h(4);
  std::stringstream ss2;
  store.save(ss2);
  CHECK_THROWS_AS(other_h.load(ss2), InputError);
}
