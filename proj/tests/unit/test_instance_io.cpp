#include <catch_amalgamated.hpp>

#include <sstream>

#include "lrep/error.hpp"
#include "lrep/generators.hpp"
#include "lrep/instance_io.hpp"

using namespace lrep;

namespace {

Instance parse(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

}  // namespace

TEST_CASE("minimal instance") {
  auto inst = parse("lrep-instance 1\ngraph 1\naction vDel\nclass forests\nk 0\n");
  CHECK(inst.g.num_vertices() == 1);
  CHECK(inst.k == 0);
  CHECK(inst.action.label() == "vDel");
  CHECK(inst.f.name() == "forests");
}

TEST_CASE("syntax errors name the line") {
  try {
    parse("lrep-instance 1\ngraph 3\nedge 0 x\naction vDel\nclass forests\nk 0\n");
    FAIL("no error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("lrep-instance 2\n"), InputError);
  CHECK_THROWS_AS(parse("lrep-instance 1\ngraph 2\nedge 0 1\nedge 1 0\naction vDel\nclass forests\nk 0\n"),
                  InputError);
  CHECK_THROWS_AS(parse("lrep-instance 1\ngraph 2\naction vDel\nk 0\n"), InputError);
}

TEST_CASE("annotations are checked against the action") {
  const std::string head = "lrep-instance 1\ngraph 4\nedge 0 1\nedge 1 2\nedge 2 3\nedge 0 3\naction vDel\nclass forests\nk 1\n";
  auto ok = parse(head + "annotation\ns 2\nphi 2 -\nend\n");
  REQUIRE(ok.annotation);
  CHECK(ok.annotation->s == std::vector<Vertex>{2});
  CHECK_THROWS_AS(parse(head + "annotation\ns 2\nphi 2 2\nend\n"), InputError);
  CHECK_THROWS_AS(parse(head + "annotation\ns 2\nphi 2 -\n"), InputError);
}

TEST_CASE("normalised files round-trip byte for byte") {
  const std::string con =
      "lrep-instance 1\ngraph 5\nedge 0 1\nedge 0 4\nedge 1 2\nedge 2 3\nedge 3 4\naction Con(2)\nclass planar\nk 4\n"
      "annotation\ns 0 1\nphi 0 0\nphi 1 0\nend\n";
  CHECK(format_instance(parse(con)) == con);
  const std::string custom =
      "lrep-instance 1\ngraph 3\nedge 0 1\naction eDel(1)\nobstruction 3 0-1 0-2 1-2\nobstruction 4 0-1 1-2 2-3\nk 2\n";
  auto inst = parse(custom);
  CHECK(inst.f.graphs().size() == 2);
  CHECK(format_instance(inst) == custom);
  CHECK(format_instance(parse(format_instance(inst))) == custom);
}

TEST_CASE("comments and blank lines") {
  auto inst = parse("# generated\nlrep-instance 1\n\ngraph 2  # two vertices\nedge 0 1\naction id\nclass edgeless\nk 0\n");
  CHECK(inst.g.num_edges() == 1);
}

TEST_CASE("edge lists") {
  std::istringstream in("# a triangle\n5 7\n7 9\n9 5\n11\n");
  OrderedGraph g = parse_edge_list(in);
  CHECK(g.vertices() == std::vector<Vertex>{5, 7, 9, 11});
  CHECK(g.num_edges() == 3);
  std::istringstream bad("1 2 3\n");
  CHECK_THROWS_AS(parse_edge_list(bad), InputError);
}
