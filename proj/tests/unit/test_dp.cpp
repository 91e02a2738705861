#include <catch_amalgamated.hpp>

#include "lrep/dp.hpp"
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

NiceNode leaf() { return NiceNode{NodeKind::kLeaf, {}, 0, {}}; }
NiceNode introduce(std::vector<Vertex> bag, Vertex v) { return NiceNode{NodeKind::kIntroduce, bag, v, {0}}; }
NiceNode forget(std::vector<Vertex> bag, Vertex v) { return NiceNode{NodeKind::kForget, bag, v, {0}}; }
NiceNode join(std::vector<Vertex> bag) { return NiceNode{NodeKind::kJoin, bag, 0, {0, 1}}; }

}  // namespace

TEST_CASE("label scheme") {
  auto labels = label_scheme(path_graph(3), 2);
  CHECK(labels == std::map<Vertex, int>{{0, 3}, {1, 4}, {2, 5}});
  CHECK(label_scheme(path_graph(3), 2) == labels);
}

TEST_CASE("leaf signature") {
  auto inst = instance(path_graph(3), 1, "vDel", "forests");
  DpEngine engine(inst, {});
  auto sig = engine.process_leaf();
  REQUIRE(sig.size() == 1);
  CHECK(engine.validate_entry(sig[0], {}));
  CHECK(engine.process_leaf()[0].key == sig[0].key);
}

TEST_CASE("introduce keeps exc(F)") {
  auto inst = instance(complete_graph(3), 0, "vDel", "forests");
  DpEngine engine(inst, {});
  auto s0 = engine.process_leaf();
  auto s1 = engine.process_introduce(introduce({0}, 0), s0);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].r.num_boundary() == 1);
  auto s2 = engine.process_introduce(introduce({0, 1}, 1), s1);
  REQUIRE(s2.size() == 1);
  auto s3 = engine.process_introduce(introduce({0, 1, 2}, 2), s2);
  CHECK(s3.empty());
}

TEST_CASE("introduce respects the budget") {
  auto inst = instance(path_graph(2), 1, "vDel", "forests");
  DpEngine engine(inst, {});
  auto s1 = engine.process_introduce(introduce({0}, 0), engine.process_leaf());
  CHECK(s1.size() == 2);  // unmodified or deleted
  for (const auto& e : s1) {
    if (e.pattern.size() != 1) continue;
    auto s2 = engine.process_introduce(introduce({0, 1}, 1), {e});
    for (const auto& f : s2) CHECK(f.pattern.size() == 1);
  }
}

TEST_CASE("forget") {
  auto inst = instance(empty_graph(2), 1, "vDel", "forests");
  DpEngine engine(inst, {});
  auto s1 = engine.process_introduce(introduce({0}, 0), engine.process_leaf());
  for (const auto& e : s1) {
    auto out = engine.process_forget(forget({}, 0), {e});
    REQUIRE(out.size() == 1);
    if (e.sb.empty()) {
      CHECK(out[0].r.num_boundary() == e.r.num_boundary() - 1);
    } else {
      CHECK(out[0].sb.empty());
      CHECK(out[0].r.num_boundary() == e.r.num_boundary());
    }
  }
}

TEST_CASE("join") {
  auto inst = instance(path_graph(3), 0, "vDel", "forests");
  DpEngine engine(inst, {});
  auto base = engine.process_introduce(introduce({1}, 1), engine.process_leaf());
  REQUIRE(base.size() == 1);
  auto left = engine.process_forget(forget({1}, 0), engine.process_introduce(introduce({0, 1}, 0), base));
  auto right = engine.process_forget(forget({1}, 2), engine.process_introduce(introduce({1, 2}, 2), base));
  auto joined = engine.process_join(join({1}), left, right);
  REQUIRE(joined.size() == 1);
  CHECK(joined[0].r.g.n == 3);
  CHECK(joined[0].r.g.num_edges() == 2);
}

TEST_CASE("join pairs only matching bag modifications") {
  auto inst = instance(path_graph(3), 1, "vDel", "forests");
  DpEngine engine(inst, {});
  auto s = engine.process_introduce(introduce({1}, 1), engine.process_leaf());
  REQUIRE(s.size() == 2);
  auto joined = engine.process_join(join({1}), {s[0]}, {s[1]});
  CHECK(joined.empty());
}

TEST_CASE("run_dp small answers") {
  auto c4 = instance(cycle_graph(4), 1, "vDel", "forests");
  auto yes = run_dp(c4);
  REQUIRE(yes.solution);
  CHECK(yes.solution->s.size() == 1);
  CHECK(validate_solution(c4, *yes.solution));
  CHECK_FALSE(run_dp(instance(complete_graph(4), 1, "vDel", "forests")).solution);
  auto con = instance(lrep::testing::k33_plus_edge(), 2, "Con(1)", "planar");
  for (auto mode : {DpMode::kExactCarry, DpMode::kRepresentative}) {
    DpOptions opt;
    opt.mode = mode;
    auto res = run_dp(con, opt);
    REQUIRE(res.solution);
    CHECK(validate_solution(con, *res.solution));
    // Contracting any edge of K3,3 leaves the planar wheel on five vertices.
    CHECK(run_dp(instance(complete_bipartite(3, 3), 2, "Con(1)", "planar"), opt).solution);
  }
  auto tree = run_dp(instance(path_graph(4), 2, "vDel", "forests"));
  REQUIRE(tree.solution);
  CHECK(tree.solution->s.empty());
}

TEST_CASE("graphs already in the class are accepted unchanged") {
  for (const auto& name : catalog_names()) {
    auto action = catalog_takes_param(name) ? std::string(name) + "(1)" : std::string(name);
    auto inst = instance(random_tree(7, 3), 0, action, "forests");
    auto brute = solve_brute(inst, Execution::kSerial);
    auto dp = run_dp(inst);
    CHECK(dp.solution.has_value() == brute.has_value());
    if (dp.solution) CHECK(dp.solution->s.empty());
  }
}

TEST_CASE("dp agrees with brute force in both modes") {
  const std::vector<std::string> actions{"vDel", "eDel(1)", "Con(1)", "id", "ISDel", "Comp", "StarDel(1)",
                                         "mDel(1)", "imDel(1)", "mCon(1)", "imCon(1)"};
  for (std::uint64_t seed = 0; seed < 12; ++seed)
    for (const auto& action : actions)
      for (auto cls : {"forests", "linear-forests"}) {
        auto inst = instance(random_graph(6, 0.35 + 0.05 * (seed % 4), seed), 2, action, cls);
        auto brute = solve_brute(inst, Execution::kSerial);
        for (auto mode : {DpMode::kExactCarry, DpMode::kRepresentative}) {
          DpOptions opt;
          opt.mode = mode;
          opt.validate_entries = true;
          auto res = run_dp(inst, opt);
          INFO(action << " " << cls << " seed " << seed << " " << to_string(mode));
          CHECK(res.solution.has_value() == brute.has_value());
          if (res.solution) CHECK(validate_solution(inst, *res.solution));
        }
      }
}

TEST_CASE("representative signatures are never larger") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = instance(random_graph(8, 0.35, 40 + seed), 2, "vDel", "forests");
    auto td = nice_decomposition(inst.g);
    DpOptions exact;
    exact.decomposition = &td;
    DpOptions rep = exact;
    rep.mode = DpMode::kRepresentative;
    auto a = run_dp(inst, exact);
    auto b = run_dp(inst, rep);
    REQUIRE(a.stats.signature_sizes.size() == b.stats.signature_sizes.size());
    for (std::size_t i = 0; i < a.stats.signature_sizes.size(); ++i)
      CHECK(b.stats.signature_sizes[i] <= a.stats.signature_sizes[i]);
  }
}

TEST_CASE("budget pruning does not change answers") {
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    for (auto action : {"vDel", "Con(1)", "Comp"}) {
      auto inst = instance(random_graph(5, 0.5, 70 + seed), 1, action, "forests");
      DpOptions loose;
      loose.budget_pruning = false;
      CHECK(run_dp(inst).solution.has_value() == run_dp(inst, loose).solution.has_value());
    }
}

TEST_CASE("serial and parallel dp return the same solution") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto inst = instance(random_graph(9, 0.3, 90 + seed), 2, "vDel", "forests");
    DpOptions serial, parallel;
    parallel.exec = Execution::kParallel;
    CHECK(run_dp(inst, serial).solution == run_dp(inst, parallel).solution);
  }
}

TEST_CASE("annotated dp agrees with annotated brute force") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = instance(random_graph(6, 0.5, 120 + seed), 2, "vDel", "forests");
    std::vector<Vertex> s{static_cast<Vertex>(seed % 6)};
    inst.annotation = Annotation{s, deletion_transformation(induced_subgraph(inst.g, s))};
    auto brute = solve_brute_annotated(inst, Execution::kSerial);
    auto dp = run_dp(inst);
    CHECK(dp.solution.has_value() == brute.has_value());
    if (dp.solution) {
      CHECK(validate_solution(inst, *dp.solution));
      CHECK(std::binary_search(dp.solution->s.begin(), dp.solution->s.end(), s[0]));
    }
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = instance(random_graph(6, 0.5, 140 + seed), 2, "Con(1)", "forests");
    auto g = inst.g;
    if (g.num_edges() == 0) continue;
    auto [u, v] = g.edges()[seed % g.num_edges()];
    std::vector<Vertex> s{u, v};
    std::vector<std::vector<Vertex>> block{{u, v}};
    inst.annotation = Annotation{s, quotient_transformation(induced_subgraph(g, s), block)};
    auto brute = solve_brute_annotated(inst, Execution::kSerial);
    auto dp = run_dp(inst);
    CHECK(dp.solution.has_value() == brute.has_value());
    if (dp.solution) CHECK(validate_solution(inst, *dp.solution));
  }
}

TEST_CASE("shared stores persist across runs") {
  auto store = std::make_shared<RepresentativeStore>(builtin_class("forests").constants().max_detail);
  DpOptions opt;
  opt.mode = DpMode::kRepresentative;
  opt.store = store;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto inst = instance(random_graph(7, 0.3, seed), 1, "vDel", "forests");
    CHECK(run_dp(inst, opt).solution.has_value() == solve_brute(inst, Execution::kSerial).has_value());
  }
  CHECK(store->size() > 0);
  opt.store = std::make_shared<RepresentativeStore>(99);
  CHECK_THROWS_AS(run_dp(instance(path_graph(3), 1, "vDel", "forests"), opt), InputError);
}

TEST_CASE("dp guards") {
  DpOptions opt;
  opt.max_budget = 2;
  CHECK_THROWS_AS(run_dp(instance(path_graph(3), 3, "vDel", "forests"), opt), CapacityError);
  opt = {};
  opt.max_width = 2;
  CHECK_THROWS_AS(run_dp(instance(complete_graph(5), 1, "vDel", "forests"), opt), CapacityError);
}
