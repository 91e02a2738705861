// SPDX-License-Identifier: Apache-2.0
// lrep: solve, generate and import modification instances.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lrep/dp.hpp"
#include "lrep/error.hpp"
#include "lrep/generators.hpp"
#include "lrep/instance_io.hpp"
#include "lrep/oracle.hpp"
#include "lrep/walls.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitMismatch = 3;

struct Guards {
  int max_budget = 6;
  int max_width = 9;
  int brute_max_vertices = 10;
  int brute_max_budget = 4;
};

// LREP_GUARDS="max_budget=6,max_width=9,brute_max_vertices=10,brute_max_budget=4"
Guards guards_from_env() {
  Guards g;
  const char* env = std::getenv("LREP_GUARDS");
  if (!env) return g;
  std::stringstream ss(env);
  for (std::string item; std::getline(ss, item, ',');) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw lrep::InputError("LREP_GUARDS: expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    int value = std::stoi(item.substr(eq + 1));
    if (key == "max_budget") {
      g.max_budget = value;
    } else if (key == "max_width") {
      g.max_width = value;
    } else if (key == "brute_max_vertices") {
      g.brute_max_vertices = value;
    } else if (key == "brute_max_budget") {
      g.brute_max_budget = value;
    } else {
      throw lrep::InputError("LREP_GUARDS: unknown key '" + key + "'");
    }
  }
  return g;
}

std::string vertex_list(const std::vector<lrep::Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out;
}

void report_solution(const std::optional<lrep::Solution>& sol) {
  std::cout << "answer=" << (sol ? "yes" : "no") << "\n";
  if (!sol) return;
  std::cout << "solution.size=" << sol->s.size() << "\n";
  std::cout << "solution.s=" << vertex_list(sol->s) << "\n";
  std::string edges;
  for (auto [u, v] : sol->t.h2.edges()) edges += (edges.empty() ? "" : ",") + std::to_string(u) + "-" + std::to_string(v);
  std::cout << "solution.h2_edges=" << edges << "\n";
  std::string phi;
  for (auto [v, img] : sol->t.phi)
    phi += (phi.empty() ? "" : ",") + std::to_string(v) + ">" + (img == lrep::kDeleted ? "-" : std::to_string(img));
  std::cout << "solution.phi=" << phi << "\n";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct SolveArgs {
  std::string path;
  std::string engine = "dp";
  std::string mode = "representative";
  bool verify = false;
  std::uint64_t seed = 0;
  int jobs = 0;
  bool serial = false;
};

int run_solve(const SolveArgs& a, const Guards& guards) {
  lrep::Instance inst = lrep::read_instance(a.path);
  lrep::set_max_workers(a.jobs);
  const auto exec = a.serial ? lrep::Execution::kSerial : lrep::Execution::kParallel;
  lrep::BruteGuards bg{guards.brute_max_vertices, guards.brute_max_budget};
  std::cout << "instance=" << a.path << "\n";
  std::cout << "vertices=" << inst.g.num_vertices() << "\n";
  std::cout << "edges=" << inst.g.num_edges() << "\n";
  std::cout << "action=" << inst.action.label() << "\n";
  std::cout << "class=" << inst.f.name() << "\n";
  std::cout << "k=" << inst.k << "\n";
  std::cout << "seed=" << a.seed << "\n";
  std::cout << "engine=" << a.engine << "\n";
  std::optional<lrep::Solution> answer;
  auto start = std::chrono::steady_clock::now();
  auto run_mode = [&](lrep::DpMode mode) {
    lrep::DpOptions opt;
    opt.mode = mode;
    opt.exec = exec;
    opt.max_budget = guards.max_budget;
    opt.max_width = guards.max_width;
    return lrep::run_dp(inst, opt);
  };
  if (a.engine == "dp") {
    lrep::DpMode mode = a.mode == "exact-carry" ? lrep::DpMode::kExactCarry : lrep::DpMode::kRepresentative;
    auto res = run_mode(mode);
    answer = res.solution;
    std::cout << "mode=" << lrep::to_string(mode) << "\n";
    std::cout << "time_seconds=" << seconds_since(start) << "\n";
    std::cout << "dp.width=" << res.stats.width << "\n";
    std::cout << "dp.nodes=" << res.stats.nodes << "\n";
    std::cout << "dp.total_entries=" << res.stats.total_entries << "\n";
    std::cout << "dp.max_signature=" << res.stats.max_signature << "\n";
    std::cout << "dp.store_size=" << res.stats.store_size << "\n";
  } else {
    answer = inst.annotation ? lrep::solve_brute_annotated(inst, exec, bg) : lrep::solve_brute(inst, exec, bg);
    std::cout << "time_seconds=" << seconds_since(start) << "\n";
  }
  report_solution(answer);
  if (answer) {
    std::string why;
    bool ok = lrep::validate_solution(inst, *answer, &why);
    std::cout << "solution.valid=" << (ok ? "true" : "false") << "\n";
    if (!ok) {
      std::cout << "solution.reason=" << why << "\n";
      return kExitMismatch;
    }
  }
  if (!a.verify) return kExitOk;
  bool agree = true;
  auto brute = inst.annotation ? lrep::solve_brute_annotated(inst, exec, bg) : lrep::solve_brute(inst, exec, bg);
  for (auto mode : {lrep::DpMode::kExactCarry, lrep::DpMode::kRepresentative}) {
    auto res = run_mode(mode);
    bool same = res.solution.has_value() == brute.has_value() &&
                (!res.solution || lrep::validate_solution(inst, *res.solution));
    std::cout << "verify." << lrep::to_string(mode) << "=" << (same ? "agree" : "mismatch") << "\n";
    agree = agree && same;
  }
  std::cout << "verify.brute=" << (brute ? "yes" : "no") << "\n";
  std::cout << "verify=" << (agree ? "ok" : "mismatch") << "\n";
  return agree ? kExitOk : kExitMismatch;
}

struct GenArgs {
  std::string kind;
  int r = 5;
  int a = 1;
  int d = 4;
  int noise = 0;
  int n = 8;
  double p = 0.4;
  std::uint64_t seed = 1;
  std::string action = "vDel";
  std::string cls = "planar";
  int k = 1;
  std::string out;
};

int run_gen(const GenArgs& a) {
  lrep::Instance inst;
  std::vector<lrep::Vertex> apexes;
  if (a.kind == "wall") {
    inst.g = lrep::elementary_wall(a.r).graph;
  } else if (a.kind == "apex-wall") {
    auto aw = lrep::apex_wall(a.r, a.a, a.d, a.noise, a.seed);
    inst.g = aw.graph;
    apexes = aw.apexes;
  } else if (a.kind == "apex-grid") {
    auto ag = lrep::apex_grid(a.r, a.a, true);
    inst.g = ag.graph;
    apexes = ag.apexes;
  } else if (a.kind == "random") {
    inst.g = lrep::random_graph(a.n, a.p, a.seed);
  } else {
    throw CLI::ValidationError("--kind", "unknown kind '" + a.kind + "'");
  }
  inst.k = a.k;
  inst.action = lrep::catalog_from_label(a.action);
  inst.f = lrep::builtin_class(a.cls);
  std::ostringstream text;
  text << "# kind " << a.kind << " seed " << a.seed << "\n";
  if (!apexes.empty()) text << "# apexes " << vertex_list(apexes) << "\n";
  text << lrep::format_instance(inst);
  if (a.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream f(a.out);
    if (!f) throw lrep::InputError("cannot write " + a.out);
    f << text.str();
    std::cout << "written=" << a.out << "\n";
    std::cout << "vertices=" << inst.g.num_vertices() << "\n";
    std::cout << "edges=" << inst.g.num_edges() << "\n";
    std::cout << "seed=" << a.seed << "\n";
  }
  return kExitOk;
}

struct ImportArgs {
  std::string path;
  std::string action = "vDel";
  std::string cls = "planar";
  int k = 1;
  std::string out;
};

int run_import(const ImportArgs& a) {
  std::ifstream in(a.path);
  if (!in) throw lrep::InputError("cannot open " + a.path);
  lrep::OrderedGraph raw = lrep::parse_edge_list(in);
  std::map<lrep::Vertex, lrep::Vertex> to_range;
  for (int i = 0; i < raw.num_vertices(); ++i) to_range[raw.vertex_at(i)] = i;
  lrep::Instance inst;
  inst.g = lrep::relabel(raw, to_range);
  inst.k = a.k;
  inst.action = lrep::catalog_from_label(a.action);
  inst.f = lrep::builtin_class(a.cls);
  std::string text = lrep::format_instance(inst);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out);
    if (!f) throw lrep::InputError("cannot write " + a.out);
    f << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph modification to minor-closed classes: solver and generators"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve an instance file");
  s->add_option("instance", solve.path, "Instance file")->required()->check(CLI::ExistingFile);
  s->add_option("--engine", solve.engine, "dp or brute")->check(CLI::IsMember({"dp", "brute"}));
  auto* mode_opt = s->add_option("--mode", solve.mode, "Signature mode for the dp engine")
                       ->check(CLI::IsMember({"exact-carry", "representative"}));
  s->add_flag("--verify", solve.verify, "Cross-check both dp modes against brute force");
  s->add_option("--seed", solve.seed, "Recorded in the report");
  s->add_option("--jobs", solve.jobs, "Worker cap, 0 for the runtime default")->check(CLI::NonNegativeNumber);
  s->add_flag("--serial", solve.serial, "Use the serial reference kernels");

  Guards guards;
  try {
    guards = guards_from_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  s->add_option("--max-budget", guards.max_budget, "Largest k accepted by the dp engine");
  s->add_option("--max-width", guards.max_width, "Largest treewidth accepted by the dp engine");
  s->add_option("--brute-max-vertices", guards.brute_max_vertices, "Largest graph for brute force");
  s->add_option("--brute-max-budget", guards.brute_max_budget, "Largest k for brute force");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("--kind", gen.kind, "wall, apex-wall, apex-grid or random")
      ->required()
      ->check(CLI::IsMember({"wall", "apex-wall", "apex-grid", "random"}));
  g->add_option("-r", gen.r, "Wall or grid height");
  g->add_option("-a", gen.a, "Number of apex vertices");
  g->add_option("-d", gen.d, "Internal bags seen by each apex (apex-wall)");
  g->add_option("--noise", gen.noise, "Low-degree extra vertices (apex-wall)");
  g->add_option("-n", gen.n, "Vertices (random)");
  g->add_option("-p", gen.p, "Edge probability (random)")->check(CLI::Range(0.0, 1.0));
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--action", gen.action, "Replacement action label");
  g->add_option("--class", gen.cls, "Target class");
  g->add_option("-k", gen.k, "Budget");
  g->add_option("-o,--out", gen.out, "Output file (stdout if absent)");

  ImportArgs imp;
  auto* im = app.add_subcommand("import", "Convert a plain edge list to an instance");
  im->add_option("edges", imp.path, "Edge list file")->required()->check(CLI::ExistingFile);
  im->add_option("--action", imp.action, "Replacement action label");
  im->add_option("--class", imp.cls, "Target class");
  im->add_option("-k", imp.k, "Budget");
  im->add_option("-o,--out", imp.out, "Output file (stdout if absent)");

  try {
    app.parse(argc, argv);
    if (*s && solve.engine == "brute" && mode_opt->count() > 0)
      throw CLI::ValidationError("--mode", "only meaningful with --engine dp");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (*s) return run_solve(solve, guards);
    if (*g) return run_gen(gen);
    return run_import(imp);
  } catch (const lrep::CapacityError& e) {
    std::cerr << "capacity: " << e.what()
              << " (raise the guard with the matching flag or LREP_GUARDS, or shrink the instance)\n";
    return kExitCapacity;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const lrep::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
