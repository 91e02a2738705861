// SPDX-License-Identifier: Apache-2.0
#include "lrep/oracle.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>

#include "lrep/error.hpp"

namespace lrep {

namespace {

// Calls fn(subset) for every subset of `items` of exactly `size` elements in
// lexicographic order; stops early when fn returns true.
template <class T, class Fn>
bool for_each_combination(const std::vector<T>& items, int size, Fn&& fn) {
  int n = static_cast<int>(items.size());
  if (size > n) return false;
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<T> pick(size);
  while (true) {
    for (int i = 0; i < size; ++i) pick[i] = items[idx[i]];
    if (fn(pick)) return true;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_guards(const Instance& inst, const BruteGuards& guards) {
  if (inst.g.num_vertices() > guards.max_vertices)
    throw CapacityError("brute force: graph has more than " +
                        std::to_string(guards.max_vertices) + " vertices");
  if (inst.k > guards.max_budget)
    throw CapacityError("brute force: budget above " + std::to_string(guards.max_budget));
  if (inst.k < 0) throw InputError("budget must be non-negative");
}

bool extends(const Annotation* ann, const std::vector<Vertex>& s) {
  if (!ann) return true;
  return std::includes(s.begin(), s.end(), ann->s.begin(), ann->s.end());
}

// First solution on this exact set S, in transformation order.
std::optional<Solution> first_on_subset(const Instance& inst, const Annotation* ann,
                                        const std::vector<Vertex>& s) {
  if (!extends(ann, s)) return std::nullopt;
  OrderedGraph h1 = induced_subgraph(inst.g, s);
  for (auto& t : inst.action.enumerate(h1)) {
    if (ann && !ann->s.empty() && restrict(t, ann->s) != ann->t) continue;
    if (in_exc(apply_modification(inst.g, s, t), inst.f)) return Solution{s, std::move(t)};
  }
  return std::nullopt;
}

std::optional<Solution> solve(const Instance& inst, const Annotation* ann, Execution exec,
                              const BruteGuards& guards) {
  check_guards(inst, guards);
  validate_instance(inst);
  if (ann && static_cast<int>(ann->s.size()) > inst.k) return std::nullopt;
  const auto& vs = inst.g.vertices();
  int lo = ann ? static_cast<int>(ann->s.size()) : 0;
  for (int size = lo; size <= std::min(inst.k, inst.g.num_vertices()); ++size) {
    if (exec == Execution::kSerial) {
      std::optional<Solution> found;
      for_each_combination(vs, size, [&](const std::vector<Vertex>& s) {
        found = first_on_subset(inst, ann, s);
        return found.has_value();
      });
      if (found) return found;
      continue;
    }
    std::vector<std::vector<Vertex>> subsets;
    for_each_combination(vs, size, [&](const std::vector<Vertex>& s) {
      subsets.push_back(s);
      return false;
    });
    std::vector<std::optional<Solution>> results(subsets.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      try {
        results[i] = first_on_subset(inst, ann, subsets[i]);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    for (auto& r : results)
      if (r) return r;
  }
  return std::nullopt;
}

}  // namespace

void validate_instance(const Instance& inst) {
  if (!inst.annotation) return;
  const auto& ann = *inst.annotation;
  std::vector<Vertex> s = ann.s;
  std::sort(s.begin(), s.end());
  if (s != ann.s || std::adjacent_find(s.begin(), s.end()) != s.end())
    throw InputError("annotation set must be sorted and duplicate-free");
  for (Vertex v : s)
    if (!inst.g.has_vertex(v)) throw InputError("annotation vertex not in G");
  if (s.empty()) return;
  OrderedGraph h1 = induced_subgraph(inst.g, s);
  std::string why;
  if (!is_valid_transformation(h1, ann.t, &why))
    throw InputError("annotation transformation invalid: " + why);
  if (!inst.action.contains(h1, ann.t))
    throw InputError("annotation is not allowed by action " + inst.action.label());
}

bool validate_solution(const Instance& inst, const Solution& sol, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (!std::is_sorted(sol.s.begin(), sol.s.end()) ||
      std::adjacent_find(sol.s.begin(), sol.s.end()) != sol.s.end())
    return fail("S not sorted or has duplicates");
  for (Vertex v : sol.s)
    if (!inst.g.has_vertex(v)) return fail("S contains a non-vertex");
  if (static_cast<int>(sol.s.size()) > inst.k) return fail("|S| exceeds k");
  OrderedGraph h1 = induced_subgraph(inst.g, sol.s);
  std::string why;
  if (!is_valid_transformation(h1, sol.t, &why)) return fail("transformation: " + why);
  if (!inst.action.contains(h1, sol.t)) return fail("transformation not in the action");
  if (inst.annotation && !inst.annotation->s.empty()) {
    if (!extends(&*inst.annotation, sol.s)) return fail("S does not contain S'");
    if (restrict(sol.t, inst.annotation->s) != inst.annotation->t)
      return fail("solution does not extend the annotation");
  }
  if (!in_exc(apply_modification(inst.g, sol.s, sol.t), inst.f))
    return fail("modified graph is not in exc(F)");
  return true;
}

std::optional<Solution> solve_brute(const Instance& inst, Execution exec,
                                    const BruteGuards& guards) {
  Instance plain = inst;
  plain.annotation.reset();
  return solve(plain, nullptr, exec, guards);
}

std::optional<Solution> solve_brute_annotated(const Instance& inst, Execution exec,
                                              const BruteGuards& guards) {
  return solve(inst, inst.annotation ? &*inst.annotation : nullptr, exec, guards);
}

std::vector<Solution> enumerate_solutions(const Instance& inst, const BruteGuards& guards) {
  check_guards(inst, guards);
  validate_instance(inst);
  const Annotation* ann = inst.annotation ? &*inst.annotation : nullptr;
  std::vector<Solution> out;
  if (ann && static_cast<int>(ann->s.size()) > inst.k) return out;
  for (int size = 0; size <= std::min(inst.k, inst.g.num_vertices()); ++size) {
    for_each_combination(inst.g.vertices(), size, [&](const std::vector<Vertex>& s) {
      if (!extends(ann, s)) return false;
      OrderedGraph h1 = induced_subgraph(inst.g, s);
      for (auto& t : inst.action.enumerate(h1)) {
        if (ann && !ann->s.empty() && restrict(t, ann->s) != ann->t) continue;
        if (in_exc(apply_modification(inst.g, s, t), inst.f)) out.push_back({s, t});
      }
      return false;
    });
  }
  return out;
}

bool check_irrelevant(const Instance& inst, Vertex v, const BruteGuards& guards) {
  if (!inst.g.has_vertex(v)) throw InputError("vertex not in G");
  if (inst.annotation &&
      std::binary_search(inst.annotation->s.begin(), inst.annotation->s.end(), v))
    throw InputError("vertex belongs to the annotation");
  Instance smaller = inst;
  std::vector<Vertex> gone{v};
  smaller.g = delete_vertices(inst.g, gone);
  bool before = solve_brute_annotated(inst, Execution::kParallel, guards).has_value();
  bool after = solve_brute_annotated(smaller, Execution::kParallel, guards).has_value();
  return before == after;
}

ObligatoryStatus check_obligatory(const Instance& inst, const std::vector<Vertex>& a,
                                  const BruteGuards& guards) {
  for (Vertex v : a)
    if (!inst.g.has_vertex(v)) throw InputError("vertex of A not in G");
  auto sols = enumerate_solutions(inst, guards);
  if (sols.empty()) return ObligatoryStatus::kVacuous;
  std::set<Vertex> aset(a.begin(), a.end());
  std::set<Vertex> fixed;
  if (inst.annotation) fixed.insert(inst.annotation->s.begin(), inst.annotation->s.end());
  for (const auto& sol : sols) {
    std::vector<Vertex> touched;
    for (Vertex v : sol.s)
      if (!fixed.count(v) && aset.count(v)) touched.push_back(v);
    if (touched.empty()) return ObligatoryStatus::kFails;
    if (phi_plus(sol.t, touched).size() >= touched.size()) return ObligatoryStatus::kFails;
  }
  return ObligatoryStatus::kHolds;
}

const char* to_string(ObligatoryStatus s) {
  switch (s) {
    case ObligatoryStatus::kHolds: return "holds";
    case ObligatoryStatus::kFails: return "fails";
    case ObligatoryStatus::kVacuous: return "vacuous";
  }
  return "?";
}

namespace {

// Quotient of g by the classes of `parent` (a union-find array over
// positions); each class is named after its smallest vertex.
OrderedGraph quotient(const OrderedGraph& g, std::vector<int> parent) {
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int n = g.num_vertices();
  std::vector<Vertex> name(n);
  for (int i = 0; i < n; ++i) name[i] = g.vertex_at(find(i));
  for (int i = 0; i < n; ++i) name[find(i)] = std::min(name[find(i)], g.vertex_at(i));
  std::vector<Vertex> vs;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) vs.push_back(name[i]);
  std::sort(vs.begin(), vs.end());
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) {
    Vertex a = name[find(g.index_of(u))];
    Vertex b = name[find(g.index_of(v))];
    if (a != b) es.emplace_back(std::min(a, b), std::max(a, b));
  }
  return OrderedGraph::collapsing(vs, es);
}

std::vector<int> singletons(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

OrderedGraph contract_set(const OrderedGraph& g, const std::vector<Edge>& f) {
  auto p = singletons(g.num_vertices());
  auto find = [&](int x) {
    while (p[x] != x) x = p[x];
    return x;
  };
  for (auto [u, v] : f) {
    int a = find(g.index_of(u));
    int b = find(g.index_of(v));
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
  return quotient(g, p);
}

bool is_matching_set(const std::vector<Edge>& es) {
  std::set<Vertex> seen;
  for (auto [u, v] : es)
    if (!seen.insert(u).second || !seen.insert(v).second) return false;
  return true;
}

bool is_induced_matching_set(const OrderedGraph& g, const std::vector<Edge>& es) {
  if (!is_matching_set(es)) return false;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      for (Vertex a : {es[i].first, es[i].second})
        for (Vertex b : {es[j].first, es[j].second})
          if (g.has_edge(a, b)) return false;
  return true;
}

bool is_star_set(const std::vector<Edge>& es) {
  if (es.size() <= 1) return true;
  for (Vertex c : {es[0].first, es[0].second}) {
    bool all = true;
    for (auto [u, v] : es) all = all && (u == c || v == c);
    if (all) return true;
  }
  return false;
}

template <class Fn>
bool any_vertex_subset(const OrderedGraph& g, int k, Fn&& fn) {
  for (int size = 0; size <= std::min(k, g.num_vertices()); ++size)
    if (for_each_combination(g.vertices(), size, fn)) return true;
  return false;
}

template <class Fn>
bool any_edge_subset(const OrderedGraph& g, int k, Fn&& fn) {
  auto es = g.edges();
  for (int size = 0; size <= std::min<int>(k, es.size()); ++size)
    if (for_each_combination(es, size, fn)) return true;
  return false;
}

// Every partition of s, as union-find arrays over positions of g.
template <class Fn>
bool any_partition(const OrderedGraph& g, const std::vector<Vertex>& s, Fn&& fn) {
  std::vector<int> block(s.size());
  auto rec = [&](auto&& self, std::size_t i, int blocks) -> bool {
    if (i == s.size()) {
      auto p = singletons(g.num_vertices());
      std::vector<int> root(blocks, -1);
      for (std::size_t j = 0; j < s.size(); ++j) {
        int pos = g.index_of(s[j]);
        if (root[block[j]] < 0) {
          root[block[j]] = pos;
        } else {
          p[pos] = root[block[j]];
        }
      }
      return fn(p);
    }
    for (int b = 0; b <= blocks; ++b) {
      block[i] = b;
      if (self(self, i + 1, std::max(blocks, b + 1))) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace

bool solve_problem_direct(Problem p, const OrderedGraph& g, int k, const ObstructionSet& f) {
  if (k < 0) throw InputError("budget must be non-negative");
  auto in = [&](const OrderedGraph& h) { return in_exc(h, f); };
  switch (p) {
    case Problem::kVertexDeletion:
      return any_vertex_subset(g, k, [&](const std::vector<Vertex>& s) {
        return in(delete_vertices(g, s));
      });
    case Problem::kIndependentSetDeletion:
      return any_vertex_subset(g, k, [&](const std::vector<Vertex>& s) {
        for (std::size_t i = 0; i < s.size(); ++i)
          for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) return false;
        return in(delete_vertices(g, s));
      });
    case Problem::kSubgraphComplementation:
      return any_vertex_subset(g, k, [&](const std::vector<Vertex>& s) {
        std::vector<Edge> es;
        std::set<Vertex> ss(s.begin(), s.end());
        for (auto [u, v] : g.edges())
          if (!(ss.count(u) && ss.count(v))) es.emplace_back(u, v);
        for (std::size_t i = 0; i < s.size(); ++i)
          for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) es.emplace_back(s[i], s[j]);
        return in(OrderedGraph(g.vertices(), es));
      });
    case Problem::kVertexIdentification:
      return any_vertex_subset(g, k, [&](const std::vector<Vertex>& s) {
        return any_partition(g, s, [&](const std::vector<int>& uf) { return in(quotient(g, uf)); });
      });
    case Problem::kEdgeDeletion:
      return any_edge_subset(g, k, [&](const std::vector<Edge>& f) {
        return in(delete_edges(g, f));
      });
    case Problem::kEdgeContraction:
      return any_edge_subset(g, k, [&](const std::vector<Edge>& f) {
        return in(contract_set(g, f));
      });
    case Problem::kMatchingDeletion:
    case Problem::kInducedMatchingDeletion:
      return any_edge_subset(g, k, [&](const std::vector<Edge>& f) {
        bool ok = p == Problem::kMatchingDeletion ? is_matching_set(f)
                                                   : is_induced_matching_set(g, f);
        return ok && in(delete_edges(g, f));
      });
    case Problem::kMatchingContraction:
    case Problem::kInducedMatchingContraction:
      return any_edge_subset(g, k, [&](const std::vector<Edge>& f) {
        bool ok = p == Problem::kMatchingContraction ? is_matching_set(f)
                                                      : is_induced_matching_set(g, f);
        return ok && in(contract_set(g, f));
      });
    case Problem::kStarDeletion:
      return any_edge_subset(g, k, [&](const std::vector<Edge>& f) {
        return is_star_set(f) && in(delete_edges(g, f));
      });
  }
  throw InputError("unknown problem");
}

const char* problem_name(Problem p) {
  switch (p) {
    case Problem::kVertexDeletion: return "vertex-deletion";
    case Problem::kEdgeDeletion: return "edge-deletion";
    case Problem::kEdgeContraction: return "edge-contraction";
    case Problem::kVertexIdentification: return "vertex-identification";
    case Problem::kIndependentSetDeletion: return "independent-set-deletion";
    case Problem::kMatchingDeletion: return "matching-deletion";
    case Problem::kInducedMatchingDeletion: return "induced-matching-deletion";
    case Problem::kMatchingContraction: return "matching-contraction";
    case Problem::kInducedMatchingContraction: return "induced-matching-contraction";
    case Problem::kStarDeletion: return "star-deletion";
    case Problem::kSubgraphComplementation: return "subgraph-complementation";
  }
  return "?";
}

}  // namespace lrep
