// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrep/graph.hpp"
#include "lrep/minors.hpp"
#include "lrep/parallel.hpp"
#include "lrep/replacement.hpp"

namespace lrep {

// Partial solution fixed in advance: S' and (H2', φ') ∈ ℒ(G[S']).
struct Annotation {
  std::vector<Vertex> s;
  PatternTransformation t;
};

struct Instance {
  OrderedGraph g;
  int k = 0;
  ReplacementAction action;
  ObstructionSet f;
  std::optional<Annotation> annotation;
};

struct Solution {
  std::vector<Vertex> s;  // sorted
  PatternTransformation t;
  friend bool operator==(const Solution&, const Solution&) = default;
};

// Throws InputError when the annotation is not a member of ℒ(G[S']).
void validate_instance(const Instance& inst);

// Independent re-check of every solution clause: |S| <= k, t ∈ ℒ(G[S]),
// the modified graph lies in exc(F), and t extends the annotation.
bool validate_solution(const Instance& inst, const Solution& sol,
                       std::string* reason = nullptr);

struct BruteGuards {
  int max_vertices = 10;
  int max_budget = 4;
};

// Minimum |S| solution, ties broken by lexicographic S and then by
// transformation_less. The annotation, if any, is ignored.
std::optional<Solution> solve_brute(const Instance& inst,
                                    Execution exec = Execution::kParallel,
                                    const BruteGuards& guards = {});
// Same, restricted to solutions extending the annotation (none means S' = ∅).
std::optional<Solution> solve_brute_annotated(const Instance& inst,
                                              Execution exec = Execution::kParallel,
                                              const BruteGuards& guards = {});
// Every solution extending the annotation, in tie-break order.
std::vector<Solution> enumerate_solutions(const Instance& inst,
                                          const BruteGuards& guards = {});

// Whether deleting v keeps the yes/no answer of the annotated instance.
bool check_irrelevant(const Instance& inst, Vertex v, const BruteGuards& guards = {});

enum class ObligatoryStatus { kHolds, kFails, kVacuous };
// Whether every solution modifies some vertex of A outside S' and maps those
// vertices onto fewer vertices. kVacuous on no-instances.
ObligatoryStatus check_obligatory(const Instance& inst, const std::vector<Vertex>& a,
                                  const BruteGuards& guards = {});
const char* to_string(ObligatoryStatus s);

// Direct brute force of the classical problem, independent of the
// replacement machinery.
bool solve_problem_direct(Problem p, const OrderedGraph& g, int k, const ObstructionSet& f);
const char* problem_name(Problem p);

}  // namespace lrep
