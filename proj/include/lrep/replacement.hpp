// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrep/graph.hpp"

namespace lrep {

// Image of a deleted pattern vertex. Never a valid vertex identifier.
inline constexpr Vertex kDeleted = std::numeric_limits<Vertex>::min();

// (H2, φ) for a pattern H1. Stored normalised: every H2 vertex is named after
// the smallest vertex of its preimage, so the H2 order is the induced order.
struct PatternTransformation {
  OrderedGraph h2;
  // Sorted by pattern vertex; the domain is V(H1).
  std::vector<std::pair<Vertex, Vertex>> phi;

  Vertex image(Vertex v) const;
  std::vector<Vertex> domain() const;
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const PatternTransformation&,
                         const PatternTransformation&) = default;
};

// Canonical order used to break ties between transformations.
bool transformation_less(const PatternTransformation& a, const PatternTransformation& b);

// Builds and validates (H2, φ) for pattern h1. `phi` maps every vertex of h1
// to kDeleted or a vertex of h2; H2 vertices are renamed to the smallest
// preimage. Throws InputError when φ is not onto V(H2), misses a pattern
// vertex, or |V(H2)| > |V(H1)|.
PatternTransformation make_transformation(const OrderedGraph& h1, const OrderedGraph& h2,
                                          std::span<const std::pair<Vertex, Vertex>> phi);

// Checks the invariants of an already normalised transformation for h1.
bool is_valid_transformation(const OrderedGraph& h1, const PatternTransformation& t,
                             std::string* reason = nullptr);

// (H2 = H1 itself, identity).
PatternTransformation identity_transformation(const OrderedGraph& h1);
// (empty H2, everything deleted).
PatternTransformation deletion_transformation(const OrderedGraph& h1);
// Identifies each block to one vertex; vertices outside every block are
// deleted. H2 edges are exactly `h2_edges`, given as pairs of block indices.
PatternTransformation transformation_from_blocks(
    const OrderedGraph& h1, const std::vector<std::vector<Vertex>>& blocks,
    std::span<const std::pair<int, int>> h2_edges);
// Blocks of the quotient of h1 by `blocks` plus every edge between blocks.
PatternTransformation quotient_transformation(const OrderedGraph& h1,
                                              const std::vector<std::vector<Vertex>>& blocks);

std::vector<Vertex> phi_plus(const PatternTransformation& t, std::span<const Vertex> s);
PatternTransformation restrict(const PatternTransformation& t, std::span<const Vertex> x);

// G^S_(H2,φ). The pattern of t must be G[S] (checked by domain).
OrderedGraph apply_modification(const OrderedGraph& g, std::span<const Vertex> s,
                                const PatternTransformation& t);

inline constexpr int kEnumerateAnyGuard = 5;
// All of ℳ(H1), sorted by transformation_less.
std::vector<PatternTransformation> enumerate_any(const OrderedGraph& h1,
                                                 int guard = kEnumerateAnyGuard);

// A replacement action ℒ as a value object: enumerator, membership predicate
// and a declared hereditarity flag. `admits_partial` is a necessary condition
// for (H2', φ') on H1' to be the restriction of some member of ℒ(H1) with
// H1' = H1[X]; the dynamic program uses it to prune. For hereditary actions
// it coincides with `contains`.
class ReplacementAction {
 public:
  using Enumerator = std::function<std::vector<PatternTransformation>(const OrderedGraph&)>;
  using Predicate = std::function<bool(const OrderedGraph&, const PatternTransformation&)>;

  ReplacementAction() = default;
  ReplacementAction(std::string name, std::optional<int> param, bool hereditary,
                    Enumerator enumerate, Predicate contains, Predicate admits_partial = {});

  const std::string& name() const { return name_; }
  std::optional<int> param() const { return param_; }
  // "eDel(2)", "vDel", ...
  std::string label() const;
  bool declared_hereditary() const { return hereditary_; }

  // Sorted by transformation_less; never empty.
  std::vector<PatternTransformation> enumerate(const OrderedGraph& h1) const;
  bool contains(const OrderedGraph& h1, const PatternTransformation& t) const;
  bool admits_partial(const OrderedGraph& h1, const PatternTransformation& t) const;

 private:
  std::string name_;
  std::optional<int> param_;
  bool hereditary_ = false;
  Enumerator enumerate_;
  Predicate contains_;
  Predicate partial_;
};

// vDel, eDel(k), Con(k), id, ISDel, mDel(k), imDel(k), mCon(k), imCon(k),
// StarDel(k), Comp. Parameterised names require `param`.
ReplacementAction catalog(std::string_view name, std::optional<int> param = std::nullopt);
std::vector<std::string> catalog_names();
bool catalog_takes_param(std::string_view name);
// Parses "eDel(2)" or "vDel".
ReplacementAction catalog_from_label(std::string_view label);

// ℳ itself.
ReplacementAction any_replacement();
// Membership-only action; enumeration filters enumerate_any.
ReplacementAction action_from_predicate(std::string name, ReplacementAction::Predicate pred,
                                        bool hereditary);
// Deletes exactly min(k, |E(H1)|) edges. Not hereditary; used to exercise
// check_hereditary.
ReplacementAction exact_edge_deletion(int k);

struct HereditaryCounterexample {
  OrderedGraph pattern;
  PatternTransformation t;
  std::vector<Vertex> x;
};

// Exhaustive over all labelled patterns on 0..n-1, n <= n_max.
std::optional<HereditaryCounterexample> check_hereditary(const ReplacementAction& action,
                                                         int n_max);

// Classical problems and their translation into an action plus a budget on
// the number of modified vertices.
enum class Problem {
  kVertexDeletion,
  kEdgeDeletion,
  kEdgeContraction,
  kVertexIdentification,
  kIndependentSetDeletion,
  kMatchingDeletion,
  kInducedMatchingDeletion,
  kMatchingContraction,
  kInducedMatchingContraction,
  kStarDeletion,
  kSubgraphComplementation,
};

struct ProblemTranslation {
  ReplacementAction action;
  int budget = 0;
};

ProblemTranslation translate_problem(Problem p, int k);

}  // namespace lrep
