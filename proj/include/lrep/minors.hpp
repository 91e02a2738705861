// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrep/dense_graph.hpp"
#include "lrep/graph.hpp"

namespace lrep {

// Desk-scale limits for the generic minor search. Overridable per call.
struct MinorGuards {
  int max_pattern_vertices = 6;
  int max_host_vertices = 20;
  // Contraction states explored before giving up with CapacityError.
  long max_states = 5'000'000;
};

// A minor model of `pattern` in `host`, or nothing. Deterministic.
std::optional<MinorModel> find_minor_model(const OrderedGraph& host,
                                           const OrderedGraph& pattern,
                                           const MinorGuards& guards = {});
bool is_minor(const OrderedGraph& host, const OrderedGraph& pattern,
              const MinorGuards& guards = {});
bool is_minor(const DenseGraph& host, const DenseGraph& pattern,
              const MinorGuards& guards = {});

// Minor model in which each pair (h, p) of `fixed` pins pattern vertex p to
// the singleton branch set {h}; edges at pinned host vertices are never
// contracted.
std::optional<MinorModel> find_rooted_minor_model(
    const OrderedGraph& host, const OrderedGraph& pattern,
    const std::vector<std::pair<Vertex, Vertex>>& fixed, const MinorGuards& guards = {});

bool is_planar(const OrderedGraph& g);
bool is_planar(const DenseGraph& g);

// Minimum |A| with g - A planar. Host guard applies.
int apex_number(const OrderedGraph& g, const MinorGuards& guards = {});

struct ClassConstants {
  int apex = 0;         // a_F
  int max_vertices = 0; // s_F
  int max_detail = 0;   // ℓ_F
  friend bool operator==(const ClassConstants&, const ClassConstants&) = default;
};

ClassConstants class_constants(const std::vector<OrderedGraph>& graphs,
                               const MinorGuards& guards = {});

// Finite obstruction set F with its constants. Sets equal (up to isomorphism)
// to a built-in catalogue entry get a dedicated membership test.
class ObstructionSet {
 public:
  enum class Kind { kCustom, kEdgeless, kForests, kLinearForests, kPlanar };

  ObstructionSet() = default;
  static ObstructionSet custom(std::vector<OrderedGraph> graphs,
                               std::string name = "custom");

  const std::string& name() const { return name_; }
  const std::vector<OrderedGraph>& graphs() const { return graphs_; }
  const ClassConstants& constants() const { return constants_; }
  Kind kind() const { return kind_; }

 private:
  std::string name_;
  std::vector<OrderedGraph> graphs_;
  std::vector<DenseGraph> dense_;
  ClassConstants constants_;
  Kind kind_ = Kind::kCustom;

  friend bool in_exc(const DenseGraph&, const ObstructionSet&, const MinorGuards&);
};

// edgeless, forests, linear-forests, planar.
ObstructionSet builtin_class(std::string_view name);
std::vector<std::string> builtin_class_names();

// True iff no graph of F is a minor of g.
bool in_exc(const OrderedGraph& g, const ObstructionSet& f, const MinorGuards& guards = {});
bool in_exc(const DenseGraph& g, const ObstructionSet& f, const MinorGuards& guards = {});
// Same question answered by the generic model search only.
bool in_exc_generic(const OrderedGraph& g, const ObstructionSet& f,
                    const MinorGuards& guards = {});

}  // namespace lrep
