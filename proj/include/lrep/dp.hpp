// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrep/boundaried.hpp"
#include "lrep/oracle.hpp"
#include "lrep/parallel.hpp"
#include "lrep/treewidth.hpp"

namespace lrep {

// kExactCarry keeps the whole modified graph in every entry; kRepresentative
// replaces it by the stored representative of its folio class.
enum class DpMode { kExactCarry, kRepresentative };
const char* to_string(DpMode mode);

struct DpOptions {
  DpMode mode = DpMode::kExactCarry;
  Execution exec = Execution::kSerial;
  int max_budget = 6;
  int max_width = 9;
  // Runs the entry validator on every produced entry.
  bool validate_entries = false;
  // When false, patterns may grow past k and the budget is only checked at
  // the root. Debug aid for tiny instances.
  bool budget_pruning = true;
  // Shared across runs when set; otherwise each run uses a fresh store.
  std::shared_ptr<RepresentativeStore> store;
  // Reused when set; must be a decomposition of the instance graph.
  const NiceTreeDecomposition* decomposition = nullptr;
};

// Pattern vertices that are forgotten and not annotated lose their identity.
inline constexpr Vertex kAnonymous = std::numeric_limits<Vertex>::max();

// How an entry was produced. `first`/`second` index the child signatures.
struct DpTrace {
  // 'L' leaf, 'a' unmodified, 'b' deleted, 'c' identified, 'd' new modified
  // vertex, 'f' forget, 'j' join.
  char branch = 'L';
  int first = -1;
  int second = -1;
  Vertex v = 0;
  Vertex partner = 0;  // branch 'c': a vertex already mapped to the label
  std::vector<std::pair<Vertex, Vertex>> merged;  // join: identified labels
};

// One row of a signature. Pattern positions index H1' = G_t[S']; labels
// 0..labels-1 are the vertices of H2'. In `r`, label j has colour j + 1 and
// an unmodified bag vertex v has colour label_limit + rank(v); internal
// vertices have colour 0.
struct SignatureEntry {
  std::vector<Mask> pattern;
  std::vector<Vertex> pattern_id;  // kAnonymous or the vertex of G
  std::vector<int> phi;            // label, or -1 when deleted
  int labels = 0;
  ColoredGraph r;
  std::vector<Vertex> sb;       // S' ∩ bag, sorted
  std::vector<Vertex> witness;  // per label, a vertex of G mapped to it
  DpTrace trace;
  std::string key;
};

using Signature = std::vector<SignatureEntry>;

struct DpStats {
  std::vector<std::size_t> signature_sizes;  // per nice node
  std::size_t total_entries = 0;
  std::size_t max_signature = 0;
  int width = -1;
  int nodes = 0;
  std::size_t store_size = 0;
};

struct DpResult {
  std::optional<Solution> solution;
  DpStats stats;
};

// Vertex of rank r gets label k + r; labels 1..k belong to modified vertices.
std::map<Vertex, int> label_scheme(const OrderedGraph& g, int k);

// The node transitions, exposed for testing. Entries of the returned
// signatures are deduplicated and in a deterministic order.
class DpEngine {
 public:
  DpEngine(const Instance& inst, const DpOptions& options);

  Signature process_leaf() const;
  Signature process_introduce(const NiceNode& node, const Signature& child) const;
  Signature process_forget(const NiceNode& node, const Signature& child) const;
  Signature process_join(const NiceNode& node, const Signature& left,
                         const Signature& right) const;
  // Index of the first entry whose (H2, φ) is a member of ℒ(H1).
  std::optional<int> root_accept(const Signature& root) const;
  // Rebuilds (S, H2, φ) from the traces below `entry` of node `node`.
  Solution backtrack(const NiceTreeDecomposition& td, const std::vector<Signature>& sigs,
                     int node, int entry) const;
  // Checks the entry invariants against the bag of its node.
  bool validate_entry(const SignatureEntry& e, const std::vector<Vertex>& bag,
                      std::string* reason = nullptr) const;

  int label_limit() const { return limit_; }
  int bag_color(Vertex v) const;
  const RepresentativeStore& store() const { return *store_; }

 private:
  struct Candidate;
  void finish(SignatureEntry& e, Candidate& c) const;
  Signature merge(std::vector<std::vector<Candidate>>& per_entry) const;
  bool admits(const SignatureEntry& e) const;
  PatternTransformation transformation_of(const SignatureEntry& e,
                                          std::vector<Vertex>& ids) const;

  const Instance& inst_;
  DpOptions options_;
  int limit_ = 0;
  int h_ = 0;
  std::shared_ptr<RepresentativeStore> store_;
  std::map<Vertex, int> annotated_;  // annotated vertex -> -1 if deleted, else 0
};

// Solves the (annotated) instance over options.decomposition, or over
// nice_decomposition(inst.g). Returns a solution whenever one exists.
DpResult run_dp(const Instance& inst, const DpOptions& options = {});

}  // namespace lrep
