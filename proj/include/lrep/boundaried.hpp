// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "lrep/canonical.hpp"
#include "lrep/dense_graph.hpp"
#include "lrep/graph.hpp"

namespace lrep {

// (G, B, ρ): `labels` maps each boundary vertex to a distinct positive label.
struct BoundariedGraph {
  OrderedGraph graph;
  std::map<Vertex, int> labels;

  std::vector<Vertex> boundary() const;
  std::vector<int> label_set() const;  // sorted
  // Boundary vertex carrying `label`, or nullopt.
  std::optional<Vertex> vertex_of(int label) const;
  friend bool operator==(const BoundariedGraph&, const BoundariedGraph&) = default;
};

// Validates B ⊆ V(G) and injectivity of ρ.
BoundariedGraph make_boundaried(OrderedGraph g, std::map<Vertex, int> labels);

// Positional form used in hot loops: colour 0 marks internal vertices, any
// other colour is the boundary label of that vertex.
struct ColoredGraph {
  DenseGraph g;
  std::vector<int> color;
  int num_boundary() const;
  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;
};

ColoredGraph to_colored(const BoundariedGraph& b);
BoundariedGraph to_boundaried(const ColoredGraph& c);

// Label-preserving canonical key.
CanonicalKey boundaried_key(const BoundariedGraph& b);
CanonicalKey colored_key(const ColoredGraph& c);

// Same label sets and ρ2⁻¹∘ρ1 an isomorphism of the boundary graphs.
bool compatible(const BoundariedGraph& a, const BoundariedGraph& b);
// a ⊕ b. Vertices of a keep their identifiers; internal vertices of b are
// renamed after max identifier of a, in order.
OrderedGraph glue(const BoundariedGraph& a, const BoundariedGraph& b);
// Gluing without the compatibility requirement: equal labels are identified,
// edges are united, and the result is boundaried by the union of labels.
BoundariedGraph glue_union(const BoundariedGraph& a, const BoundariedGraph& b);
ColoredGraph glue_union(const ColoredGraph& a, const ColoredGraph& b);

inline constexpr long kFolioStateGuard = 2'000'000;

// Whether `small` arises from `big` by deleting internal vertices, deleting
// edges and contracting edges with at most one boundary endpoint (the
// boundary endpoint prevails), up to label-preserving isomorphism.
bool boundaried_minor(const BoundariedGraph& big, const BoundariedGraph& small);

// Canonical keys of every boundaried minor with at most `max_vertices`
// vertices. Sorted.
std::vector<CanonicalKey> minor_folio(const BoundariedGraph& g, int max_vertices);

// Compact key of the folio at vertex budget h + |B|; equal keys imply equal
// minor_folio. A graph within budget is keyed by itself; a larger graph by
// its boundary graph plus the maximal members of its folio, which all have
// exactly budget vertices.
struct FolioKey {
  int budget = 0;
  bool principal = false;
  std::vector<CanonicalKey> members;  // sorted
  std::string digest() const;
  friend bool operator==(const FolioKey&, const FolioKey&) = default;
};

FolioKey folio_key(const ColoredGraph& g, int h);
FolioKey folio_key(const BoundariedGraph& g, int h);

// Boundaried topological minors (edge deletions, deletion and dissolution of
// internal vertices) of detail at most ell. Sorted canonical keys.
std::vector<CanonicalKey> topo_folio(const BoundariedGraph& g, int ell);

// A pair (F, H) with H a minor of exactly one of F ⊕ G1 and F ⊕ G2. F ranges
// over boundaried graphs compatible with G1 with at most `f_vertices`
// vertices, H over graphs of detail at most h.
struct EquivalenceWitness {
  BoundariedGraph f;
  OrderedGraph h;
};
std::optional<EquivalenceWitness> equivalence_witness(const BoundariedGraph& g1,
                                                      const BoundariedGraph& g2, int h,
                                                      int f_vertices);

// The test partners used by equivalence_witness for boundaries like g's.
std::vector<BoundariedGraph> gluing_partners(const BoundariedGraph& g, int f_vertices);
std::vector<OrderedGraph> graphs_of_detail_at_most(int h);
// One bit per (partner, H) pair: whether H is a minor of partner ⊕ g. Two
// graphs with equal partners have a witness iff their profiles differ.
std::vector<bool> equivalence_profile(const BoundariedGraph& g,
                                      const std::vector<BoundariedGraph>& partners,
                                      const std::vector<OrderedGraph>& hs);

// Rep(·) over the folio classes seen so far. Thread-safe; the stored member
// of a class is the smallest inserted one (vertex count, then canonical key),
// so concurrent inserts converge regardless of order.
class RepresentativeStore {
 public:
  explicit RepresentativeStore(int h);

  int h() const { return h_; }
  std::size_t size() const;

  // The current representative of g's class, inserting g if it is smaller.
  BoundariedGraph lookup_or_insert(const BoundariedGraph& g);
  ColoredGraph lookup_or_insert(const ColoredGraph& g, const FolioKey& key);

  // Line format, version 1:
  //   lrep-store 1 <h> <entries>
  //   <digest> <n> <colour>... ; <i>-<j>...
  void save(std::ostream& out) const;
  // Merges a saved store; throws InputError on a malformed file or when the
  // saved h differs.
  void load(std::istream& in);

 private:
  struct Entry {
    ColoredGraph graph;
    CanonicalKey key;
  };
  int h_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Entry> entries_;
};

}  // namespace lrep
