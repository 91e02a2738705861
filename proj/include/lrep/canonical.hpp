// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "lrep/dense_graph.hpp"
#include "lrep/graph.hpp"

namespace lrep {

// Byte string; equal keys iff the coloured graphs are isomorphic.
using CanonicalKey = std::string;

// Largest vertex count accepted by the canonical labeller.
inline constexpr int kCanonicalVertexGuard = 64;

struct CanonicalLabeling {
  CanonicalKey key;
  // order[p] is the input position placed at canonical position p.
  std::vector<int> order;
};

// Colour-preserving canonical labelling by individualisation-refinement.
// `colors` has one entry per vertex; vertices only map onto vertices of the
// same colour, and colour values appear in the key.
CanonicalLabeling canonical_labeling(const DenseGraph& g, std::span<const int> colors);
CanonicalKey canonical_key(const DenseGraph& g, std::span<const int> colors);

CanonicalKey canonical_form(const OrderedGraph& g);

// Reference implementation: minimum encoding over all colour-preserving
// permutations. Exponential; used to cross-check the fast path for n <= 8.
CanonicalKey canonical_key_bruteforce(const DenseGraph& g, std::span<const int> colors);

// 128-bit digest of a key, as 32 hex characters.
std::string digest_hex(const std::string& bytes);

}  // namespace lrep
