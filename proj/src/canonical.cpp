// SPDX-License-Identifier: Apache-2.0
#include "lrep/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "lrep/error.hpp"

namespace lrep {
namespace {

// cell[v] is the first position of v's cell in the ordered partition.
void refine(const DenseGraph& g, std::vector<int>& cell) {
  const int n = g.n;
  std::vector<int> starts, index(n), order(n), next(n), flat;
  std::vector<Mask> members;
  for (;;) {
    starts.assign(cell.begin(), cell.end());
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    const int c = static_cast<int>(starts.size());
    if (c == n) return;
    for (int i = 0; i < c; ++i) index[starts[i]] = i;
    members.assign(c, 0);
    for (int v = 0; v < n; ++v) members[index[cell[v]]] |= bit(v);
    const int w = c + 1;
    flat.assign(static_cast<size_t>(n) * w, 0);
    for (int v = 0; v < n; ++v) {
      int* row = &flat[static_cast<size_t>(v) * w];
      row[0] = cell[v];
      for (int i = 0; i < c; ++i) row[i + 1] = popcount(g.adj[v] & members[i]);
    }
    std::iota(order.begin(), order.end(), 0);
    auto row = [&](int v) { return &flat[static_cast<size_t>(v) * w]; };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::lexicographical_compare(row(a), row(a) + w, row(b), row(b) + w);
    });
    int distinct = 0;
    for (int p = 0; p < n; ++p) {
      int v = order[p];
      if (p == 0 || !std::equal(row(v), row(v) + w, row(order[p - 1]))) {
        next[v] = p;
        ++distinct;
      } else {
        next[v] = next[order[p - 1]];
      }
    }
    if (distinct == c) return;
    cell = next;
  }
}

struct Searcher {
  const DenseGraph& g;
  std::string best;
  std::vector<int> best_order;
  bool have = false;

  void leaf(const std::vector<int>& cell) {
    const int n = g.n;
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[cell[v]] = v;
    std::string bits((static_cast<size_t>(n) * (n - 1) / 2 + 7) / 8, '\0');
    size_t k = 0;
    for (int p = 0; p < n; ++p) {
      Mask row = g.adj[order[p]];
      for (int q = p + 1; q < n; ++q, ++k)
        if (row >> order[q] & 1) bits[k >> 3] |= static_cast<char>(1 << (7 - (k & 7)));
    }
    if (!have || bits < best) {
      best = std::move(bits);
      best_order = std::move(order);
      have = true;
    }
  }

  bool twins(int u, int v) const {
    return (g.adj[u] & ~bit(v)) == (g.adj[v] & ~bit(u));
  }

  void search(std::vector<int> cell) {
    refine(g, cell);
    const int n = g.n;
    std::vector<int> size(n, 0);
    for (int v = 0; v < n; ++v) ++size[cell[v]];
    int target = -1;
    for (int s = 0; s < n; ++s)
      if (size[s] > 1 && (target < 0 || size[s] < size[target])) target = s;
    if (target < 0) {
      leaf(cell);
      return;
    }
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (cell[v] == target) members.push_back(v);
    std::vector<int> tried;
    for (int v : members) {
      bool redundant = false;
      for (int u : tried)
        if (twins(u, v)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      tried.push_back(v);
      std::vector<int> child = cell;
      for (int u : members)
        if (u != v) child[u] = target + 1;
      search(std::move(child));
    }
  }
};

std::string header(int n, const std::vector<int>& sorted_colors) {
  std::string out;
  out.push_back(static_cast<char>(n));
  for (int c : sorted_colors) {
    auto u = static_cast<std::uint32_t>(c);
    for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>(u >> s & 0xff));
  }
  return out;
}

std::vector<int> initial_cells(std::span<const int> colors, std::vector<int>* sorted) {
  const int n = static_cast<int>(colors.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return colors[a] < colors[b]; });
  std::vector<int> cell(n);
  for (int p = 0; p < n; ++p) {
    int v = order[p];
    cell[v] = (p > 0 && colors[order[p - 1]] == colors[v]) ? cell[order[p - 1]] : p;
  }
  if (sorted) {
    sorted->clear();
    for (int v : order) sorted->push_back(colors[v]);
  }
  return cell;
}

void check_input(const DenseGraph& g, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != g.n)
    throw InputError("canonical labelling: one colour per vertex required");
  if (g.n > kCanonicalVertexGuard)
    throw CapacityError("canonical labelling guard exceeded (" + std::to_string(g.n) +
                        " > " + std::to_string(kCanonicalVertexGuard) + " vertices)");
}

}  // namespace

CanonicalLabeling canonical_labeling(const DenseGraph& g, std::span<const int> colors) {
  check_input(g, colors);
  std::vector<int> sorted;
  auto cell = initial_cells(colors, &sorted);
  Searcher s{g, {}, {}, false};
  s.search(std::move(cell));
  return {header(g.n, sorted) + s.best, std::move(s.best_order)};
}

CanonicalKey canonical_key(const DenseGraph& g, std::span<const int> colors) {
  return canonical_labeling(g, colors).key;
}

CanonicalKey canonical_form(const OrderedGraph& g) {
  std::vector<int> colors(g.num_vertices(), 0);
  return canonical_key(DenseGraph::from(g), colors);
}

CanonicalKey canonical_key_bruteforce(const DenseGraph& g, std::span<const int> colors) {
  check_input(g, colors);
  if (g.n > 9) throw CapacityError("brute-force canonical form supports n <= 9");
  std::vector<int> sorted;
  initial_cells(colors, &sorted);
  const int n = g.n;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::string best;
  bool have = false;
  do {
    bool ok = true;
    for (int p = 0; p < n && ok; ++p) ok = colors[order[p]] == sorted[p];
    if (!ok) continue;
    std::string bits((static_cast<size_t>(n) * (n - 1) / 2 + 7) / 8, '\0');
    size_t k = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q, ++k)
        if (g.has_edge(order[p], order[q]))
          bits[k >> 3] |= static_cast<char>(1 << (7 - (k & 7)));
    if (!have || bits < best) {
      best = bits;
      have = true;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return header(n, sorted) + best;
}

std::string digest_hex(const std::string& bytes) {
  // Two FNV-1a passes with different offsets; stable across platforms.
  auto fnv = [&](std::uint64_t h) {
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  };
  std::uint64_t a = fnv(0xcbf29ce484222325ULL);
  std::uint64_t b = fnv(0x84222325cbf29ce4ULL ^ bytes.size());
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (std::uint64_t w : {a, b})
    for (int s = 60; s >= 0; s -= 4) out.push_back(hex[w >> s & 0xf]);
  return out;
}

}  // namespace lrep
