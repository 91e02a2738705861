// SPDX-License-Identifier: Apache-2.0
#include "lrep/minors.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "lrep/canonical.hpp"
#include "lrep/error.hpp"
#include "lrep/generators.hpp"

namespace lrep {
namespace {

// Injective homomorphism of pattern p into host h (a subgraph embedding).
class Monomorphism {
 public:
  Monomorphism(const DenseGraph& p, const DenseGraph& h, std::vector<int> forced,
               Mask reserved)
      : p_(p), h_(h), forced_(std::move(forced)), reserved_(reserved), map_(p.n, -1) {
    // Connected-first order: repeatedly take the vertex with the most already
    // ordered neighbours, then the highest degree.
    Mask placed = 0;
    for (int step = 0; step < p.n; ++step) {
      int best = -1;
      std::tuple<int, int, int> score{-1, -1, -1};
      for (int x = 0; x < p.n; ++x) {
        if (placed >> x & 1) continue;
        std::tuple<int, int, int> s{forced_[x] >= 0, popcount(p.adj[x] & placed),
                                    p.degree(x)};
        if (best < 0 || s > score) {
          best = x;
          score = s;
        }
      }
      order_.push_back(best);
      placed |= bit(best);
    }
  }

  std::optional<std::vector<int>> run() {
    if (extend(0, 0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(size_t depth, Mask used) {
    if (depth == order_.size()) return true;
    int x = order_[depth];
    Mask cand;
    if (forced_[x] >= 0) {
      cand = bit(forced_[x]) & ~used;
    } else {
      cand = h_.all() & ~used & ~reserved_;
    }
    for (Mask m = p_.adj[x]; m; m &= m - 1) {
      int y = lowest(m);
      if (map_[y] >= 0) cand &= h_.adj[map_[y]];
    }
    int need = p_.degree(x);
    for (; cand; cand &= cand - 1) {
      int v = lowest(cand);
      if (h_.degree(v) < need) continue;
      map_[x] = v;
      if (extend(depth + 1, used | bit(v))) return true;
      map_[x] = -1;
    }
    return false;
  }

  const DenseGraph& p_;
  const DenseGraph& h_;
  std::vector<int> forced_;
  Mask reserved_;
  std::vector<int> map_;
  std::vector<int> order_;
};

struct SearchResult {
  // Branch set per pattern vertex, as masks over the searched host.
  std::vector<Mask> sets;
};

struct StateHash {
  size_t operator()(const std::vector<Mask>& v) const noexcept {
    size_t h = 0x9e3779b97f4a7c15ULL;
    for (Mask m : v) h = (h ^ std::hash<Mask>{}(m)) * 0x100000001b3ULL;
    return h;
  }
};

// Depth-first search over contractions of `host`; at every state the pattern
// is tested as a subgraph of the contracted graph. Host positions in
// `pinned` are never merged; `forced[x]` pins pattern vertex x.
class ContractionSearch {
 public:
  ContractionSearch(const DenseGraph& host, const DenseGraph& pattern,
                    std::vector<int> forced, Mask pinned, long max_states)
      : host_(host),
        pattern_(pattern),
        forced_(std::move(forced)),
        pinned_(pinned),
        max_states_(max_states),
        pattern_edges_(pattern.num_edges()) {}

  std::optional<SearchResult> run() {
    std::vector<Mask> members(host_.n);
    for (int i = 0; i < host_.n; ++i) members[i] = bit(i);
    return visit(host_, std::move(members));
  }

 private:
  std::optional<SearchResult> visit(const DenseGraph& g, std::vector<Mask> members) {
    if (g.n < pattern_.n || g.num_edges() < pattern_edges_) return std::nullopt;
    auto key = members;
    std::sort(key.begin(), key.end());
    if (!seen_.insert(std::move(key)).second) return std::nullopt;
    if (static_cast<long>(seen_.size()) > max_states_)
      throw CapacityError("minor search exceeded the state guard");

    // Map pinned host positions to their current positions.
    std::vector<int> forced(pattern_.n, -1);
    Mask reserved = 0;
    for (int x = 0; x < pattern_.n; ++x) {
      if (forced_[x] < 0) continue;
      for (int i = 0; i < g.n; ++i)
        if (members[i] == bit(forced_[x])) forced[x] = i;
    }
    for (int i = 0; i < g.n; ++i)
      if (members[i] & pinned_) reserved |= bit(i);
    if (auto map = Monomorphism(pattern_, g, forced, reserved).run()) {
      SearchResult r;
      for (int x = 0; x < pattern_.n; ++x) r.sets.push_back(members[(*map)[x]]);
      return r;
    }
    if (g.n == pattern_.n) return std::nullopt;
    for (int i = 0; i < g.n; ++i) {
      if (members[i] & pinned_) continue;
      for (Mask m = g.adj[i] & ~((bit(i) << 1) - 1); m; m &= m - 1) {
        int j = lowest(m);
        if (members[j] & pinned_) continue;
        auto next_members = members;
        next_members[i] |= next_members[j];
        next_members.erase(next_members.begin() + j);
        if (auto r = visit(g.contracted(i, j), std::move(next_members))) return r;
      }
    }
    return std::nullopt;
  }

  const DenseGraph& host_;
  const DenseGraph& pattern_;
  std::vector<int> forced_;
  Mask pinned_;
  long max_states_;
  int pattern_edges_;
  std::unordered_set<std::vector<Mask>, StateHash> seen_;
};

int min_degree(const DenseGraph& g) {
  int d = g.n ? 64 : 0;
  for (int i = 0; i < g.n; ++i) d = std::min(d, g.degree(i));
  return d;
}

// Host simplification valid for the given pattern; see the rules below.
struct Reduced {
  DenseGraph graph;          // compacted
  std::vector<int> origin;   // compact position -> input position
  // Dissolved vertices (w, a, b) in input positions, in removal order.
  std::vector<std::array<int, 3>> dissolved;
};

Reduced reduce_host(const DenseGraph& host, const DenseGraph& pattern) {
  DenseGraph g = host;
  Mask alive = g.all();
  std::vector<std::array<int, 3>> dissolved;
  int delta = min_degree(pattern);
  bool changed = pattern.n > 0 && delta >= 2;
  while (changed) {
    changed = false;
    for (Mask m = alive; m; m &= m - 1) {
      int v = lowest(m);
      int d = g.degree(v);
      if (d <= 1) {
        // Every vertex of a model has degree >= 2, so v can be dropped.
        for (Mask nb = g.adj[v]; nb; nb &= nb - 1) g.remove_edge(v, lowest(nb));
        alive &= ~bit(v);
        changed = true;
      } else if (d == 2 && delta >= 3) {
        // A branch set never consists of v alone; route through its neighbours.
        int a = lowest(g.adj[v]);
        int b = lowest(g.adj[v] & ~bit(a));
        g.remove_edge(v, a);
        g.remove_edge(v, b);
        g.add_edge(a, b);
        alive &= ~bit(v);
        dissolved.push_back({v, a, b});
        changed = true;
      }
    }
  }
  Reduced r;
  r.graph = g.induced(alive);
  for (Mask m = alive; m; m &= m - 1) r.origin.push_back(lowest(m));
  r.dissolved = std::move(dissolved);
  return r;
}

std::optional<std::vector<Mask>> search_dense(const DenseGraph& host,
                                              const DenseGraph& pattern,
                                              const MinorGuards& guards) {
  if (pattern.n > guards.max_pattern_vertices)
    throw CapacityError("minor search: pattern has " + std::to_string(pattern.n) +
                        " vertices, guard is " +
                        std::to_string(guards.max_pattern_vertices));
  if (pattern.n == 0) return std::vector<Mask>{};
  if (pattern.n > host.n || pattern.num_edges() > host.num_edges()) return std::nullopt;

  Reduced red = reduce_host(host, pattern);
  const DenseGraph& g = red.graph;
  if (pattern.n > g.n || pattern.num_edges() > g.num_edges()) return std::nullopt;
  if (g.n > guards.max_host_vertices)
    throw CapacityError("minor search: host has " + std::to_string(g.n) +
                        " vertices after reduction, guard is " +
                        std::to_string(guards.max_host_vertices));

  std::vector<int> free_pattern(pattern.n, -1);
  std::optional<SearchResult> found;
  if (is_connected_mask(pattern, pattern.all())) {
    Mask rest = g.all();
    while (rest && !found) {
      Mask comp = reach(g, lowest(rest), rest);
      rest &= ~comp;
      if (popcount(comp) < pattern.n) continue;
      DenseGraph sub = g.induced(comp);
      found = ContractionSearch(sub, pattern, free_pattern, 0, guards.max_states).run();
      if (found) {
        std::vector<int> pos;
        for (Mask m = comp; m; m &= m - 1) pos.push_back(lowest(m));
        for (Mask& s : found->sets) {
          Mask lifted = 0;
          for (Mask m = s; m; m &= m - 1) lifted |= bit(pos[lowest(m)]);
          s = lifted;
        }
      }
    }
  } else {
    found = ContractionSearch(g, pattern, free_pattern, 0, guards.max_states).run();
  }
  if (!found) return std::nullopt;

  std::vector<Mask> sets;
  for (Mask s : found->sets) {
    Mask lifted = 0;
    for (Mask m = s; m; m &= m - 1) lifted |= bit(red.origin[lowest(m)]);
    sets.push_back(lifted);
  }
  for (auto it = red.dissolved.rbegin(); it != red.dissolved.rend(); ++it) {
    auto [w, a, b] = *it;
    Mask* owner = nullptr;
    for (Mask& s : sets)
      if (s >> a & 1) owner = &s;
    if (!owner)
      for (Mask& s : sets)
        if (s >> b & 1) owner = &s;
    if (owner) *owner |= bit(w);
  }
  return sets;
}

struct CacheKeyHash {
  size_t operator()(const std::string& s) const noexcept {
    return std::hash<std::string>{}(s);
  }
};

// Shared memo of generic searches keyed by the exact input encoding.
// Concurrent inserts of the same key store the same value.
class MinorMemo {
 public:
  std::optional<std::optional<std::vector<Mask>>> get(const std::string& key) {
    std::lock_guard lock(mu_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void put(const std::string& key, const std::optional<std::vector<Mask>>& value) {
    std::lock_guard lock(mu_);
    if (table_.size() > 200'000) table_.clear();
    table_.emplace(key, value);
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::string, std::optional<std::vector<Mask>>, CacheKeyHash> table_;
};

MinorMemo& memo() {
  static MinorMemo instance;
  return instance;
}

std::string encode(const DenseGraph& a, const DenseGraph& b) {
  std::string s;
  auto put = [&](const DenseGraph& g) {
    s.push_back(static_cast<char>(g.n));
    for (Mask m : g.adj) s.append(reinterpret_cast<const char*>(&m), sizeof m);
  };
  put(a);
  put(b);
  return s;
}

std::optional<std::vector<Mask>> search_memo(const DenseGraph& host,
                                             const DenseGraph& pattern,
                                             const MinorGuards& guards) {
  std::string key = encode(host, pattern);
  if (auto hit = memo().get(key)) return *hit;
  auto r = search_dense(host, pattern, guards);
  memo().put(key, r);
  return r;
}

DenseGraph dense_or_throw(const OrderedGraph& g, const MinorGuards& guards) {
  if (g.num_vertices() > 64)
    throw CapacityError("minor search: host has " + std::to_string(g.num_vertices()) +
                        " vertices, guard is " + std::to_string(guards.max_host_vertices));
  return DenseGraph::from(g);
}

MinorModel to_model(const OrderedGraph& host, const OrderedGraph& pattern,
                    const std::vector<Mask>& sets) {
  MinorModel model;
  for (int x = 0; x < pattern.num_vertices(); ++x) {
    auto& bs = model.branch_sets[pattern.vertex_at(x)];
    for (Mask m = sets[x]; m; m &= m - 1) bs.push_back(host.vertex_at(lowest(m)));
  }
  return model;
}

}  // namespace

std::optional<MinorModel> find_minor_model(const OrderedGraph& host,
                                           const OrderedGraph& pattern,
                                           const MinorGuards& guards) {
  if (pattern.num_vertices() > guards.max_pattern_vertices)
    throw CapacityError("minor search: pattern guard exceeded");
  if (pattern.num_vertices() > host.num_vertices()) return std::nullopt;
  auto sets = search_memo(dense_or_throw(host, guards), DenseGraph::from(pattern), guards);
  if (!sets) return std::nullopt;
  return to_model(host, pattern, *sets);
}

bool is_minor(const OrderedGraph& host, const OrderedGraph& pattern,
              const MinorGuards& guards) {
  return find_minor_model(host, pattern, guards).has_value();
}

bool is_minor(const DenseGraph& host, const DenseGraph& pattern,
              const MinorGuards& guards) {
  return search_memo(host, pattern, guards).has_value();
}

std::optional<MinorModel> find_rooted_minor_model(
    const OrderedGraph& host, const OrderedGraph& pattern,
    const std::vector<std::pair<Vertex, Vertex>>& fixed, const MinorGuards& guards) {
  if (pattern.num_vertices() > guards.max_pattern_vertices)
    throw CapacityError("rooted minor search: pattern guard exceeded");
  if (host.num_vertices() > guards.max_host_vertices)
    throw CapacityError("rooted minor search: host guard exceeded");
  DenseGraph h = DenseGraph::from(host);
  DenseGraph p = DenseGraph::from(pattern);
  std::vector<int> forced(p.n, -1);
  Mask pinned = 0;
  for (auto [hv, pv] : fixed) {
    int hi = host.index_of(hv);
    int pi = pattern.index_of(pv);
    if (hi < 0 || pi < 0) return std::nullopt;
    forced[pi] = hi;
    pinned |= bit(hi);
  }
  if (p.n > h.n) return std::nullopt;
  auto found = ContractionSearch(h, p, forced, pinned, guards.max_states).run();
  if (!found) return std::nullopt;
  return to_model(host, pattern, found->sets);
}

int apex_number(const OrderedGraph& g, const MinorGuards& guards) {
  int n = g.num_vertices();
  if (n > guards.max_host_vertices)
    throw CapacityError("apex_number: host guard exceeded");
  DenseGraph d = DenseGraph::from(g);
  for (int a = 0; a <= n; ++a) {
    // Subsets of size a in lexicographic order of their sorted positions.
    std::vector<int> pick(a);
    for (int i = 0; i < a; ++i) pick[i] = i;
    for (;;) {
      Mask removed = 0;
      for (int i : pick) removed |= bit(i);
      if (is_planar(d.induced(d.all() & ~removed))) return a;
      int i = a - 1;
      while (i >= 0 && pick[i] == n - a + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < a; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return n;
}

ClassConstants class_constants(const std::vector<OrderedGraph>& graphs,
                               const MinorGuards& guards) {
  ClassConstants c;
  bool first = true;
  for (const auto& f : graphs) {
    int a = apex_number(f, guards);
    c.apex = first ? a : std::min(c.apex, a);
    c.max_vertices = std::max(c.max_vertices, f.num_vertices());
    c.max_detail = std::max(c.max_detail, detail(f));
    first = false;
  }
  return c;
}

namespace {

std::vector<OrderedGraph> builtin_graphs(std::string_view name) {
  if (name == "edgeless") return {complete_graph(2)};
  if (name == "forests") return {complete_graph(3)};
  if (name == "linear-forests") return {complete_graph(3), star_graph(3)};
  if (name == "planar") return {complete_graph(5), complete_bipartite(3, 3)};
  throw InputError("unknown target class '" + std::string(name) + "'");
}

std::vector<CanonicalKey> sorted_keys(const std::vector<OrderedGraph>& gs) {
  std::vector<CanonicalKey> keys;
  for (const auto& g : gs) keys.push_back(canonical_form(g));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

}  // namespace

std::vector<std::string> builtin_class_names() {
  return {"edgeless", "forests", "linear-forests", "planar"};
}

ObstructionSet ObstructionSet::custom(std::vector<OrderedGraph> graphs, std::string name) {
  if (graphs.empty()) throw InputError("obstruction set must not be empty");
  ObstructionSet f;
  f.name_ = std::move(name);
  f.graphs_ = std::move(graphs);
  for (const auto& g : f.graphs_) {
    if (g.num_vertices() > 64) throw CapacityError("obstruction too large");
    f.dense_.push_back(DenseGraph::from(g));
  }
  f.constants_ = class_constants(f.graphs_);
  auto keys = sorted_keys(f.graphs_);
  const std::pair<const char*, Kind> known[] = {{"edgeless", Kind::kEdgeless},
                                                {"forests", Kind::kForests},
                                                {"linear-forests", Kind::kLinearForests},
                                                {"planar", Kind::kPlanar}};
  for (auto [n, k] : known)
    if (keys == sorted_keys(builtin_graphs(n))) f.kind_ = k;
  return f;
}

ObstructionSet builtin_class(std::string_view name) {
  return ObstructionSet::custom(builtin_graphs(name), std::string(name));
}

bool in_exc(const DenseGraph& g, const ObstructionSet& f, const MinorGuards& guards) {
  using Kind = ObstructionSet::Kind;
  switch (f.kind_) {
    case Kind::kEdgeless:
      return g.num_edges() == 0;
    case Kind::kForests:
      return g.num_edges() == g.n - count_components(g, g.all());
    case Kind::kLinearForests:
      for (int i = 0; i < g.n; ++i)
        if (g.degree(i) > 2) return false;
      return g.num_edges() == g.n - count_components(g, g.all());
    case Kind::kPlanar:
      return is_planar(g);
    case Kind::kCustom:
      break;
  }
  for (const auto& obstruction : f.dense_)
    if (is_minor(g, obstruction, guards)) return false;
  return true;
}

bool in_exc(const OrderedGraph& g, const ObstructionSet& f, const MinorGuards& guards) {
  if (f.kind() == ObstructionSet::Kind::kPlanar) return is_planar(g);
  return in_exc(dense_or_throw(g, guards), f, guards);
}

bool in_exc_generic(const OrderedGraph& g, const ObstructionSet& f,
                    const MinorGuards& guards) {
  for (const auto& obstruction : f.graphs())
    if (find_minor_model(g, obstruction, guards)) return false;
  return true;
}

}  // namespace lrep
