// SPDX-License-Identifier: Apache-2.0
#include "lrep/replacement.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "lrep/error.hpp"

namespace lrep {

Vertex PatternTransformation::image(Vertex v) const {
  auto it = std::lower_bound(phi.begin(), phi.end(), std::pair<Vertex, Vertex>{v, kDeleted});
  if (it == phi.end() || it->first != v)
    throw InputError("vertex " + std::to_string(v) + " is not in the pattern");
  return it->second;
}

std::vector<Vertex> PatternTransformation::domain() const {
  std::vector<Vertex> out;
  for (auto [v, img] : phi) out.push_back(v);
  return out;
}

bool PatternTransformation::is_identity() const {
  if (h2.num_vertices() != static_cast<int>(phi.size())) return false;
  for (auto [v, img] : phi)
    if (img != v) return false;
  return true;
}

std::string PatternTransformation::to_string() const {
  std::ostringstream os;
  os << "H2=" << h2.to_string() << " phi={";
  bool first = true;
  for (auto [v, img] : phi) {
    os << (first ? "" : ",") << v << "->";
    if (img == kDeleted) {
      os << "-";
    } else {
      os << img;
    }
    first = false;
  }
  os << "}";
  return os.str();
}

bool transformation_less(const PatternTransformation& a, const PatternTransformation& b) {
  if (a.phi != b.phi) return a.phi < b.phi;
  return a.h2.edges() < b.h2.edges();
}

PatternTransformation make_transformation(const OrderedGraph& h1, const OrderedGraph& h2,
                                          std::span<const std::pair<Vertex, Vertex>> phi) {
  std::map<Vertex, Vertex> map;
  for (auto [v, img] : phi) {
    if (!h1.has_vertex(v))
      throw InputError("phi is defined on " + std::to_string(v) + ", not a pattern vertex");
    if (img != kDeleted && !h2.has_vertex(img))
      throw InputError("phi maps " + std::to_string(v) + " outside V(H2)");
    if (!map.emplace(v, img).second)
      throw InputError("phi defined twice on " + std::to_string(v));
  }
  if (map.size() != static_cast<size_t>(h1.num_vertices()))
    throw InputError("phi must be defined on every pattern vertex");
  if (h2.num_vertices() > h1.num_vertices()) throw InputError("|V(H2)| > |V(H1)|");
  std::map<Vertex, Vertex> rename;  // h2 vertex -> smallest preimage
  for (auto [v, img] : map)
    if (img != kDeleted && !rename.count(img)) rename[img] = v;
  if (rename.size() != static_cast<size_t>(h2.num_vertices()))
    throw InputError("some vertex of H2 has an empty preimage");
  PatternTransformation t;
  t.h2 = relabel(h2, rename);
  for (auto [v, img] : map) t.phi.emplace_back(v, img == kDeleted ? kDeleted : rename[img]);
  return t;
}

bool is_valid_transformation(const OrderedGraph& h1, const PatternTransformation& t,
                             std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (t.phi.size() != static_cast<size_t>(h1.num_vertices()))
    return fail("domain of phi differs from V(H1)");
  std::map<Vertex, Vertex> smallest;
  for (size_t i = 0; i < t.phi.size(); ++i) {
    auto [v, img] = t.phi[i];
    if (i > 0 && t.phi[i - 1].first >= v) return fail("phi not sorted");
    if (!h1.has_vertex(v)) return fail("phi defined outside V(H1)");
    if (img == kDeleted) continue;
    if (!t.h2.has_vertex(img)) return fail("phi maps outside V(H2)");
    if (!smallest.count(img)) smallest[img] = v;
  }
  if (smallest.size() != static_cast<size_t>(t.h2.num_vertices()))
    return fail("some H2 vertex has empty preimage");
  for (auto [y, v] : smallest)
    if (y != v) return fail("H2 vertex not named after its smallest preimage");
  return true;
}

PatternTransformation identity_transformation(const OrderedGraph& h1) {
  PatternTransformation t;
  t.h2 = h1;
  for (Vertex v : h1.vertices()) t.phi.emplace_back(v, v);
  return t;
}

PatternTransformation deletion_transformation(const OrderedGraph& h1) {
  PatternTransformation t;
  for (Vertex v : h1.vertices()) t.phi.emplace_back(v, kDeleted);
  return t;
}

PatternTransformation transformation_from_blocks(
    const OrderedGraph& h1, const std::vector<std::vector<Vertex>>& blocks,
    std::span<const std::pair<int, int>> h2_edges) {
  std::map<Vertex, Vertex> img;
  for (Vertex v : h1.vertices()) img[v] = kDeleted;
  std::vector<Vertex> names;
  for (const auto& b : blocks) {
    if (b.empty()) throw InputError("empty block");
    Vertex name = *std::min_element(b.begin(), b.end());
    for (Vertex v : b) {
      auto it = img.find(v);
      if (it == img.end()) throw InputError("block vertex outside the pattern");
      if (it->second != kDeleted) throw InputError("blocks overlap");
      it->second = name;
    }
    names.push_back(name);
  }
  std::vector<Edge> es;
  for (auto [a, b] : h2_edges) es.emplace_back(names.at(a), names.at(b));
  PatternTransformation t;
  t.h2 = OrderedGraph(names, es);
  for (auto [v, y] : img) t.phi.emplace_back(v, y);
  return t;
}

PatternTransformation quotient_transformation(const OrderedGraph& h1,
                                              const std::vector<std::vector<Vertex>>& blocks) {
  std::map<Vertex, int> block_of;
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
    for (Vertex v : blocks[i]) block_of[v] = i;
  std::set<std::pair<int, int>> es;
  for (auto [u, v] : h1.edges()) {
    auto a = block_of.find(u);
    auto b = block_of.find(v);
    if (a == block_of.end() || b == block_of.end() || a->second == b->second) continue;
    es.insert({std::min(a->second, b->second), std::max(a->second, b->second)});
  }
  std::vector<std::pair<int, int>> list(es.begin(), es.end());
  return transformation_from_blocks(h1, blocks, list);
}

std::vector<Vertex> phi_plus(const PatternTransformation& t, std::span<const Vertex> s) {
  std::set<Vertex> out;
  for (Vertex v : s) {
    Vertex y = t.image(v);
    if (y != kDeleted) out.insert(y);
  }
  return {out.begin(), out.end()};
}

PatternTransformation restrict(const PatternTransformation& t, std::span<const Vertex> x) {
  if (x.empty()) throw InputError("restriction to an empty set");
  std::set<Vertex> xs(x.begin(), x.end());
  std::map<Vertex, Vertex> rename;
  PatternTransformation r;
  for (Vertex v : xs) {
    Vertex y = t.image(v);
    if (y != kDeleted && !rename.count(y)) rename[y] = v;
  }
  std::vector<Vertex> kept;
  for (auto [y, v] : rename) kept.push_back(y);
  r.h2 = relabel(induced_subgraph(t.h2, kept), rename);
  for (Vertex v : xs) {
    Vertex y = t.image(v);
    r.phi.emplace_back(v, y == kDeleted ? kDeleted : rename[y]);
  }
  return r;
}

OrderedGraph apply_modification(const OrderedGraph& g, std::span<const Vertex> s,
                                const PatternTransformation& t) {
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (t.domain() != sorted) throw InputError("transformation pattern does not match G[S]");
  std::string why;
  if (!is_valid_transformation(induced_subgraph(g, sorted), t, &why))
    throw InputError("invalid transformation: " + why);
  std::vector<bool> in_s(g.num_vertices(), false);
  for (Vertex v : sorted) in_s[g.index_of(v)] = true;
  std::vector<Vertex> vs;
  for (int i = 0; i < g.num_vertices(); ++i)
    if (!in_s[i]) vs.push_back(g.vertex_at(i));
  for (Vertex y : t.h2.vertices()) vs.push_back(y);
  std::vector<Edge> es = t.h2.edges();
  for (auto [u, v] : g.edges()) {
    bool us = in_s[g.index_of(u)];
    bool vsel = in_s[g.index_of(v)];
    if (!us && !vsel) {
      es.emplace_back(u, v);
    } else if (us != vsel) {
      Vertex inside = us ? u : v;
      Vertex outside = us ? v : u;
      Vertex y = t.image(inside);
      if (y != kDeleted) es.emplace_back(outside, y);
    }
  }
  return OrderedGraph::collapsing(std::move(vs), es);
}

namespace {

// Calls fn(assignment, blocks) for every map of the n pattern positions to
// {deleted} ∪ blocks, blocks numbered in order of first use.
template <class Fn>
void for_each_block_assignment(int n, bool allow_delete, Fn&& fn) {
  std::vector<int> a(n, -1);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      fn(a, blocks);
      return;
    }
    if (allow_delete) {
      a[i] = -1;
      self(self, i + 1, blocks);
    }
    for (int b = 0; b <= blocks; ++b) {
      a[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
}

std::vector<std::vector<Vertex>> blocks_from(const OrderedGraph& h1, const std::vector<int>& a,
                                             int blocks) {
  std::vector<std::vector<Vertex>> out(blocks);
  for (int i = 0; i < h1.num_vertices(); ++i)
    if (a[i] >= 0) out[a[i]].push_back(h1.vertex_at(i));
  return out;
}

void sort_unique(std::vector<PatternTransformation>& ts) {
  std::sort(ts.begin(), ts.end(), transformation_less);
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

// Subsets of `edges` with at most `limit` elements.
template <class Fn>
void for_each_edge_subset(const std::vector<Edge>& edges, int limit, Fn&& fn) {
  std::vector<Edge> chosen;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == edges.size()) {
      fn(chosen);
      return;
    }
    self(self, i + 1);
    if (static_cast<int>(chosen.size()) < limit) {
      chosen.push_back(edges[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

// Components of (V(h1), f) as blocks.
std::vector<std::vector<Vertex>> contraction_blocks(const OrderedGraph& h1,
                                                    const std::vector<Edge>& f) {
  OrderedGraph sub(h1.vertices(), f);
  return connected_components(sub);
}

struct Shape {
  std::vector<Vertex> deleted;
  std::map<Vertex, std::vector<Vertex>> blocks;  // h2 vertex -> preimage
};

Shape shape_of(const PatternTransformation& t) {
  Shape s;
  for (auto [v, y] : t.phi) {
    if (y == kDeleted) {
      s.deleted.push_back(v);
    } else {
      s.blocks[y].push_back(v);
    }
  }
  return s;
}

std::vector<std::vector<Vertex>> block_list(const Shape& s) {
  std::vector<std::vector<Vertex>> out;
  for (auto& [y, b] : s.blocks) out.push_back(b);
  return out;
}

bool same_graph(const OrderedGraph& a, const OrderedGraph& b) { return a == b; }

// H2 equals the quotient of h1 by the blocks of t.
bool is_exact_quotient(const OrderedGraph& h1, const PatternTransformation& t) {
  Shape s = shape_of(t);
  return same_graph(t.h2, quotient_transformation(h1, block_list(s)).h2);
}

// Every h1 edge between different blocks is an H2 edge.
bool contains_quotient_edges(const OrderedGraph& h1, const PatternTransformation& t) {
  for (auto [u, v] : h1.edges()) {
    Vertex a = t.image(u);
    Vertex b = t.image(v);
    if (a == kDeleted || b == kDeleted || a == b) continue;
    if (!t.h2.has_edge(a, b)) return false;
  }
  return true;
}

// Identity map; returns the removed edges if E(H2) ⊆ E(H1).
std::optional<std::vector<Edge>> removed_edges(const OrderedGraph& h1,
                                               const PatternTransformation& t) {
  if (!t.is_identity()) return std::nullopt;
  std::vector<Edge> removed;
  for (auto e : t.h2.edges())
    if (!h1.has_edge(e.first, e.second)) return std::nullopt;
  for (auto e : h1.edges())
    if (!t.h2.has_edge(e.first, e.second)) removed.push_back(e);
  return removed;
}

bool is_matching(const std::vector<Edge>& es) {
  std::set<Vertex> seen;
  for (auto [u, v] : es)
    if (!seen.insert(u).second || !seen.insert(v).second) return false;
  return true;
}

bool is_induced_matching(const OrderedGraph& g, const std::vector<Edge>& es) {
  if (!is_matching(es)) return false;
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j)
      for (Vertex a : {es[i].first, es[i].second})
        for (Vertex b : {es[j].first, es[j].second})
          if (g.has_edge(a, b)) return false;
  return true;
}

bool is_star(const std::vector<Edge>& es) {
  if (es.size() <= 1) return true;
  for (Vertex c : {es[0].first, es[0].second}) {
    bool all = true;
    for (auto [u, v] : es) all = all && (u == c || v == c);
    if (all) return true;
  }
  return false;
}

bool is_independent(const OrderedGraph& g, const std::vector<Vertex>& vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j])) return false;
  return true;
}

// Edge-removal actions share their shape: (H1 - F, id) for admissible F.
ReplacementAction edge_removal_action(std::string name, std::optional<int> param, int limit,
                                      std::function<bool(const OrderedGraph&,
                                                         const std::vector<Edge>&)> admissible) {
  auto enumerate = [limit, admissible](const OrderedGraph& h1) {
    std::vector<PatternTransformation> out;
    for_each_edge_subset(h1.edges(), limit, [&](const std::vector<Edge>& f) {
      if (!admissible(h1, f)) return;
      PatternTransformation t = identity_transformation(h1);
      t.h2 = delete_edges(h1, f);
      out.push_back(std::move(t));
    });
    return out;
  };
  auto contains = [limit, admissible](const OrderedGraph& h1, const PatternTransformation& t) {
    auto removed = removed_edges(h1, t);
    return removed && static_cast<int>(removed->size()) <= limit && admissible(h1, *removed);
  };
  return ReplacementAction(std::move(name), param, true, enumerate, contains);
}

// Contraction-style actions: quotients by blocks spanned by admissible F.
ReplacementAction contraction_action(std::string name, std::optional<int> param, int limit,
                                     bool matching, bool induced) {
  auto admissible = [matching, induced](const OrderedGraph& h1, const std::vector<Edge>& f) {
    if (!matching) return true;
    return induced ? is_induced_matching(h1, f) : is_matching(f);
  };
  auto enumerate = [limit, admissible](const OrderedGraph& h1) {
    std::vector<PatternTransformation> out;
    for_each_edge_subset(h1.edges(), limit, [&](const std::vector<Edge>& f) {
      if (!admissible(h1, f)) return;
      out.push_back(quotient_transformation(h1, contraction_blocks(h1, f)));
    });
    return out;
  };
  auto contains = [limit, matching, induced](const OrderedGraph& h1,
                                             const PatternTransformation& t) {
    Shape s = shape_of(t);
    if (!s.deleted.empty()) return false;
    int spent = 0;
    std::vector<Edge> pairs;
    for (auto& [y, b] : s.blocks) {
      if (!is_connected_subset(h1, b)) return false;
      spent += static_cast<int>(b.size()) - 1;
      if (matching) {
        if (b.size() > 2) return false;
        if (b.size() == 2) pairs.emplace_back(b[0], b[1]);
      }
    }
    if (spent > limit) return false;
    if (matching && induced && !is_induced_matching(h1, pairs)) return false;
    return is_exact_quotient(h1, t);
  };
  auto partial = [limit, matching, induced](const OrderedGraph& h1,
                                            const PatternTransformation& t) {
    Shape s = shape_of(t);
    if (!s.deleted.empty()) return false;
    int spent = 0;
    std::vector<Edge> pairs;
    for (auto& [y, b] : s.blocks) {
      spent += static_cast<int>(b.size()) - 1;
      if (matching) {
        if (b.size() > 2) return false;
        if (b.size() == 2) {
          if (!h1.has_edge(b[0], b[1])) return false;
          pairs.emplace_back(b[0], b[1]);
        }
      }
    }
    if (spent > limit) return false;
    if (matching && induced && !is_induced_matching(h1, pairs)) return false;
    return contains_quotient_edges(h1, t);
  };
  return ReplacementAction(std::move(name), param, false, enumerate, contains, partial);
}

int require_param(std::string_view name, std::optional<int> param) {
  if (!param) throw InputError("action " + std::string(name) + " needs a parameter k");
  if (*param < 0) throw InputError("action parameter must be non-negative");
  return *param;
}

}  // namespace

ReplacementAction::ReplacementAction(std::string name, std::optional<int> param,
                                     bool hereditary, Enumerator enumerate, Predicate contains,
                                     Predicate admits_partial)
    : name_(std::move(name)),
      param_(param),
      hereditary_(hereditary),
      enumerate_(std::move(enumerate)),
      contains_(std::move(contains)),
      partial_(std::move(admits_partial)) {}

std::string ReplacementAction::label() const {
  if (param_) return name_ + "(" + std::to_string(*param_) + ")";
  return name_;
}

std::vector<PatternTransformation> ReplacementAction::enumerate(const OrderedGraph& h1) const {
  auto out = enumerate_(h1);
  sort_unique(out);
  if (out.empty()) throw InternalError("action " + label() + " enumerated nothing");
  return out;
}

bool ReplacementAction::contains(const OrderedGraph& h1, const PatternTransformation& t) const {
  return contains_(h1, t);
}

bool ReplacementAction::admits_partial(const OrderedGraph& h1,
                                       const PatternTransformation& t) const {
  if (partial_) return partial_(h1, t);
  if (hereditary_) return contains_(h1, t);
  return true;
}

std::vector<PatternTransformation> enumerate_any(const OrderedGraph& h1, int guard) {
  if (h1.num_vertices() > guard)
    throw CapacityError("enumerate_any: pattern has more than " + std::to_string(guard) +
                        " vertices");
  std::vector<PatternTransformation> out;
  for_each_block_assignment(h1.num_vertices(), true, [&](const std::vector<int>& a, int nb) {
    auto blocks = blocks_from(h1, a, nb);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < nb; ++i)
      for (int j = i + 1; j < nb; ++j) pairs.emplace_back(i, j);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
      std::vector<std::pair<int, int>> es;
      for (size_t b = 0; b < pairs.size(); ++b)
        if (m >> b & 1) es.push_back(pairs[b]);
      out.push_back(transformation_from_blocks(h1, blocks, es));
    }
  });
  sort_unique(out);
  return out;
}

ReplacementAction any_replacement() {
  return ReplacementAction(
      "any", std::nullopt, true, [](const OrderedGraph& h1) { return enumerate_any(h1); },
      [](const OrderedGraph& h1, const PatternTransformation& t) {
        return is_valid_transformation(h1, t);
      });
}

ReplacementAction action_from_predicate(std::string name, ReplacementAction::Predicate pred,
                                        bool hereditary) {
  auto enumerate = [pred](const OrderedGraph& h1) {
    std::vector<PatternTransformation> out;
    for (auto& t : enumerate_any(h1))
      if (pred(h1, t)) out.push_back(t);
    return out;
  };
  return ReplacementAction(std::move(name), std::nullopt, hereditary, enumerate, pred);
}

ReplacementAction exact_edge_deletion(int k) {
  auto target = [k](const OrderedGraph& h1) { return std::min(k, h1.num_edges()); };
  auto enumerate = [target](const OrderedGraph& h1) {
    std::vector<PatternTransformation> out;
    int want = target(h1);
    for_each_edge_subset(h1.edges(), want, [&](const std::vector<Edge>& f) {
      if (static_cast<int>(f.size()) != want) return;
      PatternTransformation t = identity_transformation(h1);
      t.h2 = delete_edges(h1, f);
      out.push_back(std::move(t));
    });
    return out;
  };
  auto contains = [target](const OrderedGraph& h1, const PatternTransformation& t) {
    auto removed = removed_edges(h1, t);
    return removed && static_cast<int>(removed->size()) == target(h1);
  };
  return ReplacementAction("exact-eDel", k, false, enumerate, contains);
}

ReplacementAction catalog(std::string_view name, std::optional<int> param) {
  if (name == "vDel") {
    return ReplacementAction(
        "vDel", std::nullopt, true,
        [](const OrderedGraph& h1) {
          return std::vector<PatternTransformation>{deletion_transformation(h1)};
        },
        [](const OrderedGraph& h1, const PatternTransformation& t) {
          return t == deletion_transformation(h1);
        });
  }
  if (name == "eDel") {
    int k = require_param(name, param);
    return edge_removal_action("eDel", k, k,
                               [](const OrderedGraph&, const std::vector<Edge>&) { return true; });
  }
  if (name == "mDel") {
    int k = require_param(name, param);
    return edge_removal_action("mDel", k, k, [](const OrderedGraph&, const std::vector<Edge>& f) {
      return is_matching(f);
    });
  }
  if (name == "imDel") {
    int k = require_param(name, param);
    return edge_removal_action("imDel", k, k,
                               [](const OrderedGraph& h1, const std::vector<Edge>& f) {
                                 return is_induced_matching(h1, f);
                               });
  }
  if (name == "StarDel") {
    int k = require_param(name, param);
    return edge_removal_action("StarDel", k, k,
                               [](const OrderedGraph&, const std::vector<Edge>& f) {
                                 return is_star(f);
                               });
  }
  if (name == "Con") return contraction_action("Con", param, require_param(name, param), false, false);
  if (name == "mCon") return contraction_action("mCon", param, require_param(name, param), true, false);
  if (name == "imCon") return contraction_action("imCon", param, require_param(name, param), true, true);
  if (name == "id") {
    auto enumerate = [](const OrderedGraph& h1) {
      std::vector<PatternTransformation> out;
      for_each_block_assignment(h1.num_vertices(), false, [&](const std::vector<int>& a, int nb) {
        out.push_back(quotient_transformation(h1, blocks_from(h1, a, nb)));
      });
      return out;
    };
    auto contains = [](const OrderedGraph& h1, const PatternTransformation& t) {
      return shape_of(t).deleted.empty() && is_exact_quotient(h1, t);
    };
    auto partial = [](const OrderedGraph& h1, const PatternTransformation& t) {
      return shape_of(t).deleted.empty() && contains_quotient_edges(h1, t);
    };
    return ReplacementAction("id", std::nullopt, false, enumerate, contains, partial);
  }
  if (name == "ISDel") {
    auto enumerate = [](const OrderedGraph& h1) {
      std::vector<PatternTransformation> out;
      int n = h1.num_vertices();
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        std::vector<Vertex> del;
        for (int i = 0; i < n; ++i)
          if (m >> i & 1) del.push_back(h1.vertex_at(i));
        if (!is_independent(h1, del)) continue;
        std::vector<std::vector<Vertex>> blocks;
        for (int i = 0; i < n; ++i)
          if (!(m >> i & 1)) blocks.push_back({h1.vertex_at(i)});
        out.push_back(quotient_transformation(h1, blocks));
      }
      return out;
    };
    auto contains = [](const OrderedGraph& h1, const PatternTransformation& t) {
      Shape s = shape_of(t);
      for (auto& [y, b] : s.blocks)
        if (b.size() != 1 || b[0] != y) return false;
      return is_independent(h1, s.deleted) && t.h2 == delete_vertices(h1, s.deleted);
    };
    return ReplacementAction("ISDel", std::nullopt, true, enumerate, contains);
  }
  if (name == "Comp") {
    return ReplacementAction(
        "Comp", std::nullopt, true,
        [](const OrderedGraph& h1) {
          PatternTransformation t = identity_transformation(h1);
          t.h2 = complement(h1);
          return std::vector<PatternTransformation>{t};
        },
        [](const OrderedGraph& h1, const PatternTransformation& t) {
          return t.is_identity() && t.h2 == complement(h1);
        });
  }
  throw InputError("unknown action '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"vDel", "eDel", "Con", "id", "ISDel", "mDel", "imDel", "mCon", "imCon", "StarDel", "Comp"};
}

bool catalog_takes_param(std::string_view name) {
  return name == "eDel" || name == "Con" || name == "mDel" || name == "imDel" ||
         name == "mCon" || name == "imCon" || name == "StarDel";
}

ReplacementAction catalog_from_label(std::string_view label) {
  auto open = label.find('(');
  if (open == std::string_view::npos) return catalog(label);
  if (label.back() != ')') throw InputError("malformed action '" + std::string(label) + "'");
  std::string digits(label.substr(open + 1, label.size() - open - 2));
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("malformed action parameter in '" + std::string(label) + "'");
  return catalog(label.substr(0, open), std::stoi(digits));
}

std::optional<HereditaryCounterexample> check_hereditary(const ReplacementAction& action,
                                                         int n_max) {
  if (n_max > kEnumerateAnyGuard) throw CapacityError("check_hereditary: n_max above guard");
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
      std::vector<Edge> es;
      for (size_t b = 0; b < pairs.size(); ++b)
        if (m >> b & 1) es.push_back(pairs[b]);
      OrderedGraph h1 = OrderedGraph::on_range(n, es);
      for (const auto& t : action.enumerate(h1)) {
        for (std::uint64_t xm = 1; xm < (std::uint64_t{1} << n); ++xm) {
          std::vector<Vertex> x;
          for (int i = 0; i < n; ++i)
            if (xm >> i & 1) x.push_back(i);
          if (!action.contains(induced_subgraph(h1, x), restrict(t, x)))
            return HereditaryCounterexample{h1, t, x};
        }
      }
    }
  }
  return std::nullopt;
}

ProblemTranslation translate_problem(Problem p, int k) {
  switch (p) {
    case Problem::kVertexDeletion: return {catalog("vDel"), k};
    case Problem::kEdgeDeletion: return {catalog("eDel", k), 2 * k};
    case Problem::kEdgeContraction: return {catalog("Con", k), 2 * k};
    case Problem::kVertexIdentification: return {catalog("id"), k};
    case Problem::kIndependentSetDeletion: return {catalog("ISDel"), k};
    case Problem::kMatchingDeletion: return {catalog("mDel", k), 2 * k};
    case Problem::kInducedMatchingDeletion: return {catalog("imDel", k), 2 * k};
    case Problem::kMatchingContraction: return {catalog("mCon", k), 2 * k};
    case Problem::kInducedMatchingContraction: return {catalog("imCon", k), 2 * k};
    case Problem::kStarDeletion: return {catalog("StarDel", k), k + 1};
    case Problem::kSubgraphComplementation: return {catalog("Comp"), k};
  }
  throw InputError("unknown problem");
}

}  // namespace lrep
