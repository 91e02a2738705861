// SPDX-License-Identifier: Apache-2.0
#include "lrep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "lrep/error.hpp"

namespace lrep {

OrderedGraph::OrderedGraph(std::vector<Vertex> vertices, std::span<const Edge> edges)
    : OrderedGraph(std::move(vertices), edges, false) {}

OrderedGraph OrderedGraph::on_range(int n, std::span<const Edge> edges) {
  std::vector<Vertex> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  return OrderedGraph(std::move(vs), edges, false);
}

OrderedGraph OrderedGraph::collapsing(std::vector<Vertex> vertices,
                                      std::span<const Edge> edges) {
  return OrderedGraph(std::move(vertices), edges, true);
}

OrderedGraph::OrderedGraph(std::vector<Vertex> vertices, std::span<const Edge> edges,
                           bool collapse)
    : ids_(std::move(vertices)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw InputError("duplicate vertex identifier");
  adj_.assign(ids_.size(), {});
  for (auto [u, v] : edges) {
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    int i = index_of(u);
    int j = index_of(v);
    if (i < 0 || j < 0)
      throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                       " has an unknown endpoint");
    adj_[i].push_back(j);
    adj_[j].push_back(i);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    auto last = std::unique(nb.begin(), nb.end());
    if (last != nb.end() && !collapse) throw InputError("duplicate edge");
    nb.erase(last, nb.end());
    num_edges_ += static_cast<int>(nb.size());
  }
  num_edges_ /= 2;
}

int OrderedGraph::index_of(Vertex v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) return -1;
  return static_cast<int>(it - ids_.begin());
}

int OrderedGraph::require_index(Vertex v) const {
  int i = index_of(v);
  if (i < 0) throw InputError("unknown vertex " + std::to_string(v));
  return i;
}

Vertex OrderedGraph::max_vertex() const {
  if (ids_.empty()) return -1;
  return ids_.back();
}

bool OrderedGraph::has_edge_at(int i, int j) const {
  return std::binary_search(adj_[i].begin(), adj_[i].end(), j);
}

bool OrderedGraph::has_edge(Vertex u, Vertex v) const {
  int i = index_of(u);
  int j = index_of(v);
  if (i < 0 || j < 0) return false;
  return has_edge_at(i, j);
}

int OrderedGraph::degree(Vertex v) const {
  return static_cast<int>(adj_[require_index(v)].size());
}

std::vector<Vertex> OrderedGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (int j : adj_[require_index(v)]) out.push_back(ids_[j]);
  return out;
}

std::vector<Edge> OrderedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int i = 0; i < num_vertices(); ++i)
    for (int j : adj_[i])
      if (i < j) out.emplace_back(ids_[i], ids_[j]);
  return out;
}

std::string OrderedGraph::to_string() const {
  std::ostringstream os;
  os << "V={";
  for (size_t i = 0; i < ids_.size(); ++i) os << (i ? "," : "") << ids_[i];
  os << "} E={";
  bool first = true;
  for (auto [u, v] : edges()) {
    os << (first ? "" : ",") << u << "-" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

int Separation::order() const {
  std::set<Vertex> l(left.begin(), left.end());
  int count = 0;
  for (Vertex v : std::set<Vertex>(right.begin(), right.end())) count += l.count(v);
  return count;
}

namespace {

std::vector<bool> membership(const OrderedGraph& g, std::span<const Vertex> s) {
  std::vector<bool> in(g.num_vertices(), false);
  for (Vertex v : s) in[g.require_index(v)] = true;
  return in;
}

}  // namespace

OrderedGraph induced_subgraph(const OrderedGraph& g, std::span<const Vertex> s) {
  auto in = membership(g, s);
  std::vector<Vertex> vs;
  for (int i = 0; i < g.num_vertices(); ++i)
    if (in[i]) vs.push_back(g.vertex_at(i));
  std::vector<Edge> es;
  for (auto [u, v] : g.edges())
    if (in[g.index_of(u)] && in[g.index_of(v)]) es.emplace_back(u, v);
  return OrderedGraph(std::move(vs), es);
}

OrderedGraph delete_vertices(const OrderedGraph& g, std::span<const Vertex> s) {
  auto in = membership(g, s);
  std::vector<Vertex> keep;
  for (int i = 0; i < g.num_vertices(); ++i)
    if (!in[i]) keep.push_back(g.vertex_at(i));
  return induced_subgraph(g, keep);
}

OrderedGraph delete_edges(const OrderedGraph& g, std::span<const Edge> edges) {
  std::set<Edge> drop;
  for (auto [u, v] : edges) {
    if (!g.has_edge(u, v))
      throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                       " not in graph");
    drop.insert({std::min(u, v), std::max(u, v)});
  }
  std::vector<Edge> es;
  for (auto e : g.edges())
    if (!drop.count(e)) es.push_back(e);
  return OrderedGraph(g.vertices(), es);
}

OrderedGraph add_edges(const OrderedGraph& g, std::span<const Edge> edges) {
  auto es = g.edges();
  es.insert(es.end(), edges.begin(), edges.end());
  return OrderedGraph::collapsing(g.vertices(), es);
}

OrderedGraph disjoint_union(const OrderedGraph& a, const OrderedGraph& b) {
  std::vector<Vertex> vs = a.vertices();
  auto es = a.edges();
  Vertex shift = a.max_vertex() + 1 - (b.empty() ? 0 : b.vertices().front());
  for (Vertex v : b.vertices()) vs.push_back(v + shift);
  for (auto [u, v] : b.edges()) es.emplace_back(u + shift, v + shift);
  return OrderedGraph(std::move(vs), es);
}

OrderedGraph complement(const OrderedGraph& g) {
  std::vector<Edge> es;
  int n = g.num_vertices();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.has_edge_at(i, j)) es.emplace_back(g.vertex_at(i), g.vertex_at(j));
  return OrderedGraph(g.vertices(), es);
}

OrderedGraph contract_edge(const OrderedGraph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v))
    throw InputError("cannot contract non-edge " + std::to_string(u) + "-" +
                     std::to_string(v));
  Vertex keep = std::min(u, v);
  Vertex gone = std::max(u, v);
  std::vector<Vertex> vs;
  for (Vertex w : g.vertices())
    if (w != gone) vs.push_back(w);
  std::vector<Edge> es;
  for (auto [a, b] : g.edges()) {
    Vertex x = a == gone ? keep : a;
    Vertex y = b == gone ? keep : b;
    if (x != y) es.emplace_back(x, y);
  }
  return OrderedGraph::collapsing(std::move(vs), es);
}

OrderedGraph subdivide_edge(const OrderedGraph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v))
    throw InputError("cannot subdivide non-edge " + std::to_string(u) + "-" +
                     std::to_string(v));
  Vertex w = g.max_vertex() + 1;
  std::vector<Vertex> vs = g.vertices();
  vs.push_back(w);
  std::vector<Edge> es;
  for (auto e : g.edges())
    if (e != Edge{std::min(u, v), std::max(u, v)}) es.push_back(e);
  es.emplace_back(u, w);
  es.emplace_back(v, w);
  return OrderedGraph(std::move(vs), es);
}

OrderedGraph dissolve_vertex(const OrderedGraph& g, Vertex v) {
  if (g.degree(v) != 2)
    throw InputError("vertex " + std::to_string(v) + " does not have degree 2");
  auto nb = g.neighbors(v);
  std::vector<Vertex> vs;
  for (Vertex w : g.vertices())
    if (w != v) vs.push_back(w);
  std::vector<Edge> es;
  for (auto [a, b] : g.edges())
    if (a != v && b != v) es.emplace_back(a, b);
  es.emplace_back(nb[0], nb[1]);
  return OrderedGraph::collapsing(std::move(vs), es);
}

OrderedGraph relabel(const OrderedGraph& g, const std::map<Vertex, Vertex>& mapping) {
  auto image = [&](Vertex v) {
    auto it = mapping.find(v);
    if (it == mapping.end()) throw InputError("relabel: unmapped vertex");
    return it->second;
  };
  std::vector<Vertex> vs;
  for (Vertex v : g.vertices()) vs.push_back(image(v));
  std::vector<Edge> es;
  for (auto [a, b] : g.edges()) es.emplace_back(image(a), image(b));
  return OrderedGraph(std::move(vs), es);
}

int detail(const OrderedGraph& g) { return std::max(g.num_vertices(), g.num_edges()); }

namespace {

// Components of g restricted to positions with allowed[i], as position lists.
std::vector<std::vector<int>> components_of(const OrderedGraph& g,
                                            const std::vector<bool>& allowed) {
  int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (!allowed[s] || comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (size_t h = 0; h < members.size(); ++h)
      for (int j : g.neighbor_indices(members[h]))
        if (allowed[j] && comp[j] < 0) {
          comp[j] = comp[s];
          members.push_back(j);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<Vertex> to_ids(const OrderedGraph& g, const std::vector<int>& idx) {
  std::vector<Vertex> out;
  for (int i : idx) out.push_back(g.vertex_at(i));
  return out;
}

}  // namespace

std::vector<std::vector<Vertex>> connected_components(const OrderedGraph& g) {
  std::vector<std::vector<Vertex>> out;
  for (auto& c : components_of(g, std::vector<bool>(g.num_vertices(), true)))
    out.push_back(to_ids(g, c));
  return out;
}

bool is_connected(const OrderedGraph& g) { return connected_components(g).size() <= 1; }

bool is_connected_subset(const OrderedGraph& g, std::span<const Vertex> s) {
  return components_of(g, membership(g, s)).size() <= 1;
}

std::vector<LeafBlock> leaf_blocks(const OrderedGraph& g) {
  std::vector<LeafBlock> out;
  auto push = [&](LeafBlock lb) {
    if (std::find(out.begin(), out.end(), lb) == out.end()) out.push_back(std::move(lb));
  };
  for (auto& c : connected_components(g)) push({induced_subgraph(g, c), c});
  int n = g.num_vertices();
  for (int v = 0; v < n; ++v) {
    std::vector<bool> allowed(n, true);
    allowed[v] = false;
    for (auto& c : components_of(g, allowed)) {
      auto core = to_ids(g, c);
      auto with_v = core;
      with_v.push_back(g.vertex_at(v));
      push({induced_subgraph(g, with_v), core});
    }
  }
  return out;
}

bool is_separation(const OrderedGraph& g, const Separation& sep) {
  std::set<Vertex> l(sep.left.begin(), sep.left.end());
  std::set<Vertex> r(sep.right.begin(), sep.right.end());
  for (Vertex v : l)
    if (!g.has_vertex(v)) return false;
  for (Vertex v : r)
    if (!g.has_vertex(v)) return false;
  for (Vertex v : g.vertices())
    if (!l.count(v) && !r.count(v)) return false;
  for (auto [u, v] : g.edges()) {
    bool u_left_only = l.count(u) && !r.count(u);
    bool u_right_only = r.count(u) && !l.count(u);
    bool v_left_only = l.count(v) && !r.count(v);
    bool v_right_only = r.count(v) && !l.count(v);
    if ((u_left_only && v_right_only) || (u_right_only && v_left_only)) return false;
  }
  return true;
}

bool validate_minor_model(const OrderedGraph& host, const OrderedGraph& pattern,
                          const MinorModel& model, std::string* reason) {
  auto fail = [&](std::string why) {
    if (reason) *reason = std::move(why);
    return false;
  };
  std::map<Vertex, Vertex> owner;
  for (Vertex x : pattern.vertices()) {
    auto it = model.branch_sets.find(x);
    if (it == model.branch_sets.end() || it->second.empty())
      return fail("pattern vertex " + std::to_string(x) + " has no branch set");
    for (Vertex v : it->second) {
      if (!host.has_vertex(v)) return fail("branch set uses unknown host vertex");
      if (!owner.emplace(v, x).second) return fail("branch sets overlap");
    }
    if (!is_connected_subset(host, it->second))
      return fail("branch set of " + std::to_string(x) + " is disconnected");
  }
  if (model.branch_sets.size() != static_cast<size_t>(pattern.num_vertices()))
    return fail("branch set for a non-pattern vertex");
  for (auto [x, y] : pattern.edges()) {
    bool ok = false;
    for (Vertex a : model.branch_sets.at(x)) {
      for (Vertex b : host.neighbors(a)) {
        auto it = owner.find(b);
        if (it != owner.end() && it->second == y) {
          ok = true;
          break;
        }
      }
      if (ok) break;
    }
    if (!ok)
      return fail("edge " + std::to_string(x) + "-" + std::to_string(y) +
                  " not realised");
  }
  return true;
}

}  // namespace lrep
