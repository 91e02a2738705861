// SPDX-License-Identifier: Apache-2.0
#include "lrep/treewidth.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "lrep/dense_graph.hpp"
#include "lrep/error.hpp"

namespace lrep {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& n : nodes) w = std::max(w, static_cast<int>(n.bag.size()) - 1);
  return w;
}

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::kLeaf: return "leaf";
    case NodeKind::kIntroduce: return "introduce";
    case NodeKind::kForget: return "forget";
    case NodeKind::kJoin: return "join";
  }
  return "?";
}

TreeDecomposition decomposition_from_order(const OrderedGraph& g,
                                           const std::vector<Vertex>& order) {
  int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) throw InputError("order must list every vertex");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int idx = g.require_index(order[i]);
    if (pos[idx] >= 0) throw InputError("order repeats a vertex");
    pos[idx] = i;
  }
  std::vector<std::set<int>> fill(n);
  for (int i = 0; i < n; ++i)
    for (int j : g.neighbor_indices(i)) fill[i].insert(j);
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }
  td.bags.resize(n);
  std::vector<int> parent(n, -1);
  for (int step = 0; step < n; ++step) {
    int v = g.index_of(order[step]);
    std::vector<int> later;
    for (int u : fill[v])
      if (pos[u] > step) later.push_back(u);
    for (int a : later)
      for (int b : later)
        if (a != b) fill[a].insert(b);
    std::vector<Vertex> bag{g.vertex_at(v)};
    int next = -1;
    for (int u : later) {
      bag.push_back(g.vertex_at(u));
      if (next < 0 || pos[u] < pos[next]) next = u;
    }
    std::sort(bag.begin(), bag.end());
    td.bags[step] = bag;
    if (next >= 0) parent[step] = pos[next];
  }
  // Roots of separate components hang off the last bag.
  for (int step = 0; step < n; ++step) {
    if (parent[step] >= 0) {
      td.tree.emplace_back(step, parent[step]);
    } else if (step != n - 1) {
      td.tree.emplace_back(step, n - 1);
    }
  }
  return td;
}

TreewidthResult exact_treewidth(const OrderedGraph& g, int guard) {
  int n = g.num_vertices();
  if (n > guard)
    throw CapacityError("exact treewidth: more than " + std::to_string(guard) +
                        " vertices; use heuristic_decomposition");
  if (n == 0) return {-1, decomposition_from_order(g, {})};
  DenseGraph d = DenseGraph::from(g);
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::int8_t> best(std::size_t{1} << n, 127);
  std::vector<std::int8_t> last(std::size_t{1} << n, -1);
  best[0] = -1;
  for (std::uint32_t s = 0; s < full; ++s) {
    if (best[s] == 127) continue;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) continue;
      Mask within = Mask{s} | bit(v);
      Mask comp = reach(d, v, within);
      int q = popcount(neighborhood(d, comp) & ~within);
      std::int8_t cand = static_cast<std::int8_t>(std::max<int>(best[s], q));
      std::uint32_t t = s | (std::uint32_t{1} << v);
      if (cand < best[t]) {
        best[t] = cand;
        last[t] = static_cast<std::int8_t>(v);
      }
    }
  }
  std::vector<Vertex> order(n);
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    int v = last[s];
    order[i] = g.vertex_at(v);
    s &= ~(std::uint32_t{1} << v);
  }
  TreewidthResult r{best[full], decomposition_from_order(g, order)};
  if (r.td.width() != r.width) throw InternalError("treewidth reconstruction mismatch");
  return r;
}

TreeDecomposition heuristic_decomposition(const OrderedGraph& g) {
  int n = g.num_vertices();
  std::vector<std::set<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j : g.neighbor_indices(i)) adj[i].insert(j);
  std::vector<bool> gone(n, false);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < n; ++i)
      if (!gone[i] && (pick < 0 || adj[i].size() < adj[pick].size())) pick = i;
    order.push_back(g.vertex_at(pick));
    gone[pick] = true;
    std::vector<int> nb(adj[pick].begin(), adj[pick].end());
    for (int a : nb) {
      adj[a].erase(pick);
      for (int b : nb)
        if (a != b) adj[a].insert(b);
    }
  }
  return decomposition_from_order(g, order);
}

bool validate_td(const OrderedGraph& g, const TreeDecomposition& td, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  int nodes = static_cast<int>(td.bags.size());
  if (nodes == 0) return fail("no nodes");
  if (static_cast<int>(td.tree.size()) != nodes - 1) return fail("tree edge count");
  std::vector<std::vector<int>> tadj(nodes);
  for (auto [a, b] : td.tree) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) return fail("bad tree edge");
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  std::vector<bool> seen(nodes, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++count;
    for (int y : tadj[x])
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  if (count != nodes) return fail("tree is disconnected");
  std::map<Vertex, std::vector<int>> where;
  for (int i = 0; i < nodes; ++i)
    for (Vertex v : td.bags[i]) {
      if (!g.has_vertex(v)) return fail("bag holds a non-vertex");
      where[v].push_back(i);
    }
  for (Vertex v : g.vertices())
    if (!where.count(v)) return fail("vertex " + std::to_string(v) + " in no bag");
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int i : where[u])
      covered = covered || std::binary_search(td.bags[i].begin(), td.bags[i].end(), v);
    if (!covered) return fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " uncovered");
  }
  for (auto& [v, list] : where) {
    std::set<int> mine(list.begin(), list.end());
    std::set<int> reached{list[0]};
    std::vector<int> st{list[0]};
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : tadj[x])
        if (mine.count(y) && reached.insert(y).second) st.push_back(y);
    }
    if (reached.size() != mine.size())
      return fail("nodes of vertex " + std::to_string(v) + " are not connected");
  }
  return true;
}

namespace {

// Merges tree neighbours whose bags nest, so that at most |V| nodes remain.
TreeDecomposition compress(const TreeDecomposition& td) {
  int nodes = static_cast<int>(td.bags.size());
  std::vector<std::set<int>> adj(nodes);
  for (auto [a, b] : td.tree) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<std::vector<Vertex>> bags = td.bags;
  std::vector<bool> alive(nodes, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < nodes && !changed; ++x) {
      if (!alive[x]) continue;
      for (int y : adj[x]) {
        if (!std::includes(bags[y].begin(), bags[y].end(), bags[x].begin(), bags[x].end()))
          continue;
        // Fold x into y.
        for (int z : adj[x]) {
          if (z == y) continue;
          adj[z].erase(x);
          adj[z].insert(y);
          adj[y].insert(z);
        }
        adj[y].erase(x);
        adj[x].clear();
        alive[x] = false;
        changed = true;
        break;
      }
    }
  }
  TreeDecomposition out;
  std::vector<int> id(nodes, -1);
  for (int x = 0; x < nodes; ++x)
    if (alive[x]) {
      id[x] = static_cast<int>(out.bags.size());
      out.bags.push_back(bags[x]);
    }
  for (int x = 0; x < nodes; ++x)
    for (int y : adj[x])
      if (alive[x] && x < y) out.tree.emplace_back(id[x], id[y]);
  return out;
}

std::vector<Vertex> minus(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct NiceBuilder {
  NiceTreeDecomposition nice;

  int add(NodeKind kind, std::vector<Vertex> bag, Vertex v, std::vector<int> children) {
    nice.nodes.push_back({kind, std::move(bag), v, std::move(children)});
    return static_cast<int>(nice.nodes.size()) - 1;
  }

  // Walks from `node` (bag `from`) to bag `to`: forgets first, then introduces.
  int morph(int node, const std::vector<Vertex>& to) {
    std::vector<Vertex> bag = nice.nodes[node].bag;
    for (Vertex v : minus(bag, to)) {
      bag.erase(std::find(bag.begin(), bag.end(), v));
      node = add(NodeKind::kForget, bag, v, {node});
    }
    for (Vertex v : minus(to, bag)) {
      bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
      node = add(NodeKind::kIntroduce, bag, v, {node});
    }
    return node;
  }
};

}  // namespace

NiceTreeDecomposition make_nice(const OrderedGraph& g, const TreeDecomposition& td) {
  std::string why;
  if (!validate_td(g, td, &why)) throw InputError("invalid tree decomposition: " + why);
  TreeDecomposition c = compress(td);
  int nodes = static_cast<int>(c.bags.size());
  std::vector<std::vector<int>> adj(nodes);
  for (auto [a, b] : c.tree) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  NiceBuilder nb;
  // Iterative post-order from node 0.
  std::vector<int> parent(nodes, -1), order;
  std::vector<int> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (int y : adj[x])
      if (parent[y] < 0) {
        parent[y] = x;
        stack.push_back(y);
      }
  }
  std::vector<int> built(nodes, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    std::vector<int> branches;
    for (int y : adj[x])
      if (y != x && parent[y] == x) branches.push_back(nb.morph(built[y], c.bags[x]));
    if (branches.empty()) {
      int leaf = nb.add(NodeKind::kLeaf, {}, 0, {});
      branches.push_back(nb.morph(leaf, c.bags[x]));
    }
    int cur = branches[0];
    for (std::size_t i = 1; i < branches.size(); ++i)
      cur = nb.add(NodeKind::kJoin, c.bags[x], 0, {cur, branches[i]});
    built[x] = cur;
  }
  nb.nice.root = nb.morph(built[0], {});
  return nb.nice;
}

bool validate_nice(const OrderedGraph& g, const NiceTreeDecomposition& nice, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  int nodes = static_cast<int>(nice.nodes.size());
  if (nice.root != nodes - 1) return fail("root must be the last node");
  if (!nice.nodes[nice.root].bag.empty()) return fail("root bag not empty");
  std::vector<int> parents(nodes, 0);
  TreeDecomposition td;
  for (int i = 0; i < nodes; ++i) {
    const auto& x = nice.nodes[i];
    if (!std::is_sorted(x.bag.begin(), x.bag.end())) return fail("unsorted bag");
    for (int c : x.children) {
      if (c < 0 || c >= i) return fail("child after parent");
      ++parents[c];
      td.tree.emplace_back(c, i);
    }
    td.bags.push_back(x.bag);
    switch (x.kind) {
      case NodeKind::kLeaf:
        if (!x.children.empty() || !x.bag.empty()) return fail("leaf not empty");
        break;
      case NodeKind::kIntroduce: {
        if (x.children.size() != 1) return fail("introduce arity");
        auto extra = minus(x.bag, nice.nodes[x.children[0]].bag);
        if (extra != std::vector<Vertex>{x.vertex} ||
            x.bag.size() != nice.nodes[x.children[0]].bag.size() + 1)
          return fail("introduce changes more than one vertex");
        break;
      }
      case NodeKind::kForget: {
        if (x.children.size() != 1) return fail("forget arity");
        auto lost = minus(nice.nodes[x.children[0]].bag, x.bag);
        if (lost != std::vector<Vertex>{x.vertex} ||
            x.bag.size() + 1 != nice.nodes[x.children[0]].bag.size())
          return fail("forget changes more than one vertex");
        break;
      }
      case NodeKind::kJoin:
        if (x.children.size() != 2) return fail("join arity");
        for (int c : x.children)
          if (nice.nodes[c].bag != x.bag) return fail("join bags differ");
        break;
    }
  }
  for (int i = 0; i < nodes; ++i)
    if (parents[i] != (i == nice.root ? 0 : 1)) return fail("not a rooted tree");
  return validate_td(g, td, reason);
}

NiceTreeDecomposition nice_decomposition(const OrderedGraph& g) {
  if (g.num_vertices() <= kExactTreewidthGuard) return make_nice(g, exact_treewidth(g).td);
  return make_nice(g, heuristic_decomposition(g));
}

std::string write_td(const OrderedGraph& g, const TreeDecomposition& td) {
  std::ostringstream os;
  os << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << g.num_vertices() << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    os << "b " << i + 1;
    for (Vertex v : td.bags[i]) os << ' ' << g.rank(v);
    os << '\n';
  }
  for (auto [a, b] : td.tree) os << a + 1 << ' ' << b + 1 << '\n';
  return os.str();
}

}  // namespace lrep
