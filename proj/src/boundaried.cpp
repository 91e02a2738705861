// SPDX-License-Identifier: Apache-2.0
#include "lrep/boundaried.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "lrep/error.hpp"
#include "lrep/generators.hpp"
#include "lrep/minors.hpp"

namespace lrep {

std::vector<Vertex> BoundariedGraph::boundary() const {
  std::vector<Vertex> out;
  for (auto [v, l] : labels) out.push_back(v);
  return out;
}

std::vector<int> BoundariedGraph::label_set() const {
  std::vector<int> out;
  for (auto [v, l] : labels) out.push_back(l);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Vertex> BoundariedGraph::vertex_of(int label) const {
  for (auto [v, l] : labels)
    if (l == label) return v;
  return std::nullopt;
}

BoundariedGraph make_boundaried(OrderedGraph g, std::map<Vertex, int> labels) {
  std::set<int> seen;
  for (auto [v, l] : labels) {
    if (!g.has_vertex(v)) throw InputError("boundary vertex not in graph");
    if (l <= 0) throw InputError("boundary labels must be positive");
    if (!seen.insert(l).second) throw InputError("boundary labels must be distinct");
  }
  return {std::move(g), std::move(labels)};
}

int ColoredGraph::num_boundary() const {
  return static_cast<int>(std::count_if(color.begin(), color.end(), [](int c) { return c != 0; }));
}

ColoredGraph to_colored(const BoundariedGraph& b) {
  ColoredGraph c{DenseGraph::from(b.graph), std::vector<int>(b.graph.num_vertices(), 0)};
  for (auto [v, l] : b.labels) c.color[b.graph.index_of(v)] = l;
  return c;
}

BoundariedGraph to_boundaried(const ColoredGraph& c) {
  BoundariedGraph b{c.g.to_ordered(), {}};
  for (int i = 0; i < c.g.n; ++i)
    if (c.color[i] != 0) b.labels[i] = c.color[i];
  return b;
}

CanonicalKey colored_key(const ColoredGraph& c) { return canonical_key(c.g, c.color); }
CanonicalKey boundaried_key(const BoundariedGraph& b) { return colored_key(to_colored(b)); }

bool compatible(const BoundariedGraph& a, const BoundariedGraph& b) {
  if (a.label_set() != b.label_set()) return false;
  for (auto [u, lu] : a.labels)
    for (auto [v, lv] : a.labels) {
      if (u >= v) continue;
      Vertex x = *b.vertex_of(lu);
      Vertex y = *b.vertex_of(lv);
      if (a.graph.has_edge(u, v) != b.graph.has_edge(x, y)) return false;
    }
  return true;
}

OrderedGraph glue(const BoundariedGraph& a, const BoundariedGraph& b) {
  if (!compatible(a, b)) throw InputError("glue: boundaried graphs are not compatible");
  std::map<Vertex, Vertex> rename;
  Vertex next = a.graph.empty() ? 0 : a.graph.max_vertex() + 1;
  std::vector<Vertex> vs = a.graph.vertices();
  for (Vertex v : b.graph.vertices()) {
    auto it = b.labels.find(v);
    if (it != b.labels.end()) {
      rename[v] = *a.vertex_of(it->second);
    } else {
      rename[v] = next;
      vs.push_back(next++);
    }
  }
  std::vector<Edge> es = a.graph.edges();
  for (auto [u, v] : b.graph.edges()) es.emplace_back(rename[u], rename[v]);
  return OrderedGraph::collapsing(vs, es);
}

ColoredGraph glue_union(const ColoredGraph& a, const ColoredGraph& b) {
  ColoredGraph out = a;
  std::vector<int> pos(b.g.n);
  for (int j = 0; j < b.g.n; ++j) {
    int found = -1;
    if (b.color[j] != 0)
      for (int i = 0; i < a.g.n; ++i)
        if (a.color[i] == b.color[j]) found = i;
    if (found < 0) {
      if (out.g.n == 64) throw CapacityError("glue: more than 64 vertices");
      found = out.g.add_vertex();
      out.color.push_back(b.color[j]);
    }
    pos[j] = found;
  }
  for (int i = 0; i < b.g.n; ++i)
    for (int j = i + 1; j < b.g.n; ++j)
      if (b.g.has_edge(i, j)) out.g.add_edge(pos[i], pos[j]);
  return out;
}

BoundariedGraph glue_union(const BoundariedGraph& a, const BoundariedGraph& b) {
  return to_boundaried(glue_union(to_colored(a), to_colored(b)));
}

namespace {

ColoredGraph without_vertex(const ColoredGraph& c, int i) {
  ColoredGraph out{c.g.without(i), c.color};
  out.color.erase(out.color.begin() + i);
  return out;
}

// Contracts edge ij; a boundary endpoint survives. Requires at most one
// boundary endpoint.
ColoredGraph contract(const ColoredGraph& c, int i, int j) {
  if (c.color[j] != 0 && c.color[i] == 0) std::swap(i, j);
  ColoredGraph out{c.g.contracted(i, j), c.color};
  out.color.erase(out.color.begin() + j);
  return out;
}

ColoredGraph dissolve(const ColoredGraph& c, int i) {
  int a = lowest(c.g.adj[i]);
  int b = lowest(c.g.adj[i] & ~bit(a));
  ColoredGraph out = c;
  out.g.add_edge(a, b);
  return without_vertex(out, i);
}

struct Ops {
  bool delete_edges = false;
  bool delete_vertices = false;  // internal vertices
  bool only_isolated = false;    // restricts vertex deletion to isolated ones
  bool contract = false;
  bool dissolve = false;
};

// Depth-first walk over all states reachable by `ops`, each isomorphism class
// once. `visit` returns whether to expand the state.
void explore(const ColoredGraph& start, const Ops& ops,
             const std::function<bool(const ColoredGraph&, const CanonicalKey&)>& visit) {
  std::unordered_set<CanonicalKey> seen;
  std::vector<ColoredGraph> stack{start};
  seen.insert(colored_key(start));
  bool first = true;
  while (!stack.empty()) {
    ColoredGraph c = std::move(stack.back());
    stack.pop_back();
    CanonicalKey key = first ? *seen.begin() : colored_key(c);
    first = false;
    if (!visit(c, key)) continue;
    auto push = [&](ColoredGraph next) {
      if (seen.size() > static_cast<std::size_t>(kFolioStateGuard))
        throw CapacityError("boundaried minor enumeration exceeded its state guard");
      if (seen.insert(colored_key(next)).second) stack.push_back(std::move(next));
    };
    const int n = c.g.n;
    for (int i = 0; i < n; ++i) {
      if (c.color[i] != 0) continue;
      if (ops.delete_vertices && (!ops.only_isolated || c.g.adj[i] == 0))
        push(without_vertex(c, i));
      if (ops.dissolve && c.g.degree(i) == 2) push(dissolve(c, i));
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (!c.g.has_edge(i, j)) continue;
        if (ops.delete_edges) {
          ColoredGraph d = c;
          d.g.remove_edge(i, j);
          push(std::move(d));
        }
        if (ops.contract && (c.color[i] == 0 || c.color[j] == 0)) push(contract(c, i, j));
      }
  }
}

// Is there a colour-preserving bijection mapping every edge of a onto an
// edge of b? Both graphs have the same number of vertices.
bool spanning_subgraph(const ColoredGraph& a, const ColoredGraph& b) {
  const int n = a.g.n;
  std::vector<int> map(n, -1);
  Mask used = 0;
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used >> w & 1 || a.color[v] != b.color[w] || a.g.degree(v) > b.g.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (a.g.has_edge(u, v) && !b.g.has_edge(map[u], w)) ok = false;
      if (!ok) continue;
      map[v] = w;
      used |= bit(w);
      if (rec(v + 1)) return true;
      used &= ~bit(w);
    }
    return false;
  };
  return rec(0);
}

struct FolioCache {
  std::mutex mutex;
  std::unordered_map<std::string, FolioKey> map;
};

FolioCache& folio_cache() {
  static FolioCache cache;
  return cache;
}

}  // namespace

bool boundaried_minor(const BoundariedGraph& big, const BoundariedGraph& small) {
  if (big.label_set() != small.label_set()) return false;
  ColoredGraph s = to_colored(small);
  CanonicalKey target = colored_key(s);
  int sv = s.g.n;
  int se = s.g.num_edges();
  bool found = false;
  Ops ops{true, true, false, true, false};
  explore(to_colored(big), ops, [&](const ColoredGraph& c, const CanonicalKey& key) {
    if (found) return false;
    if (key == target) found = true;
    return !found && c.g.n >= sv && c.g.num_edges() >= se &&
           (c.g.n > sv || c.g.num_edges() > se);
  });
  return found;
}

std::vector<CanonicalKey> minor_folio(const BoundariedGraph& g, int max_vertices) {
  std::vector<CanonicalKey> out;
  Ops ops{true, true, false, true, false};
  explore(to_colored(g), ops, [&](const ColoredGraph& c, const CanonicalKey& key) {
    if (c.g.n <= max_vertices) out.push_back(key);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::string FolioKey::digest() const {
  std::string bytes = std::to_string(budget) + (principal ? "P" : "Q");
  for (const auto& m : members) {
    bytes += std::to_string(m.size());
    bytes += ':';
    bytes += m;
  }
  return digest_hex(bytes);
}

FolioKey folio_key(const ColoredGraph& g, int h) {
  FolioKey key;
  key.budget = h + g.num_boundary();
  CanonicalKey exact = colored_key(g);
  if (g.g.n <= key.budget) {
    key.principal = true;
    key.members.push_back(std::move(exact));
    return key;
  }
  std::string cache_key = std::to_string(h) + "/" + exact;
  auto& cache = folio_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.map.find(cache_key);
    if (it != cache.map.end()) return it->second;
  }
  std::vector<std::pair<CanonicalKey, ColoredGraph>> quotients;
  Ops ops{false, true, true, true, false};
  explore(g, ops, [&](const ColoredGraph& c, const CanonicalKey& k) {
    if (c.g.n > key.budget) return true;
    if (c.g.n == key.budget) quotients.emplace_back(k, c);
    return false;
  });
  // The boundary graph itself is part of the key so that a representative
  // always carries the same boundary edges as the graph it stands for.
  Mask boundary = 0;
  for (int i = 0; i < g.g.n; ++i)
    if (g.color[i] != 0) boundary |= bit(i);
  std::vector<int> bcolors;
  for (int i = 0; i < g.g.n; ++i)
    if (g.color[i] != 0) bcolors.push_back(g.color[i]);
  key.members.push_back("B" + canonical_key(g.g.induced(boundary), bcolors));
  std::vector<bool> dominated(quotients.size(), false);
  for (std::size_t i = 0; i < quotients.size(); ++i)
    for (std::size_t j = 0; j < quotients.size() && !dominated[i]; ++j) {
      const auto& a = quotients[i].second;
      const auto& b = quotients[j].second;
      if (a.g.num_edges() < b.g.num_edges() && spanning_subgraph(a, b)) dominated[i] = true;
    }
  for (std::size_t i = 0; i < quotients.size(); ++i)
    if (!dominated[i]) key.members.push_back(quotients[i].first);
  std::sort(key.members.begin(), key.members.end());
  std::lock_guard lock(cache.mutex);
  if (cache.map.size() > 200'000) cache.map.clear();
  cache.map.emplace(cache_key, key);
  return key;
}

FolioKey folio_key(const BoundariedGraph& g, int h) { return folio_key(to_colored(g), h); }

std::vector<CanonicalKey> topo_folio(const BoundariedGraph& g, int ell) {
  std::vector<CanonicalKey> out;
  Ops ops{true, true, false, false, true};
  explore(to_colored(g), ops, [&](const ColoredGraph& c, const CanonicalKey& key) {
    if (std::max(c.g.n, c.g.num_edges()) <= ell) out.push_back(key);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BoundariedGraph> gluing_partners(const BoundariedGraph& g, int f_vertices) {
  std::vector<BoundariedGraph> out;
  std::unordered_set<CanonicalKey> seen;
  auto boundary = g.boundary();
  int b = static_cast<int>(boundary.size());
  for (int internal = 0; b + internal <= f_vertices; ++internal) {
    // Boundary vertices first (0..b-1), then internal ones.
    int n = b + internal;
    std::vector<Edge> fixed;
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j)
        if (g.graph.has_edge(boundary[i], boundary[j])) fixed.emplace_back(i, j);
    std::vector<Edge> free;
    for (int j = b; j < n; ++j)
      for (int i = 0; i < j; ++i) free.emplace_back(i, j);
    if (free.size() > 20) throw CapacityError("gluing partners: too many candidate edges");
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << free.size()); ++m) {
      std::vector<Edge> es = fixed;
      for (std::size_t e = 0; e < free.size(); ++e)
        if (m >> e & 1) es.push_back(free[e]);
      std::map<Vertex, int> labels;
      for (int i = 0; i < b; ++i) labels[i] = g.labels.at(boundary[i]);
      BoundariedGraph f{OrderedGraph::on_range(n, es), labels};
      if (seen.insert(boundaried_key(f)).second) out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<OrderedGraph> graphs_of_detail_at_most(int h) {
  std::vector<OrderedGraph> out;
  for (int n = 1; n <= std::min(h, 7); ++n)
    for (auto& g : all_graphs(n))
      if (g.num_edges() <= h) out.push_back(g);
  return out;
}

std::vector<bool> equivalence_profile(const BoundariedGraph& g,
                                      const std::vector<BoundariedGraph>& partners,
                                      const std::vector<OrderedGraph>& hs) {
  std::vector<bool> bits;
  for (const auto& f : partners) {
    OrderedGraph glued = glue(f, g);
    for (const auto& h : hs) bits.push_back(is_minor(glued, h));
  }
  return bits;
}

std::optional<EquivalenceWitness> equivalence_witness(const BoundariedGraph& g1,
                                                      const BoundariedGraph& g2, int h,
                                                      int f_vertices) {
  if (!compatible(g1, g2)) throw InputError("equivalence_witness: graphs are not compatible");
  auto hs = graphs_of_detail_at_most(h);
  for (const auto& f : gluing_partners(g1, f_vertices)) {
    OrderedGraph a = glue(f, g1);
    OrderedGraph b = glue(f, g2);
    for (const auto& x : hs)
      if (is_minor(a, x) != is_minor(b, x)) return EquivalenceWitness{f, x};
  }
  return std::nullopt;
}

RepresentativeStore::RepresentativeStore(int h) : h_(h) {
  if (h < 0) throw InputError("store detail must be non-negative");
}

std::size_t RepresentativeStore::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

ColoredGraph RepresentativeStore::lookup_or_insert(const ColoredGraph& g, const FolioKey& key) {
  std::string digest = key.digest();
  {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(digest);
    if (it != entries_.end() && it->second.graph.g.n < g.g.n) return it->second.graph;
  }
  CanonicalKey mine = colored_key(g);
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(digest, Entry{g, mine});
  if (!inserted) {
    Entry& e = it->second;
    if (g.g.n < e.graph.g.n || (g.g.n == e.graph.g.n && mine < e.key)) e = Entry{g, mine};
  }
  return it->second.graph;
}

BoundariedGraph RepresentativeStore::lookup_or_insert(const BoundariedGraph& g) {
  ColoredGraph c = to_colored(g);
  return to_boundaried(lookup_or_insert(c, folio_key(c, h_)));
}

void RepresentativeStore::save(std::ostream& out) const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> digests;
  for (const auto& [d, e] : entries_) digests.push_back(d);
  std::sort(digests.begin(), digests.end());
  out << "lrep-store 1 " << h_ << ' ' << digests.size() << '\n';
  for (const auto& d : digests) {
    const ColoredGraph& c = entries_.at(d).graph;
    out << d << ' ' << c.g.n;
    for (int col : c.color) out << ' ' << col;
    out << " ;";
    for (int i = 0; i < c.g.n; ++i)
      for (int j = i + 1; j < c.g.n; ++j)
        if (c.g.has_edge(i, j)) out << ' ' << i << '-' << j;
    out << '\n';
  }
}

void RepresentativeStore::load(std::istream& in) {
  std::string magic;
  int version = 0, h = 0;
  std::size_t count = 0;
  if (!(in >> magic >> version >> h >> count) || magic != "lrep-store" || version != 1)
    throw InputError("not an lrep-store version 1 file");
  if (h != h_) throw InputError("store was saved for a different detail h");
  std::string line;
  std::getline(in, line);
  for (std::size_t e = 0; e < count; ++e) {
    if (!std::getline(in, line)) throw InputError("store truncated");
    std::istringstream ls(line);
    std::string digest;
    int n = 0;
    if (!(ls >> digest >> n) || n < 0 || n > 64) throw InputError("bad store entry: " + line);
    ColoredGraph c{DenseGraph(n), std::vector<int>(n)};
    for (int& col : c.color)
      if (!(ls >> col)) throw InputError("bad store colours: " + line);
    std::string tok;
    if (!(ls >> tok) || tok != ";") throw InputError("bad store entry: " + line);
    while (ls >> tok) {
      auto dash = tok.find('-');
      if (dash == std::string::npos) throw InputError("bad store edge: " + tok);
      int i = std::stoi(tok.substr(0, dash));
      int j = std::stoi(tok.substr(dash + 1));
      if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw InputError("bad store edge: " + tok);
      c.g.add_edge(i, j);
    }
    CanonicalKey key = colored_key(c);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(digest, Entry{c, key});
    if (!inserted && (n < it->second.graph.g.n || (n == it->second.graph.g.n && key < it->second.key)))
      it->second = Entry{c, key};
  }
}

}  // namespace lrep
