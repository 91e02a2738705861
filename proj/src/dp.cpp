// SPDX-License-Identifier: Apache-2.0
#include "lrep/dp.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "lrep/canonical.hpp"
#include "lrep/error.hpp"
#include "lrep/minors.hpp"

namespace lrep {

const char* to_string(DpMode mode) {
  return mode == DpMode::kExactCarry ? "exact-carry" : "representative";
}

std::map<Vertex, int> label_scheme(const OrderedGraph& g, int k) {
  std::map<Vertex, int> out;
  for (Vertex v : g.vertices()) out[v] = k + g.rank(v);
  return out;
}

namespace {

int pos_of(const ColoredGraph& r, int color) {
  for (int i = 0; i < r.g.n; ++i)
    if (r.color[i] == color) return i;
  return -1;
}

int pattern_pos(const SignatureEntry& e, Vertex v) {
  for (int i = 0; i < static_cast<int>(e.pattern_id.size()); ++i)
    if (e.pattern_id[i] == v) return i;
  return -1;
}

int add_r_vertex(ColoredGraph& r, int color) {
  if (r.g.n == 64) throw CapacityError("dynamic program: modified graph above 64 vertices");
  r.color.push_back(color);
  return r.g.add_vertex();
}

int add_pattern_vertex(SignatureEntry& e, Vertex id, int label) {
  if (e.pattern.size() == 64) throw CapacityError("dynamic program: pattern above 64 vertices");
  e.pattern.push_back(0);
  e.pattern_id.push_back(id);
  e.phi.push_back(label);
  return static_cast<int>(e.pattern.size()) - 1;
}

void add_pattern_edge(SignatureEntry& e, int i, int j) {
  e.pattern[i] |= bit(j);
  e.pattern[j] |= bit(i);
}

// Runs body(i) for i in [0, n), serially or with OpenMP; the first exception
// is rethrown.
void for_each_index(std::size_t n, Execution exec, const std::function<void(std::size_t)>& body) {
  if (exec == Execution::kSerial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

struct DpEngine::Candidate {
  SignatureEntry entry;
  std::optional<FolioKey> folio;
};

DpEngine::DpEngine(const Instance& inst, const DpOptions& options)
    : inst_(inst), options_(options) {
  limit_ = options.budget_pruning ? inst.k : std::max(inst.k, inst.g.num_vertices());
  h_ = inst.f.constants().max_detail;
  store_ = options.store ? options.store : std::make_shared<RepresentativeStore>(h_);
  if (store_->h() != h_) throw InputError("representative store built for another detail h");
  if (inst.annotation)
    for (Vertex v : inst.annotation->s) annotated_[v] = inst.annotation->t.image(v) == kDeleted ? -1 : 0;
}

int DpEngine::bag_color(Vertex v) const { return limit_ + inst_.g.rank(v); }

PatternTransformation DpEngine::transformation_of(const SignatureEntry& e,
                                                  std::vector<Vertex>& ids) const {
  const int p = static_cast<int>(e.pattern.size());
  Vertex fresh = inst_.g.empty() ? 0 : inst_.g.max_vertex() + 1;
  ids.assign(p, 0);
  for (int i = 0; i < p; ++i) ids[i] = e.pattern_id[i] == kAnonymous ? fresh + i : e.pattern_id[i];
  std::vector<Vertex> name(e.labels, kAnonymous);
  for (int i = 0; i < p; ++i)
    if (e.phi[i] >= 0) name[e.phi[i]] = std::min(name[e.phi[i]], ids[i]);
  std::vector<int> lp(e.labels);
  for (int j = 0; j < e.labels; ++j) lp[j] = pos_of(e.r, j + 1);
  std::vector<Edge> h2_edges;
  for (int a = 0; a < e.labels; ++a)
    for (int b = a + 1; b < e.labels; ++b)
      if (e.r.g.has_edge(lp[a], lp[b])) h2_edges.emplace_back(name[a], name[b]);
  PatternTransformation t;
  t.h2 = OrderedGraph(name, h2_edges);
  for (int i = 0; i < p; ++i) t.phi.emplace_back(ids[i], e.phi[i] < 0 ? kDeleted : name[e.phi[i]]);
  std::sort(t.phi.begin(), t.phi.end());
  return t;
}

namespace {

OrderedGraph pattern_graph(const SignatureEntry& e, const std::vector<Vertex>& ids) {
  std::vector<Edge> es;
  for (int i = 0; i < static_cast<int>(e.pattern.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(e.pattern.size()); ++j)
      if (e.pattern[i] >> j & 1) es.emplace_back(ids[i], ids[j]);
  return OrderedGraph(ids, es);
}

}  // namespace

bool DpEngine::admits(const SignatureEntry& e) const {
  std::vector<Vertex> ids;
  PatternTransformation t = transformation_of(e, ids);
  return inst_.action.admits_partial(pattern_graph(e, ids), t);
}

void DpEngine::finish(SignatureEntry& e, Candidate& c) const {
  const int p = static_cast<int>(e.pattern.size());
  const int m = e.labels;
  DenseGraph pg(p + m);
  std::vector<int> colors(p + m, 2);
  for (int i = 0; i < p; ++i) {
    colors[i] = e.pattern_id[i] == kAnonymous ? 1 : 3 + inst_.g.index_of(e.pattern_id[i]);
    for (int j = 0; j < i; ++j)
      if (e.pattern[i] >> j & 1) pg.add_edge(i, j);
    if (e.phi[i] >= 0) pg.add_edge(i, p + e.phi[i]);
  }
  std::vector<int> lp(m);
  for (int j = 0; j < m; ++j) lp[j] = pos_of(e.r, j + 1);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (e.r.g.has_edge(lp[a], lp[b])) pg.add_edge(p + a, p + b);
  CanonicalLabeling lab = canonical_labeling(pg, colors);
  std::vector<int> new_pos(p), new_label(m);
  int np = 0, nl = 0;
  for (int q : lab.order) {
    if (q < p) {
      new_pos[q] = np++;
    } else {
      new_label[q - p] = nl++;
    }
  }
  SignatureEntry out;
  out.pattern.assign(p, 0);
  out.pattern_id.resize(p);
  out.phi.resize(p);
  for (int i = 0; i < p; ++i) {
    out.pattern_id[new_pos[i]] = e.pattern_id[i];
    out.phi[new_pos[i]] = e.phi[i] < 0 ? -1 : new_label[e.phi[i]];
    for (int j = 0; j < p; ++j)
      if (e.pattern[i] >> j & 1) out.pattern[new_pos[i]] |= bit(new_pos[j]);
  }
  out.witness.resize(m);
  for (int j = 0; j < m; ++j) out.witness[new_label[j]] = e.witness[j];
  out.labels = m;
  out.r = std::move(e.r);
  for (int& col : out.r.color)
    if (col >= 1 && col <= m) col = new_label[col - 1] + 1;
  out.sb = std::move(e.sb);
  out.trace = std::move(e.trace);
  out.key = lab.key;
  out.key += '\x1f';
  if (options_.mode == DpMode::kExactCarry) {
    out.key += colored_key(out.r);
  } else {
    c.folio = folio_key(out.r, h_);
    out.key += c.folio->digest();
  }
  e = std::move(out);
}

Signature DpEngine::merge(std::vector<std::vector<Candidate>>& per_entry) const {
  Signature out;
  std::unordered_map<std::string, int> index;
  for (auto& list : per_entry)
    for (auto& c : list) {
      if (!index.emplace(c.entry.key, static_cast<int>(out.size())).second) continue;
      if (options_.mode == DpMode::kRepresentative)
        c.entry.r = store_->lookup_or_insert(c.entry.r, *c.folio);
      out.push_back(std::move(c.entry));
    }
  return out;
}

Signature DpEngine::process_leaf() const {
  std::vector<std::vector<Candidate>> per(1);
  per[0].push_back({});
  finish(per[0][0].entry, per[0][0]);
  return merge(per);
}

Signature DpEngine::process_introduce(const NiceNode& node, const Signature& child) const {
  const Vertex v = node.vertex;
  std::vector<Vertex> nbrs;
  for (Vertex u : node.bag)
    if (u != v && inst_.g.has_edge(u, v)) nbrs.push_back(u);
  auto ann = annotated_.find(v);
  const bool is_annotated = ann != annotated_.end();
  const bool ann_deleted = is_annotated && ann->second < 0;
  std::vector<std::vector<Candidate>> per(child.size());
  for_each_index(child.size(), options_.exec, [&](std::size_t idx) {
    const SignatureEntry& e = child[idx];
    auto& out = per[idx];
    std::vector<int> unmod_pos;  // positions in r of unmodified neighbours
    std::vector<int> mod_pat;    // pattern positions of modified neighbours
    for (Vertex u : nbrs) {
      if (std::binary_search(e.sb.begin(), e.sb.end(), u)) {
        mod_pat.push_back(pattern_pos(e, u));
      } else {
        unmod_pos.push_back(pos_of(e.r, bag_color(u)));
      }
    }
    auto emit = [&](SignatureEntry&& next) {
      Candidate c{std::move(next), std::nullopt};
      finish(c.entry, c);
      out.push_back(std::move(c));
    };
    DpTrace base;
    base.first = static_cast<int>(idx);
    base.v = v;
    // (a) v stays unmodified.
    if (!is_annotated) {
      SignatureEntry next = e;
      int x = add_r_vertex(next.r, bag_color(v));
      for (int p : unmod_pos) next.r.g.add_edge(x, p);
      for (int q : mod_pat)
        if (e.phi[q] >= 0) next.r.g.add_edge(x, pos_of(next.r, e.phi[q] + 1));
      if (in_exc(next.r.g, inst_.f)) {
        next.trace = base;
        next.trace.branch = 'a';
        emit(std::move(next));
      }
    }
    if (static_cast<int>(e.pattern.size()) >= limit_) return;
    auto grown = [&](int label) {
      SignatureEntry next = e;
      int x = add_pattern_vertex(next, v, label);
      for (int q : mod_pat) add_pattern_edge(next, x, q);
      next.sb.insert(std::upper_bound(next.sb.begin(), next.sb.end(), v), v);
      return next;
    };
    // (b) v is deleted.
    if (!is_annotated || ann_deleted) {
      SignatureEntry next = grown(-1);
      if (admits(next)) {
        next.trace = base;
        next.trace.branch = 'b';
        emit(std::move(next));
      }
    }
    if (is_annotated && ann_deleted) return;
    // (c) v joins an existing modified vertex.
    for (int j = 0; j < e.labels; ++j) {
      SignatureEntry next = grown(j);
      int x = pos_of(next.r, j + 1);
      for (int p : unmod_pos) next.r.g.add_edge(x, p);
      if (!in_exc(next.r.g, inst_.f) || !admits(next)) continue;
      next.trace = base;
      next.trace.branch = 'c';
      next.trace.partner = e.witness[j];
      emit(std::move(next));
    }
    // (d) v becomes a new modified vertex, adjacent to any set of old ones.
    if (e.labels >= limit_) return;
    for (Mask s = 0; s < bit(e.labels); ++s) {
      SignatureEntry next = grown(e.labels);
      ++next.labels;
      next.witness.push_back(v);
      int x = add_r_vertex(next.r, e.labels + 1);
      for (int p : unmod_pos) next.r.g.add_edge(x, p);
      for (int j = 0; j < e.labels; ++j)
        if (s >> j & 1) next.r.g.add_edge(x, pos_of(next.r, j + 1));
      if (!in_exc(next.r.g, inst_.f) || !admits(next)) continue;
      next.trace = base;
      next.trace.branch = 'd';
      emit(std::move(next));
    }
  });
  Signature sig = merge(per);
  if (options_.validate_entries)
    for (const auto& e : sig) {
      std::string why;
      if (!validate_entry(e, node.bag, &why)) throw InternalError("introduce produced a bad entry: " + why);
    }
  return sig;
}

Signature DpEngine::process_forget(const NiceNode& node, const Signature& child) const {
  const Vertex v = node.vertex;
  const bool keep_identity = annotated_.count(v) > 0;
  std::vector<std::vector<Candidate>> per(child.size());
  for_each_index(child.size(), options_.exec, [&](std::size_t idx) {
    SignatureEntry next = child[idx];
    auto it = std::lower_bound(next.sb.begin(), next.sb.end(), v);
    if (it != next.sb.end() && *it == v) {
      next.sb.erase(it);
      if (!keep_identity) next.pattern_id[pattern_pos(next, v)] = kAnonymous;
    } else {
      int x = pos_of(next.r, bag_color(v));
      if (x < 0) throw InternalError("forgotten vertex missing from the boundary");
      next.r.color[x] = 0;
    }
    next.trace = DpTrace{'f', static_cast<int>(idx), -1, v, 0, {}};
    Candidate c{std::move(next), std::nullopt};
    finish(c.entry, c);
    per[idx].push_back(std::move(c));
  });
  Signature sig = merge(per);
  if (options_.validate_entries)
    for (const auto& e : sig) {
      std::string why;
      if (!validate_entry(e, node.bag, &why)) throw InternalError("forget produced a bad entry: " + why);
    }
  return sig;
}

namespace {

// SB vertices in order with their labels renumbered by first appearance,
// followed by the H2 edges among those labels.
std::string interface_of(const SignatureEntry& e) {
  std::string s;
  std::vector<int> first(e.labels, -1), order;
  for (Vertex v : e.sb) {
    s += std::to_string(v);
    s += ':';
    int l = e.phi[pattern_pos(e, v)];
    if (l < 0) {
      s += '\xff';
      continue;
    }
    if (first[l] < 0) {
      first[l] = static_cast<int>(order.size());
      order.push_back(l);
    }
    s += static_cast<char>(first[l]);
  }
  s += '|';
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      s += e.r.g.has_edge(pos_of(e.r, order[a] + 1), pos_of(e.r, order[b] + 1)) ? '1' : '0';
  return s;
}

}  // namespace

Signature DpEngine::process_join(const NiceNode& node, const Signature& left,
                                 const Signature& right) const {
  std::unordered_map<std::string, std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(right.size()); ++i) groups[interface_of(right[i])].push_back(i);
  std::vector<std::vector<Candidate>> per(left.size());
  for_each_index(left.size(), options_.exec, [&](std::size_t li) {
    const SignatureEntry& a = left[li];
    auto git = groups.find(interface_of(a));
    if (git == groups.end()) return;
    for (int ri : git->second) {
      const SignatureEntry& b = right[ri];
      const int pa = static_cast<int>(a.pattern.size());
      const int pb = static_cast<int>(b.pattern.size());
      if (pa + pb - static_cast<int>(a.sb.size()) > limit_) continue;
      std::vector<int> rl(b.labels, -2);
      std::vector<bool> used(a.labels, false);
      for (Vertex v : a.sb) {
        int lb = b.phi[pattern_pos(b, v)];
        if (lb >= 0) {
          rl[lb] = a.phi[pattern_pos(a, v)];
          used[rl[lb]] = true;
        }
      }
      std::vector<int> priv;
      for (int x = 0; x < b.labels; ++x)
        if (rl[x] == -2) priv.push_back(x);
      // Right labels mapped to -1 become new labels.
      std::function<void(std::size_t, int)> rec = [&](std::size_t t, int fresh) {
        if (a.labels + fresh > limit_) return;
        if (t < priv.size()) {
          for (int y = 0; y < a.labels; ++y) {
            if (used[y]) continue;
            used[y] = true;
            rl[priv[t]] = y;
            rec(t + 1, fresh);
            used[y] = false;
          }
          rl[priv[t]] = -1;
          rec(t + 1, fresh + 1);
          rl[priv[t]] = -2;
          return;
        }
        // H2 must agree on labels present on both sides.
        for (int x = 0; x < b.labels; ++x)
          for (int y = x + 1; y < b.labels; ++y)
            if (rl[x] >= 0 && rl[y] >= 0 &&
                b.r.g.has_edge(pos_of(b.r, x + 1), pos_of(b.r, y + 1)) !=
                    a.r.g.has_edge(pos_of(a.r, rl[x] + 1), pos_of(a.r, rl[y] + 1)))
              return;
        std::vector<int> target(b.labels);
        int next_label = a.labels;
        std::vector<int> right_only;
        for (int x = 0; x < b.labels; ++x) {
          if (rl[x] >= 0) {
            target[x] = rl[x];
          } else {
            target[x] = next_label++;
            right_only.push_back(target[x]);
          }
        }
        SignatureEntry e = a;
        e.labels = next_label;
        for (int x = 0; x < b.labels; ++x)
          if (rl[x] < 0) e.witness.push_back(b.witness[x]);
        std::vector<int> map(pb);
        for (int i = 0; i < pb; ++i) {
          int shared = b.pattern_id[i] == kAnonymous ? -1 : pattern_pos(a, b.pattern_id[i]);
          map[i] = shared >= 0 ? shared
                               : add_pattern_vertex(e, b.pattern_id[i], b.phi[i] < 0 ? -1 : target[b.phi[i]]);
        }
        for (int i = 0; i < pb; ++i)
          for (int j = i + 1; j < pb; ++j)
            if (b.pattern[i] >> j & 1) add_pattern_edge(e, map[i], map[j]);
        ColoredGraph rb = b.r;
        for (int& col : rb.color)
          if (col >= 1 && col <= b.labels) col = target[col - 1] + 1;
        e.r = glue_union(a.r, rb);
        if (!in_exc(e.r.g, inst_.f)) return;
        std::vector<bool> hit(a.labels, false);
        for (int x = 0; x < b.labels; ++x)
          if (rl[x] >= 0) hit[rl[x]] = true;
        std::vector<std::pair<int, int>> pairs;
        for (int y = 0; y < a.labels; ++y)
          if (!hit[y])
            for (int z : right_only) pairs.emplace_back(pos_of(e.r, y + 1), pos_of(e.r, z + 1));
        if (pairs.size() > 20) throw CapacityError("join: too many cross label pairs");
        DpTrace trace{'j', static_cast<int>(li), ri, 0, 0, {}};
        for (int x : priv)
          if (rl[x] >= 0) trace.merged.emplace_back(a.witness[rl[x]], b.witness[x]);
        for (Mask s = 0; s < bit(static_cast<int>(pairs.size())); ++s) {
          SignatureEntry next = e;
          for (std::size_t q = 0; q < pairs.size(); ++q)
            if (s >> q & 1) next.r.g.add_edge(pairs[q].first, pairs[q].second);
          if (s != 0 && !in_exc(next.r.g, inst_.f)) continue;
          if (!admits(next)) continue;
          next.trace = trace;
          Candidate c{std::move(next), std::nullopt};
          finish(c.entry, c);
          per[li].push_back(std::move(c));
        }
      };
      rec(0, 0);
    }
  });
  Signature sig = merge(per);
  if (options_.validate_entries)
    for (const auto& e : sig) {
      std::string why;
      if (!validate_entry(e, node.bag, &why)) throw InternalError("join produced a bad entry: " + why);
    }
  return sig;
}

std::optional<int> DpEngine::root_accept(const Signature& root) const {
  for (int i = 0; i < static_cast<int>(root.size()); ++i) {
    const SignatureEntry& e = root[i];
    if (!e.sb.empty()) throw InternalError("root entry with a non-empty bag intersection");
    if (static_cast<int>(e.pattern.size()) > inst_.k) continue;
    std::vector<Vertex> ids;
    PatternTransformation t = transformation_of(e, ids);
    OrderedGraph h1 = pattern_graph(e, ids);
    if (!inst_.action.contains(h1, t)) continue;
    if (inst_.annotation && !inst_.annotation->s.empty() &&
        restrict(t, inst_.annotation->s) != inst_.annotation->t)
      continue;
    return i;
  }
  return std::nullopt;
}

Solution DpEngine::backtrack(const NiceTreeDecomposition& td, const std::vector<Signature>& sigs,
                             int node, int entry) const {
  std::vector<Vertex> s;
  std::vector<Vertex> deleted;
  std::map<Vertex, Vertex> parent;
  auto find = [&](Vertex x) {
    parent.try_emplace(x, x);
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](Vertex x, Vertex y) {
    Vertex a = find(x), b = find(y);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  std::vector<std::pair<int, int>> stack{{node, entry}};
  while (!stack.empty()) {
    auto [x, i] = stack.back();
    stack.pop_back();
    if (i < 0 || i >= static_cast<int>(sigs[x].size())) throw InternalError("broken trace");
    const NiceNode& nn = td.nodes[x];
    const DpTrace& tr = sigs[x][i].trace;
    switch (nn.kind) {
      case NodeKind::kLeaf:
        break;
      case NodeKind::kIntroduce:
        if (tr.branch != 'a') {
          s.push_back(tr.v);
          find(tr.v);
          if (tr.branch == 'b') deleted.push_back(tr.v);
          if (tr.branch == 'c') unite(tr.v, tr.partner);
        }
        stack.emplace_back(nn.children[0], tr.first);
        break;
      case NodeKind::kForget:
        stack.emplace_back(nn.children[0], tr.first);
        break;
      case NodeKind::kJoin:
        for (auto [p, q] : tr.merged) unite(p, q);
        stack.emplace_back(nn.children[0], tr.first);
        stack.emplace_back(nn.children[1], tr.second);
        break;
    }
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::sort(deleted.begin(), deleted.end());
  deleted.erase(std::unique(deleted.begin(), deleted.end()), deleted.end());
  const SignatureEntry& root = sigs[node][entry];
  std::vector<Vertex> h2_vertices;
  std::vector<std::pair<Vertex, Vertex>> phi;
  for (Vertex v : s) {
    if (std::binary_search(deleted.begin(), deleted.end(), v)) {
      phi.emplace_back(v, kDeleted);
    } else {
      phi.emplace_back(v, find(v));
      h2_vertices.push_back(find(v));
    }
  }
  std::sort(h2_vertices.begin(), h2_vertices.end());
  h2_vertices.erase(std::unique(h2_vertices.begin(), h2_vertices.end()), h2_vertices.end());
  if (static_cast<int>(h2_vertices.size()) != root.labels)
    throw InternalError("backtracking found a different number of modified vertices");
  std::vector<Edge> h2_edges;
  for (int a = 0; a < root.labels; ++a)
    for (int b = a + 1; b < root.labels; ++b)
      if (root.r.g.has_edge(pos_of(root.r, a + 1), pos_of(root.r, b + 1)))
        h2_edges.emplace_back(find(root.witness[a]), find(root.witness[b]));
  OrderedGraph h1 = induced_subgraph(inst_.g, s);
  OrderedGraph h2 = OrderedGraph::collapsing(h2_vertices, h2_edges);
  return Solution{s, make_transformation(h1, h2, phi)};
}

bool DpEngine::validate_entry(const SignatureEntry& e, const std::vector<Vertex>& bag,
                              std::string* reason) const {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  const int p = static_cast<int>(e.pattern.size());
  if (p > limit_) return fail("pattern exceeds the budget");
  if (static_cast<int>(e.pattern_id.size()) != p || static_cast<int>(e.phi.size()) != p)
    return fail("pattern arrays disagree");
  if (e.labels > limit_ || static_cast<int>(e.witness.size()) != e.labels)
    return fail("label count");
  std::vector<bool> hit(e.labels, false);
  for (int i = 0; i < p; ++i) {
    if (e.phi[i] < -1 || e.phi[i] >= e.labels) return fail("phi out of range");
    if (e.phi[i] >= 0) hit[e.phi[i]] = true;
    for (int j = 0; j < p; ++j) {
      if ((e.pattern[i] >> j & 1) != (e.pattern[j] >> i & 1)) return fail("pattern asymmetric");
      if (e.pattern_id[i] != kAnonymous && e.pattern_id[j] != kAnonymous && i != j &&
          static_cast<bool>(e.pattern[i] >> j & 1) != inst_.g.has_edge(e.pattern_id[i], e.pattern_id[j]))
        return fail("pattern differs from G[S']");
    }
  }
  for (bool h : hit)
    if (!h) return fail("label without preimage");
  std::vector<Vertex> sb;
  for (int i = 0; i < p; ++i)
    if (e.pattern_id[i] != kAnonymous &&
        std::binary_search(bag.begin(), bag.end(), e.pattern_id[i]))
      sb.push_back(e.pattern_id[i]);
  std::sort(sb.begin(), sb.end());
  if (sb != e.sb) return fail("SB differs from S' ∩ bag");
  std::vector<int> expected;
  for (int j = 0; j < e.labels; ++j) expected.push_back(j + 1);
  for (Vertex v : bag)
    if (!std::binary_search(sb.begin(), sb.end(), v)) expected.push_back(bag_color(v));
  std::vector<int> got;
  for (int c : e.r.color)
    if (c != 0) got.push_back(c);
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  if (got != expected) return fail("boundary of R is not (bag \\ SB) ∪ labels");
  if (!in_exc(e.r.g, inst_.f)) return fail("R is not in exc(F)");
  return true;
}

DpResult run_dp(const Instance& inst, const DpOptions& options) {
  validate_instance(inst);
  if (inst.k < 0) throw InputError("budget must be non-negative");
  if (inst.k > options.max_budget)
    throw CapacityError("dynamic program: budget above " + std::to_string(options.max_budget));
  DpResult result;
  if (inst.annotation && static_cast<int>(inst.annotation->s.size()) > inst.k) return result;
  NiceTreeDecomposition own;
  const NiceTreeDecomposition* td = options.decomposition;
  if (!td) {
    own = nice_decomposition(inst.g);
    td = &own;
  }
  result.stats.width = td->width();
  result.stats.nodes = static_cast<int>(td->nodes.size());
  if (td->width() > options.max_width)
    throw CapacityError("dynamic program: width " + std::to_string(td->width()) + " above " +
                        std::to_string(options.max_width));
  DpEngine engine(inst, options);
  std::vector<Signature> sigs(td->nodes.size());
  for (std::size_t x = 0; x < td->nodes.size(); ++x) {
    const NiceNode& nn = td->nodes[x];
    switch (nn.kind) {
      case NodeKind::kLeaf:
        sigs[x] = engine.process_leaf();
        break;
      case NodeKind::kIntroduce:
        sigs[x] = engine.process_introduce(nn, sigs[nn.children[0]]);
        break;
      case NodeKind::kForget:
        sigs[x] = engine.process_forget(nn, sigs[nn.children[0]]);
        break;
      case NodeKind::kJoin:
        sigs[x] = engine.process_join(nn, sigs[nn.children[0]], sigs[nn.children[1]]);
        break;
    }
    result.stats.signature_sizes.push_back(sigs[x].size());
    result.stats.total_entries += sigs[x].size();
    result.stats.max_signature = std::max(result.stats.max_signature, sigs[x].size());
  }
  result.stats.store_size = engine.store().size();
  if (auto hit = engine.root_accept(sigs[td->root]))
    result.solution = engine.backtrack(*td, sigs, td->root, *hit);
  return result;
}

}  // namespace lrep
