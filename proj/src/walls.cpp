// SPDX-License-Identifier: Apache-2.0
#include "lrep/walls.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>

#include "lrep/error.hpp"
#include "lrep/generators.hpp"

namespace lrep {

namespace {

using Point = std::pair<int, int>;

Edge ordered(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

bool has_vertical(int x, int y) { return (x + y) % 2 == 0; }

// Skeleton vertices by position.
std::map<Point, Vertex> positions(const Wall& w) {
  std::map<Point, Vertex> out;
  for (auto& [v, p] : w.coords) out[p] = v;
  return out;
}

std::vector<Edge> skeleton_edges(const std::map<Point, Vertex>& pos) {
  std::vector<Edge> out;
  for (auto& [p, v] : pos) {
    auto [x, y] = p;
    if (auto it = pos.find({x + 1, y}); it != pos.end()) out.push_back(ordered(v, it->second));
    if (has_vertical(x, y))
      if (auto it = pos.find({x, y + 1}); it != pos.end()) out.push_back(ordered(v, it->second));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Inner vertices of skeleton edge u–v in the direction from u to v.
std::vector<Vertex> inner(const Wall& w, Vertex u, Vertex v) {
  auto it = w.subdivisions.find(ordered(u, v));
  if (it == w.subdivisions.end()) return {};
  std::vector<Vertex> path = it->second;
  if (u > v) std::reverse(path.begin(), path.end());
  return path;
}

// Expands a walk over skeleton vertices into the full path of w.
std::vector<Vertex> lift(const Wall& w, const std::vector<Vertex>& skeleton_walk) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < skeleton_walk.size(); ++i) {
    if (i > 0) {
      auto mid = inner(w, skeleton_walk[i - 1], skeleton_walk[i]);
      out.insert(out.end(), mid.begin(), mid.end());
    }
    out.push_back(skeleton_walk[i]);
  }
  return out;
}

// Faces of the straight-line drawing of the given skeleton, each as its
// cyclic vertex sequence.
std::vector<std::vector<Vertex>> drawn_faces(const std::map<Point, Vertex>& pos,
                                             const std::vector<Edge>& edges,
                                             const std::map<Vertex, Point>& at) {
  static constexpr int dx[4] = {1, 0, -1, 0};
  static constexpr int dy[4] = {0, 1, 0, -1};
  std::set<Edge> edge_set(edges.begin(), edges.end());
  auto neighbor = [&](Vertex v, int d) -> Vertex {
    auto [x, y] = at.at(v);
    auto it = pos.find({x + dx[d], y + dy[d]});
    if (it == pos.end() || !edge_set.count(ordered(v, it->second))) return -1;
    return it->second;
  };
  auto direction = [&](Vertex from, Vertex to) {
    auto [x1, y1] = at.at(from);
    auto [x2, y2] = at.at(to);
    for (int d = 0; d < 4; ++d)
      if (x1 + dx[d] == x2 && y1 + dy[d] == y2) return d;
    throw InternalError("skeleton edge between non-adjacent positions");
  };
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<std::vector<Vertex>> faces;
  for (auto [a, b] : edges)
    for (auto dart : {std::pair{a, b}, std::pair{b, a}}) {
      if (seen.count(dart)) continue;
      std::vector<Vertex> face;
      auto cur = dart;
      while (seen.insert(cur).second) {
        face.push_back(cur.first);
        auto [u, v] = cur;
        int back = direction(v, u);
        for (int k = 1; k <= 4; ++k) {
          Vertex w = neighbor(v, (back - k + 4) % 4);
          if (w >= 0) {
            cur = {v, w};
            break;
          }
        }
      }
      faces.push_back(std::move(face));
    }
  return faces;
}

// Skeleton positions of the wall left after removing s layers, degree-one
// vertices stripped.
std::map<Point, Vertex> region(const Wall& w, int s) {
  const int r = w.height;
  std::map<Point, Vertex> pos;
  for (auto& [v, p] : w.coords)
    if (p.second > s && p.second <= r - s && p.first > 2 * s && p.first <= 2 * r - 2 * s) pos[p] = v;
  for (bool changed = true; changed;) {
    changed = false;
    std::map<Vertex, int> deg;
    for (auto [u, v] : skeleton_edges(pos)) ++deg[u], ++deg[v];
    for (auto it = pos.begin(); it != pos.end();) {
      if (deg[it->second] <= 1) {
        it = pos.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return pos;
}

std::map<Vertex, Point> invert(const std::map<Point, Vertex>& pos) {
  std::map<Vertex, Point> out;
  for (auto& [p, v] : pos) out[v] = p;
  return out;
}

// Longest face of the drawn region, lifted through subdivisions.
std::vector<Vertex> outer_cycle(const Wall& w, const std::map<Point, Vertex>& pos) {
  auto faces = drawn_faces(pos, skeleton_edges(pos), invert(pos));
  auto outer = std::max_element(faces.begin(), faces.end(),
                                [](auto& a, auto& b) { return a.size() < b.size(); });
  std::vector<Vertex> walk = *outer;
  walk.push_back(walk.front());
  std::vector<Vertex> cycle = lift(w, walk);
  cycle.pop_back();
  return cycle;
}

}  // namespace

Vertex Wall::at(int x, int y) const {
  for (auto& [v, p] : coords)
    if (p == Point{x, y}) return v;
  throw InputError("wall has no vertex at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
}

bool Wall::has_position(int x, int y) const {
  for (auto& [v, p] : coords)
    if (p == Point{x, y}) return true;
  return false;
}

std::vector<Vertex> Wall::corners() const {
  const int r = height;
  return {at(1, 1), at(2, r), at(2 * r - 1, 1), at(2 * r, r)};
}

Wall elementary_wall(int r) {
  if (r < 3 || r % 2 == 0) throw InputError("wall height must be odd and at least 3");
  Wall w;
  w.height = r;
  std::map<Point, Vertex> pos;
  Vertex next = 0;
  for (int y = 1; y <= r; ++y)
    for (int x = 1; x <= 2 * r; ++x) {
      if ((x == 1 && y == r) || (x == 2 * r && y == 1)) continue;
      pos[{x, y}] = next;
      w.coords[next] = {x, y};
      ++next;
    }
  std::vector<Vertex> vs(next);
  for (Vertex v = 0; v < next; ++v) vs[v] = v;
  w.graph = OrderedGraph(vs, skeleton_edges(pos));
  return w;
}

Wall subdivide_wall_edge(const Wall& w, Vertex u, Vertex v) {
  if (!w.graph.has_edge(u, v)) throw InputError("subdivide_wall_edge: no such edge");
  Wall out = w;
  Vertex x = w.graph.max_vertex() + 1;
  out.graph = subdivide_edge(w.graph, u, v);
  bool placed = false;
  for (auto& [e, path] : out.subdivisions) {
    std::vector<Vertex> full{e.first};
    full.insert(full.end(), path.begin(), path.end());
    full.push_back(e.second);
    for (std::size_t i = 0; i + 1 < full.size(); ++i)
      if (ordered(full[i], full[i + 1]) == ordered(u, v)) {
        path.insert(path.begin() + static_cast<long>(i), x);
        placed = true;
        break;
      }
    if (placed) break;
  }
  if (!placed) {
    if (!w.coords.count(u) || !w.coords.count(v)) throw InternalError("subdivision bookkeeping lost");
    out.subdivisions[ordered(u, v)] = {x};
  }
  return out;
}

void validate_wall(const Wall& w) {
  const int r = w.height;
  if (r < 3 || r % 2 == 0) throw InputError("wall height must be odd and at least 3");
  std::map<Point, Vertex> pos;
  for (auto& [v, p] : w.coords) {
    if (!w.graph.has_vertex(v)) throw InputError("wall skeleton vertex missing from the graph");
    if (!pos.emplace(p, v).second) throw InputError("two wall vertices share a position");
  }
  Wall ref = elementary_wall(r);
  if (pos.size() != ref.coords.size()) throw InputError("wall skeleton has the wrong size");
  for (auto& [v, p] : ref.coords)
    if (!pos.count(p)) throw InputError("wall skeleton misses a grid position");
  std::vector<Edge> expected;
  std::set<Vertex> seen;
  for (auto& [v, p] : w.coords) seen.insert(v);
  for (auto [a, b] : skeleton_edges(pos)) {
    std::vector<Vertex> walk = lift(w, {a, b});
    for (std::size_t i = 1; i + 1 < walk.size(); ++i)
      if (!seen.insert(walk[i]).second) throw InputError("subdivision vertex used twice");
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) expected.push_back(ordered(walk[i], walk[i + 1]));
  }
  for (auto& [e, path] : w.subdivisions)
    if (!w.coords.count(e.first) || !w.coords.count(e.second))
      throw InputError("subdivision recorded on a non-skeleton edge");
  std::sort(expected.begin(), expected.end());
  if (static_cast<int>(seen.size()) != w.graph.num_vertices() || expected != w.graph.edges())
    throw InputError("wall graph differs from its skeleton and subdivisions");
  for (Vertex v : w.graph.vertices())
    if (w.graph.degree(v) > 3) throw InputError("wall vertex of degree above three");
}

WallStructure wall_structure(const Wall& w) {
  validate_wall(w);
  const int r = w.height;
  WallStructure out;
  for (int i = 1; i <= r; ++i) {
    std::vector<Vertex> walk{w.at(2 * i - 1, 1)};
    for (int y = 1; y < r; ++y) {
      int x = (2 * i - 1) % 2 == y % 2 ? 2 * i - 1 : 2 * i;
      walk.push_back(w.at(x, y + 1));
      if (y + 1 < r) walk.push_back(w.at(x == 2 * i ? 2 * i - 1 : 2 * i, y + 1));
    }
    out.vertical.push_back(lift(w, walk));
  }
  for (int y = 1; y <= r; ++y) {
    std::vector<Vertex> walk;
    for (int x = 1; x <= 2 * r; ++x)
      if (w.has_position(x, y)) walk.push_back(w.at(x, y));
    out.horizontal.push_back(lift(w, walk));
  }
  for (int s = 0; s < (r - 1) / 2; ++s) out.layers.push_back(outer_cycle(w, region(w, s)));
  out.perimeter = out.layers.front();
  auto core = region(w, (r - 3) / 2);
  auto inner_layer = out.layers.back();
  std::set<Vertex> on_layer(inner_layer.begin(), inner_layer.end());
  for (auto& [p, v] : core)
    if (!on_layer.count(v)) out.central.push_back(v);
  std::sort(out.central.begin(), out.central.end());
  return out;
}

std::vector<int> finite_face_lengths(const Wall& w) {
  validate_wall(w);
  auto pos = positions(w);
  auto faces = drawn_faces(pos, skeleton_edges(pos), w.coords);
  std::sort(faces.begin(), faces.end(), [](auto& a, auto& b) { return a.size() > b.size(); });
  std::vector<int> out;
  for (std::size_t i = 1; i < faces.size(); ++i) out.push_back(static_cast<int>(faces[i].size()));
  return out;
}

Wall central_subwall(const Wall& w, int q) {
  validate_wall(w);
  const int r = w.height;
  if (q < 3 || q % 2 == 0 || q > r) throw InputError("central subwall height must be odd in [3, r]");
  const int s = (r - q) / 2;
  auto pos = region(w, s);
  Wall out;
  out.height = q;
  for (auto& [p, v] : pos) {
    int x = p.first - 2 * s;
    int y = p.second - s;
    if (s % 2 == 1) x = 2 * q + 1 - x;
    out.coords[v] = {x, y};
  }
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (auto& [v, p] : out.coords) vs.push_back(v);
  for (auto [a, b] : skeleton_edges(pos)) {
    auto mid = inner(w, a, b);
    if (!mid.empty()) out.subdivisions[ordered(a, b)] = mid;
    std::vector<Vertex> walk = lift(w, {a, b});
    vs.insert(vs.end(), walk.begin() + 1, walk.end() - 1);
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) es.push_back(ordered(walk[i], walk[i + 1]));
  }
  std::sort(vs.begin(), vs.end());
  out.graph = OrderedGraph(vs, es);
  validate_wall(out);
  return out;
}

const std::vector<Vertex>& CanonicalPartition::bag(int i, int j) const {
  if (i < 2 || j < 2 || i > height - 1 || j > height - 1) throw InputError("no such internal bag");
  return internal[(i - 2) * (height - 2) + (j - 2)];
}

CanonicalPartition canonical_partition(const Wall& w) {
  validate_wall(w);
  const int r = w.height;
  CanonicalPartition out;
  out.height = r;
  std::set<Vertex> used;
  for (int i = 2; i <= r - 1; ++i)
    for (int j = 2; j <= r - 1; ++j) {
      Vertex left = w.at(2 * i - 1, j);
      Vertex right = w.at(2 * i, j);
      std::vector<Vertex> bag{left, right};
      auto add = [&](const std::vector<Vertex>& vs) { bag.insert(bag.end(), vs.begin(), vs.end()); };
      add(inner(w, left, right));
      add(inner(w, w.at(2 * i - 2, j), left));
      if (i % 2 == 0) {
        int x = (2 * i - 1) % 2 == j % 2 ? 2 * i - 1 : 2 * i;
        add(inner(w, w.at(x, j), w.at(x, j + 1)));
      } else {
        int x = (2 * i - 1) % 2 == (j - 1) % 2 ? 2 * i - 1 : 2 * i;
        add(inner(w, w.at(x, j - 1), w.at(x, j)));
      }
      std::sort(bag.begin(), bag.end());
      used.insert(bag.begin(), bag.end());
      out.internal.push_back(std::move(bag));
    }
  for (Vertex v : w.graph.vertices())
    if (!used.count(v)) out.external.push_back(v);
  return out;
}

CanonicalPartition enhance_partition(const OrderedGraph& g, const Wall& w,
                                     const CanonicalPartition& q) {
  for (Vertex v : w.graph.vertices())
    if (!g.has_vertex(v)) throw InputError("wall vertex missing from the graph");
  for (auto [u, v] : w.graph.edges())
    if (!g.has_edge(u, v)) throw InputError("wall edge missing from the graph");
  const int internal = static_cast<int>(q.internal.size());
  std::map<Vertex, int> owner;
  for (int t = 0; t < internal; ++t)
    for (Vertex v : q.internal[t]) owner[v] = t;
  for (Vertex v : q.external) owner[v] = internal;
  std::deque<Vertex> queue;
  for (Vertex v : g.vertices())
    if (owner.count(v)) queue.push_back(v);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v))
      if (!owner.count(u)) {
        owner[u] = owner[v];
        queue.push_back(u);
      }
  }
  CanonicalPartition out;
  out.height = q.height;
  out.internal.resize(internal);
  for (Vertex v : g.vertices()) {
    auto it = owner.find(v);
    if (it == owner.end() || it->second == internal) {
      out.external.push_back(v);
    } else {
      out.internal[it->second].push_back(v);
    }
  }
  return out;
}

OrderedGraph quotient_graph(const OrderedGraph& g, const std::vector<std::vector<Vertex>>& bags) {
  std::map<Vertex, int> owner;
  for (int t = 0; t < static_cast<int>(bags.size()); ++t)
    for (Vertex v : bags[t])
      if (!owner.emplace(v, t).second) throw InputError("quotient_graph: bags overlap");
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) {
    auto a = owner.find(u), b = owner.find(v);
    if (a == owner.end() || b == owner.end() || a->second == b->second) continue;
    es.push_back(ordered(a->second, b->second));
  }
  std::vector<Vertex> vs(bags.size());
  for (int t = 0; t < static_cast<int>(bags.size()); ++t) vs[t] = t;
  return OrderedGraph::collapsing(vs, es);
}

ApexGrid apex_grid(int r, int a, bool complete, bool apex_clique) {
  if (r < 2 || a < 0) throw InputError("apex_grid needs r >= 2 and a >= 0");
  std::vector<Edge> es = grid_graph(r, r).edges();
  std::vector<Vertex> vs(r * r + a);
  for (int i = 0; i < r * r + a; ++i) vs[i] = i;
  ApexGrid out;
  for (int i = 0; i < a; ++i) {
    Vertex x = r * r + i;
    out.apexes.push_back(x);
    if (complete)
      for (Vertex v = 0; v < r * r; ++v) es.emplace_back(v, x);
    if (apex_clique)
      for (int j = 0; j < i; ++j) es.emplace_back(r * r + j, x);
  }
  out.graph = OrderedGraph(vs, es);
  return out;
}

ApexWall apex_wall(int r, int a, int d, int noise, std::uint64_t seed) {
  ApexWall out;
  out.wall = elementary_wall(r);
  CanonicalPartition part = canonical_partition(out.wall);
  const int bags = static_cast<int>(part.internal.size());
  if (a < 0 || noise < 0 || d < 1 || d > bags) throw InputError("apex_wall needs 1 <= d <= (r-2)^2");
  std::mt19937_64 rng(seed);
  std::vector<Edge> es = out.wall.graph.edges();
  std::vector<Vertex> vs = out.wall.graph.vertices();
  Vertex next = out.wall.graph.max_vertex() + 1;
  std::vector<int> order(bags);
  std::iota(order.begin(), order.end(), 0);
  for (int i = 0; i < a; ++i, ++next) {
    vs.push_back(next);
    out.apexes.push_back(next);
    std::shuffle(order.begin(), order.end(), rng);
    for (int t = 0; t < d; ++t) {
      const auto& bag = part.internal[order[t]];
      es.emplace_back(bag[std::uniform_int_distribution<std::size_t>(0, bag.size() - 1)(rng)], next);
    }
  }
  std::vector<Vertex> wall_vertices = out.wall.graph.vertices();
  for (int i = 0; i < noise; ++i, ++next) {
    vs.push_back(next);
    int degree = std::uniform_int_distribution<int>(1, std::max(1, std::min(d - 1, 3)))(rng);
    if (d == 1) degree = 0;
    std::shuffle(wall_vertices.begin(), wall_vertices.end(), rng);
    for (int t = 0; t < degree; ++t) es.emplace_back(wall_vertices[t], next);
  }
  out.graph = OrderedGraph(vs, es);
  return out;
}

bool is_fixed_minor(const OrderedGraph& g, std::span<const Vertex> a, const OrderedGraph& h,
                    const MinorGuards& guards) {
  std::vector<std::pair<Vertex, Vertex>> fixed;
  for (Vertex v : a) {
    if (!h.has_vertex(v)) throw InputError("fixed vertex missing from the pattern");
    if (!g.has_vertex(v)) return false;
    fixed.emplace_back(v, v);
  }
  return find_rooted_minor_model(g, h, fixed, guards).has_value();
}

}  // namespace lrep
