// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <exception>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>

#include "lrep/error.hpp"
#include "lrep/walls.hpp"

namespace lrep {

namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;

void add_arc(FlowGraph& net, int from, int to, long cap) {
  auto capacity = boost::get(boost::edge_capacity, net);
  auto reverse = boost::get(boost::edge_reverse, net);
  auto e = boost::add_edge(from, to, net).first;
  auto back = boost::add_edge(to, from, net).first;
  capacity[e] = cap;
  capacity[back] = 0;
  reverse[e] = back;
  reverse[back] = e;
}

}  // namespace

int count_internally_disjoint_paths(const OrderedGraph& g, Vertex s, Vertex t) {
  if (s == t) throw InputError("count_internally_disjoint_paths needs distinct endpoints");
  const int si = g.require_index(s);
  const int ti = g.require_index(t);
  const int n = g.num_vertices();
  // Vertex i becomes in-node 2i and out-node 2i + 1 joined by a unit arc.
  FlowGraph net(2 * n);
  const long inf = n + 1;
  for (int i = 0; i < n; ++i) add_arc(net, 2 * i, 2 * i + 1, i == si || i == ti ? inf : 1);
  int direct = 0;
  for (auto [u, v] : g.edges()) {
    int a = g.index_of(u), b = g.index_of(v);
    if ((a == si && b == ti) || (a == ti && b == si)) {
      direct = 1;
      continue;
    }
    add_arc(net, 2 * a + 1, 2 * b, 1);
    add_arc(net, 2 * b + 1, 2 * a, 1);
  }
  long flow = boost::edmonds_karp_max_flow(net, 2 * si + 1, 2 * ti);
  return static_cast<int>(flow) + direct;
}

std::vector<Vertex> detect_high_flow_vertices(const OrderedGraph& g, const Wall& w, int q,
                                              Execution exec) {
  CanonicalPartition part = canonical_partition(w);
  for (Vertex v : w.graph.vertices())
    if (!g.has_vertex(v)) throw InputError("wall vertex missing from the graph");
  std::vector<std::vector<Vertex>> bags = part.internal;
  const int internal = static_cast<int>(bags.size());
  bags.push_back(part.external);
  std::vector<Vertex> outside;
  for (Vertex v : g.vertices())
    if (!w.graph.has_vertex(v)) {
      outside.push_back(v);
      bags.push_back({v});
    }
  OrderedGraph contracted = quotient_graph(g, bags);
  std::vector<Edge> es = contracted.edges();
  const Vertex all = static_cast<Vertex>(bags.size());
  for (int t = 0; t < internal; ++t) es.emplace_back(t, all);
  std::vector<Vertex> vs(bags.size() + 1);
  for (std::size_t i = 0; i < vs.size(); ++i) vs[i] = static_cast<Vertex>(i);
  OrderedGraph net(vs, es);
  std::vector<char> hit(outside.size(), 0);
  const int base = internal + 1;
  if (exec == Execution::kSerial) {
    for (std::size_t i = 0; i < outside.size(); ++i)
      hit[i] = count_internally_disjoint_paths(net, all, base + static_cast<int>(i)) >= q;
  } else {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < outside.size(); ++i) {
      try {
        hit[i] = count_internally_disjoint_paths(net, all, base + static_cast<int>(i)) >= q;
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < outside.size(); ++i)
    if (hit[i]) out.push_back(outside[i]);
  return out;
}

}  // namespace lrep
