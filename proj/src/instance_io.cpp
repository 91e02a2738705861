// SPDX-License-Identifier: Apache-2.0
#include "lrep/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "lrep/error.hpp"

namespace lrep {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

int to_int(const std::string& s, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(line, "expected an integer, got '" + s + "'");
  return value;
}

OrderedGraph parse_obstruction(const std::vector<std::string>& t, int line) {
  if (t.size() < 2) fail(line, "obstruction needs a vertex count");
  int n = to_int(t[1], line);
  if (n < 1) fail(line, "obstruction needs at least one vertex");
  std::vector<Edge> es;
  for (std::size_t i = 2; i < t.size(); ++i) {
    auto dash = t[i].find('-');
    if (dash == std::string::npos) fail(line, "obstruction edge must read u-v");
    es.emplace_back(to_int(t[i].substr(0, dash), line), to_int(t[i].substr(dash + 1), line));
  }
  try {
    return OrderedGraph::on_range(n, es);
  } catch (const InputError& e) {
    fail(line, e.what());
  }
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::string raw;
  int line = 0;
  bool header = false, have_graph = false, have_action = false, have_k = false;
  int n = 0;
  std::vector<Edge> edges;
  std::string class_name;
  std::vector<OrderedGraph> obstructions;
  Instance inst;
  bool in_annotation = false, had_annotation = false;
  std::vector<Vertex> ann_s;
  std::vector<Edge> ann_edges;
  std::vector<std::pair<Vertex, Vertex>> ann_phi;
  while (std::getline(in, raw)) {
    ++line;
    auto t = tokens(raw);
    if (t.empty()) continue;
    const std::string& d = t[0];
    if (!header) {
      if (d != "lrep-instance" || t.size() != 2 || t[1] != "1") fail(line, "expected 'lrep-instance 1'");
      header = true;
      continue;
    }
    if (in_annotation) {
      if (d == "end") {
        in_annotation = false;
      } else if (d == "s") {
        for (std::size_t i = 1; i < t.size(); ++i) ann_s.push_back(to_int(t[i], line));
      } else if (d == "h2-edge") {
        if (t.size() != 3) fail(line, "h2-edge takes two vertices");
        ann_edges.emplace_back(to_int(t[1], line), to_int(t[2], line));
      } else if (d == "phi") {
        if (t.size() != 3) fail(line, "phi takes a vertex and an image");
        ann_phi.emplace_back(to_int(t[1], line), t[2] == "-" ? kDeleted : to_int(t[2], line));
      } else {
        fail(line, "unknown annotation directive '" + d + "'");
      }
      continue;
    }
    if (d == "graph") {
      if (have_graph || t.size() != 2) fail(line, "graph takes one vertex count, once");
      n = to_int(t[1], line);
      if (n < 0) fail(line, "negative vertex count");
      have_graph = true;
    } else if (d == "edge") {
      if (!have_graph) fail(line, "edge before graph");
      if (t.size() != 3) fail(line, "edge takes two vertices");
      int u = to_int(t[1], line), v = to_int(t[2], line);
      if (u < 0 || v < 0 || u >= n || v >= n) fail(line, "edge endpoint out of range");
      if (u == v) fail(line, "loop");
      edges.emplace_back(std::min(u, v), std::max(u, v));
    } else if (d == "action") {
      if (t.size() != 2) fail(line, "action takes one label");
      try {
        inst.action = catalog_from_label(t[1]);
      } catch (const InputError& e) {
        fail(line, e.what());
      }
      have_action = true;
    } else if (d == "class") {
      if (t.size() != 2) fail(line, "class takes one name");
      class_name = t[1];
    } else if (d == "obstruction") {
      obstructions.push_back(parse_obstruction(t, line));
    } else if (d == "k") {
      if (t.size() != 2) fail(line, "k takes one value");
      inst.k = to_int(t[1], line);
      if (inst.k < 0) fail(line, "negative budget");
      have_k = true;
    } else if (d == "annotation") {
      if (had_annotation) fail(line, "second annotation block");
      in_annotation = had_annotation = true;
    } else {
      fail(line, "unknown directive '" + d + "'");
    }
  }
  if (!header) throw InputError("empty instance file");
  if (in_annotation) fail(line, "annotation block not closed");
  if (!have_graph || !have_action || !have_k) throw InputError("instance needs graph, action and k");
  if (obstructions.empty() ? class_name.empty() : !(class_name.empty() || class_name == "custom"))
    throw InputError("instance needs either a built-in class or obstruction lines");
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw InputError("duplicate edge");
  inst.g = OrderedGraph::on_range(n, edges);
  inst.f = obstructions.empty() ? builtin_class(class_name) : ObstructionSet::custom(obstructions);
  if (had_annotation) {
    std::sort(ann_s.begin(), ann_s.end());
    for (Vertex v : ann_s)
      if (!inst.g.has_vertex(v)) throw InputError("annotation vertex outside the graph");
    std::set<Vertex> images;
    for (auto [v, img] : ann_phi)
      if (img != kDeleted) images.insert(img);
    Annotation ann;
    ann.s = ann_s;
    std::sort(ann_phi.begin(), ann_phi.end());
    OrderedGraph h2 = OrderedGraph(std::vector<Vertex>(images.begin(), images.end()), ann_edges);
    ann.t = make_transformation(induced_subgraph(inst.g, ann_s), h2, ann_phi);
    inst.annotation = std::move(ann);
  }
  validate_instance(inst);
  return inst;
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  const OrderedGraph& g = inst.g;
  for (int i = 0; i < g.num_vertices(); ++i)
    if (g.vertex_at(i) != i) throw InputError("instance files need vertices 0..n-1");
  out << "lrep-instance 1\n";
  out << "graph " << g.num_vertices() << "\n";
  for (auto [u, v] : g.edges()) out << "edge " << u << " " << v << "\n";
  out << "action " << inst.action.label() << "\n";
  auto builtin = builtin_class_names();
  if (std::find(builtin.begin(), builtin.end(), inst.f.name()) != builtin.end()) {
    out << "class " << inst.f.name() << "\n";
  } else {
    for (const auto& h : inst.f.graphs()) {
      out << "obstruction " << h.num_vertices();
      for (auto [u, v] : h.edges()) out << " " << h.index_of(u) << "-" << h.index_of(v);
      out << "\n";
    }
  }
  out << "k " << inst.k << "\n";
  if (inst.annotation) {
    const auto& a = *inst.annotation;
    out << "annotation\n";
    out << "s";
    for (Vertex v : a.s) out << " " << v;
    out << "\n";
    for (auto [u, v] : a.t.h2.edges()) out << "h2-edge " << u << " " << v << "\n";
    for (auto [v, img] : a.t.phi) {
      out << "phi " << v << " ";
      if (img == kDeleted) {
        out << "-";
      } else {
        out << img;
      }
      out << "\n";
    }
    out << "end\n";
  }
}

std::string format_instance(const Instance& inst) {
  std::ostringstream ss;
  write_instance(ss, inst);
  return ss.str();
}

OrderedGraph parse_edge_list(std::istream& in) {
  std::string raw;
  int line = 0;
  std::set<Vertex> vs;
  std::set<Edge> es;
  while (std::getline(in, raw)) {
    ++line;
    auto t = tokens(raw);
    if (t.empty()) continue;
    if (t.size() == 1) {
      vs.insert(to_int(t[0], line));
      continue;
    }
    if (t.size() != 2) fail(line, "expected 'u v'");
    int u = to_int(t[0], line), v = to_int(t[1], line);
    if (u == v) fail(line, "loop");
    vs.insert(u);
    vs.insert(v);
    es.emplace(std::min(u, v), std::max(u, v));
  }
  std::vector<Edge> edge_list(es.begin(), es.end());
  return OrderedGraph(std::vector<Vertex>(vs.begin(), vs.end()), edge_list);
}

}  // namespace lrep
