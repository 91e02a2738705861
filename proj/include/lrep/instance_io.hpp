// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "lrep/oracle.hpp"

namespace lrep {

// Text instance format, one directive per line, '#' starts a comment:
//
//   lrep-instance 1
//   graph <n>                 vertices 0..n-1
//   edge <u> <v>              repeated
//   action <label>            vDel, eDel(2), ...
//   class <name>              built-in class, or
//   obstruction <n> u-v ...   repeated, for a custom class
//   k <budget>
//   annotation                optional block up to `end`
//   s <v> ...
//   h2-edge <u> <v>           edges of H2', named by pattern vertices
//   phi <v> <image|->         one per vertex of S'
//   end
//
// Syntax errors are reported as InputError naming the line.
Instance parse_instance(std::istream& in);
Instance read_instance(const std::string& path);
// Normalised form: sorted edges, one directive per line. Parsing the output
// gives back the same instance.
void write_instance(std::ostream& out, const Instance& inst);
std::string format_instance(const Instance& inst);

// Plain edge list: one "u v" pair per line, '#' comments. Vertex identifiers
// are kept.
OrderedGraph parse_edge_list(std::istream& in);

}  // namespace lrep
