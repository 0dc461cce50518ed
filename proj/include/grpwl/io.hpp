#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "grpwl/graph.hpp"
#include "grpwl/group.hpp"

namespace grpwl {

// "cayley v1 n=<order>" then n rows of n base-10 indices. Anything else
// (wrong counts, stray tokens, trailing text) is Error(kParse); the table is
// then validated.
Group read_cayley(std::istream& in);
void write_cayley(std::ostream& out, const Group& g);

// "graph v1 n=<vertices> m=<edges>" then m lines "u v"; lines
// "# label <v> <string>" attach labels, other '#' lines are ignored.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

using Structure = std::variant<Group, Graph>;
// Dispatches on the header line.
Structure read_structure(std::istream& in);
Structure read_structure_file(const std::string& path);
std::string read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const std::string& bytes);

std::string to_text(const Group& g);
std::string to_text(const Graph& g);

}  // namespace grpwl
