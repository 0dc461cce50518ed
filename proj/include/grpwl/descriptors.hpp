#pragma once

#include <cstddef>
#include <string>

#include "grpwl/constructors.hpp"
#include "grpwl/graph.hpp"
#include "grpwl/group.hpp"
#include "grpwl/io.hpp"

namespace grpwl {

// Group descriptors:
//   2^3x4^3, 6, 2x3         Abelian products (a^e = e copies of Z/a)
//   A5, S4, dih6, dic3, Q8  alternating, symmetric, dihedral (order 2m),
//                           dicyclic (order 4m), Q8 = dic2, Q16 = dic4
//   A5x60, S3xS3            direct products of any of the above, left to right
//   sdp:<m>:<p>^<d>:<s1,s2,..>   Z/m acting on (Z/p)^d by diagonal scalars
//   mekler:p<p>:<graph>     Mekler group of a graph descriptor
//   family:<q>:<n>:left|right    members of the Abelian pebble-game family
// Graph descriptors: k<m>, path<m>, cycle<m>, empty<m>, prism<m>,
//   cfi:<graph>[:twist=u-v,u-v,...]
// Throws Error(kParse) on syntax errors; cap errors propagate.
Group build_group(const std::string& desc, std::size_t cap = kDefaultCayleyCap);
Graph build_graph(const std::string& desc);
bool is_graph_descriptor(const std::string& desc);
Structure build_structure(const std::string& desc, std::size_t cap = kDefaultCayleyCap);

}  // namespace grpwl
