#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grpwl/constructors.hpp"
#include "grpwl/graph.hpp"
#include "grpwl/group.hpp"

namespace grpwl {

// Normal form x_1^{a_1} ... x_n^{a_n} * prod c_k^{alpha_k}, with c_k = [x_j, x_i]
// for the k-th non-edge (j, i), j < i, in lexicographic order.
struct MeklerElement {
  std::vector<std::uint32_t> gen;
  std::vector<std::uint32_t> comm;

  friend bool operator==(const MeklerElement&, const MeklerElement&) = default;
  friend auto operator<=>(const MeklerElement&, const MeklerElement&) = default;
};

// Class-2 exponent-p group generated by the vertices of a graph, where two
// generators commute exactly when the vertices are adjacent.
class MeklerGroup {
 public:
  // Throws Error(kBadPrime) unless p is an odd prime.
  MeklerGroup(Graph graph, std::uint32_t p);

  const Graph& graph() const { return graph_; }
  std::uint32_t prime() const { return p_; }
  std::size_t num_vertices() const { return graph_.num_vertices(); }
  const std::vector<Edge>& non_edges() const { return non_edges_; }
  // log_p |G|
  std::size_t order_exponent() const { return num_vertices() + non_edges_.size(); }
  // |G|; throws Error(kCapExceeded) if it does not fit in 64 bits.
  std::uint64_t order() const;

  MeklerElement identity() const;
  MeklerElement generator(Vertex v) const;
  MeklerElement commutator_basis(std::size_t k) const;
  // Position of the non-edge (j, i) in non_edges(), or -1 for an edge.
  std::ptrdiff_t non_edge_index(Vertex j, Vertex i) const;

  MeklerElement multiply(const MeklerElement& x, const MeklerElement& y) const;
  MeklerElement inverse(const MeklerElement& x) const;
  MeklerElement power(const MeklerElement& x, std::uint64_t e) const;
  // a^-1 b^-1 a b
  MeklerElement commutator(const MeklerElement& a, const MeklerElement& b) const;
  bool commute(const MeklerElement& x, const MeklerElement& y) const;

  // Mixed radix, generator exponents most significant (vertex 0 first), then
  // commutator exponents in non-edge order. Lexicographic order of normal
  // forms equals index order.
  std::uint64_t index(const MeklerElement& x) const;
  MeklerElement element(std::uint64_t index) const;

  // Full Cayley table in index order. Throws Error(kCapExceeded) above cap.
  Group to_cayley(std::size_t cap = kDefaultCayleyCap) const;

 private:
  Graph graph_;
  std::uint32_t p_;
  std::vector<Edge> non_edges_;
  std::vector<std::ptrdiff_t> non_edge_pos_;
};

std::vector<Vertex> support(const MeklerGroup& m, const MeklerElement& x);
// Generator exponents on S kept, all others and the commutator part zeroed.
MeklerElement sub_word(const MeklerGroup& m, const MeklerElement& x,
                       const std::vector<Vertex>& s);

// Subgroup given by generators.
struct MeklerSubgroup {
  std::vector<MeklerElement> generators;
};

// C(x) = <x_{C_1}> ... <x_{C_s}> <v : v adjacent to all of supp(x)> G', where
// C_i are the components of the complement of the graph induced on supp(x).
MeklerSubgroup centralizer_formula(const MeklerGroup& m, const MeklerElement& x);
// Z(G) = G' x <v : v adjacent to every other vertex>.
MeklerSubgroup center_of(const MeklerGroup& m);

// Sorted indices of all elements of <gens>. Throws Error(kCapExceeded) when
// the closure grows beyond cap.
std::vector<std::uint64_t> closure(const MeklerGroup& m, const std::vector<MeklerElement>& gens,
                                   std::size_t cap = 1u << 22);

// Exhaustive group-axiom check that does not need a Cayley table. The
// product is (a, alpha)(b, beta) = (a + b, alpha + beta + delta(a, b)), so
// associativity reduces to the cocycle identity
//   delta(a, b) + delta(a + b, c) = delta(b, c) + delta(a, b + c)
// over all triples of generator parts (p^{3n} cases), and (0, 0) is the
// identity iff delta vanishes when either argument is 0. Throws
// NotAssociativeError (element indices with zero commutator part) or
// Error(kNoIdentity) on failure.
void verify_axioms_implicit(const MeklerGroup& m);

}  // namespace grpwl
