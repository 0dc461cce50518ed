#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "grpwl/element_set.hpp"

namespace grpwl {

// Default bound on |G| for the socle enumeration.
inline constexpr std::size_t kDefaultSocleCap = 5000;

// A finite group given by its Cayley table. Instances only exist after the
// table has passed validate_cayley, and are immutable afterwards.
class Group {
 public:
  Group() = default;

  std::size_t order() const { return n_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[std::size_t{a} * n_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  std::uint32_t elt_order(Element a) const { return elt_order_[a]; }

  std::span<const Element> table() const { return table_; }
  std::span<const Element> row(Element a) const {
    return std::span<const Element>(table_).subspan(std::size_t{a} * n_, n_);
  }
  std::span<const std::uint32_t> element_orders() const { return elt_order_; }

  bool is_abelian() const;
  // Exponent of the group (lcm of element orders).
  std::uint64_t exponent() const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  friend Group validate_cayley(std::size_t n, std::vector<Element> table);

  std::size_t n_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> elt_order_;
};

// Checks the group axioms on a row-major n*n table and returns the validated
// group. Throws Error(kNotLatinSquare | kNoIdentity | kInvalidArgument) or
// NotAssociativeError with a witness triple.
//
// Associativity is decided exactly with Light's test: a table is associative
// iff (xs)z = x(sz) for all x, z and every s in a generating set, so the cost
// is O(n^2 * |S|) rather than O(n^3).
Group validate_cayley(std::size_t n, std::vector<Element> table);
Group validate_cayley(const std::vector<std::vector<Element>>& rows);

std::uint32_t element_order(const Group& g, Element x);

struct GeneratedSubgroup {
  ElementSet elements;
  // words[i] is a shortest-discovered word (generator positions, read left to
  // right) evaluating to elements.elements()[i]. The identity has the empty word.
  std::vector<std::vector<std::uint32_t>> words;
};

// Closure of `gens` under multiplication, explored breadth-first so that each
// element is reached by a word of minimal length over gens.
GeneratedSubgroup generated_subgroup(const Group& g, std::span<const Element> gens);

// Same closure without the witness words; skips generators already inside
// the running subgroup.
ElementSet generate(const Group& g, std::span<const Element> gens);

bool is_subgroup(const Group& g, const ElementSet& s);
bool is_normal(const Group& g, const ElementSet& s);

ElementSet centralizer(const Group& g, Element x);
ElementSet center(const Group& g);

// Subgroup generated by all commutators a^-1 b^-1 a b of elements of `s`.
// Throws Error(kNotASubgroup) when `s` is not closed.
ElementSet commutator_subgroup(const Group& g, const ElementSet& s);

struct DerivedSeries {
  std::vector<ElementSet> subgroups;
  // Number of steps to reach the trivial group; empty when not solvable.
  std::optional<std::size_t> solvability_class;
};
DerivedSeries derived_series(const Group& g);

std::vector<ElementSet> conjugacy_classes(const Group& g);

// Smallest subgroup containing `s` that is normalised by every element of
// `within` (the whole group when omitted).
ElementSet normal_closure(const Group& g, const ElementSet& s,
                          const ElementSet* within = nullptr);

// Minimal normal subgroups, found as the inclusion-minimal members of
// {ncl(x) : x != e}. Throws Error(kTooLarge) above `cap`.
std::vector<ElementSet> minimal_normal_subgroups(const Group& g,
                                                 std::size_t cap = kDefaultSocleCap);
ElementSet socle(const Group& g, std::size_t cap = kDefaultSocleCap);
// Simple direct factors of the socle. Throws Error(kNotSemisimple) if a
// minimal normal subgroup is Abelian.
std::vector<ElementSet> socle_factors(const Group& g, std::size_t cap = kDefaultSocleCap);

// Relabels the elements by `perm`: table'[perm(a)][perm(b)] = perm(ab).
Group permuted_copy(const Group& g, std::span<const Element> perm);

// Restriction of the table to a subgroup, relabelled by position in s.elements().
Group subgroup_as_group(const Group& g, const ElementSet& s);

}  // namespace grpwl
