#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "grpwl/group.hpp"
#include "grpwl/group_view.hpp"
#include "grpwl/marked.hpp"
#include "grpwl/wl.hpp"

namespace grpwl {

inline constexpr std::size_t kDefaultOracleCap = 400;

enum class IsoMethod { kOracle, kAbelian, kWlPipeline };
enum class IsoVerdict { kIsomorphic, kNonIsomorphic, kInconclusive };

const char* to_string(IsoMethod method);
const char* to_string(IsoVerdict verdict);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::kInconclusive;
  IsoMethod method = IsoMethod::kOracle;
  // witness[g] = image of g in H; only for kIsomorphic.
  std::optional<std::vector<Element>> witness;
  std::uint64_t tuples_tried = 0;
  std::size_t rounds_run = 0;
  // Only for the WL pipeline.
  std::optional<Verdict> wl;

  bool isomorphic() const { return verdict == IsoVerdict::kIsomorphic; }
};

// Exhaustive check that `map` is a bijective homomorphism G -> H.
bool is_isomorphism(const Group& g, const Group& h, const std::vector<Element>& map);

// Generating tuple of minimal length; candidates are tried in descending
// element order. Falls back to an irredundant greedy tuple when the search at
// some length visits more than `node_cap` tuples.
std::vector<Element> minimal_generating_tuple(const Group& g, std::uint64_t node_cap = 2'000'000);

// Generator-enumerator: fixes a minimal generating tuple of G and searches
// image tuples in H, filtering each coordinate by element order and by
// marked (Version II) equivalence of the prefix. Throws Error(kCapExceeded)
// above `cap`.
IsoResult oracle_isomorphic(const Group& g, const Group& h, std::size_t cap = kDefaultOracleCap);

// Element-order counts decide isomorphism of Abelian groups; the witness maps
// a basis of cyclic factors onto a matching basis. Throws Error(kNotAbelian).
IsoResult abelian_isomorphic(const Group& g, const Group& h);

// Cyclic factor orders (prime powers, ascending) of an Abelian group.
std::vector<std::uint32_t> abelian_invariants(const Group& g);

// Implicit model of an Abelian group on its cyclic factors, with the
// isomorphism to_model[g] from the table labels. Throws Error(kNotAbelian).
struct AbelianModel {
  AbelianGroup model;
  std::vector<Element> to_model;
  std::vector<Element> from_model;
};
AbelianModel abelian_model(const Group& g);

// One-sided: kNonIsomorphic when the multiset criterion separates the
// colorings, kInconclusive otherwise. Ignores options.criterion.
IsoResult wl_pipeline(const Group& g, const Group& h, const WlOptions& options,
                      MarkedVersion version = MarkedVersion::kI);

}  // namespace grpwl
