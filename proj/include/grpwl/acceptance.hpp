#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "grpwl/group.hpp"

namespace grpwl {

struct NamedGroup {
  std::string name;  // a build_group descriptor
  Group group;
};

// Small test corpus: cyclic, Abelian, dihedral, dicyclic, alternating and
// symmetric groups, a few products and semidirect products, and small
// Mekler groups, all of order <= max_order. Ordered by (order, name).
std::vector<NamedGroup> corpus(std::size_t max_order);

struct AcceptanceOptions {
  unsigned threads = 0;
  std::uint64_t seed = 20240611;
  // Progress lines, if set.
  std::ostream* log = nullptr;
};

struct CriterionResult {
  std::size_t number = 0;
  std::string tag;
  std::string title;
  bool passed = false;
  // Reported quantities, in a fixed order.
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> failures;
  double seconds = 0;
};

// axioms, invariance, pebble, family, mekler, cfi, coprime, simple, canon
const std::vector<std::string>& acceptance_tags();
// Throws Error(kInvalidArgument) for an unknown tag.
CriterionResult run_acceptance(const std::string& tag, const AcceptanceOptions& options = {});

}  // namespace grpwl
