#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "grpwl/group.hpp"
#include "grpwl/group_view.hpp"

namespace grpwl {

// Largest Cayley table the constructors will build.
inline constexpr std::size_t kDefaultCayleyCap = 20000;

struct AbelianSpec {
  std::vector<std::uint32_t> cyclic_orders;
  std::uint64_t order() const;
};

// Z/m_1 x ... x Z/m_r, element index = mixed radix with the first factor most
// significant.
Group abelian(const AbelianSpec& spec, std::size_t cap = kDefaultCayleyCap);
Group cyclic(std::uint32_t m);

// G = (Z/2)^{qn} x (Z/4)^{qn},  H = (Z/2)^{q(n-2)} x (Z/4)^{q(n+1)}.
std::pair<AbelianSpec, AbelianSpec> theorem_family_spec(std::uint32_t q, std::uint32_t n);
std::pair<Group, Group> theorem_family(std::uint32_t q, std::uint32_t n,
                                       std::size_t cap = kDefaultCayleyCap);
std::pair<AbelianGroup, AbelianGroup> theorem_family_implicit(std::uint32_t q, std::uint32_t n);

// Index of (g, h) is |H| * g + h.
Group direct_product(const Group& g, const Group& h, std::size_t cap = kDefaultCayleyCap);

// Permutations of {0..m-1} in lexicographic order; table[s][t] = s o t with
// (s o t)(x) = s(t(x)).
Group symmetric(std::uint32_t m, std::size_t cap = kDefaultCayleyCap);
// Even permutations, in lexicographic order, same convention.
Group alternating(std::uint32_t m, std::size_t cap = kDefaultCayleyCap);
// Order 2m: index i + m*j stands for r^i s^j.
Group dihedral(std::uint32_t m);
// Order 4m: <a, x | a^{2m}, x^2 = a^m, x a x^-1 = a^-1>, index i + 2m*j for a^i x^j.
Group dicyclic(std::uint32_t m);

// theta as explicit permutations: perm[h][x] = theta_h(x). Required:
// perm[h1 h2] = perm[h1] o perm[h2], perm[e] = id, each perm[h] in Aut(N).
struct ActionTable {
  std::vector<std::vector<Element>> perm;
};

// Throws Error(kInvalidAction) naming the first failing witness.
void validate_action(const Group& h, const Group& n, const ActionTable& theta);

ActionTable trivial_action(const Group& h, const Group& n);

// (h1, n1)(h2, n2) = (h1 h2, theta_{h2^-1}(n1) n2); index |N| * h + n.
Group semidirect(const Group& h, const Group& n, const ActionTable& theta,
                 bool require_coprime = false, std::size_t cap = kDefaultCayleyCap);

// H = cyclic(m) acting on N = abelian(p^d) with the generator (element 1 of
// H) scaling coordinate i by scalars[i].
struct ScalarExtension {
  Group h;
  Group n;
  ActionTable theta;
};
ScalarExtension scalar_action(std::uint32_t m, std::uint32_t p,
                              const std::vector<std::uint32_t>& scalars);

bool is_prime(std::uint64_t p);

}  // namespace grpwl
