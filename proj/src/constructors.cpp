#include "grpwl/constructors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "grpwl/error.hpp"

namespace grpwl {

namespace {

void check_cap(std::uint64_t order, std::size_t cap, const char* what) {
  if (order > cap)
    throw Error(ErrorCode::kCapExceeded, std::string(what) + " of order " +
                                             std::to_string(order) + " exceeds cap " +
                                             std::to_string(cap));
}

std::uint64_t factorial(std::uint32_t m) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= m; ++i) {
    f *= i;
    if (f > (std::uint64_t{1} << 40)) return f;
  }
  return f;
}

Group permutation_group(std::uint32_t m, bool even_only, std::size_t cap) {
  std::uint64_t order = factorial(m);
  if (even_only && m >= 2) order /= 2;
  check_cap(order, cap, even_only ? "alternating group" : "symmetric group");

  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> p(m);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  do {
    if (even_only) {
      std::size_t inversions = 0;
      for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = i + 1; j < m; ++j) inversions += p[i] > p[j];
      if (inversions % 2) continue;
    }
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  // Perms are in lexicographic order, so binary search finds an index.
  auto index_of = [&](const std::vector<std::uint8_t>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  const std::size_t n = perms.size();
  std::vector<Element> table(n * n);
  std::vector<std::uint8_t> c(m);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      for (std::uint32_t x = 0; x < m; ++x) c[x] = perms[s][perms[t][x]];
      table[s * n + t] = index_of(c);
    }
  return validate_cayley(n, std::move(table));
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t AbelianSpec::order() const {
  std::uint64_t n = 1;
  for (auto m : cyclic_orders) {
    n *= m;
    if (n > (std::uint64_t{1} << 40)) return n;
  }
  return n;
}

Group abelian(const AbelianSpec& spec, std::size_t cap) {
  for (auto m : spec.cyclic_orders)
    if (m < 1) throw Error(ErrorCode::kInvalidArgument, "cyclic order must be positive");
  check_cap(spec.order(), cap, "Abelian group");
  AbelianGroup a(spec.cyclic_orders);
  const std::size_t n = a.order();
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] = a.mul(static_cast<Element>(x), static_cast<Element>(y));
  return validate_cayley(n, std::move(table));
}

Group cyclic(std::uint32_t m) { return abelian(AbelianSpec{{m}}); }

std::pair<AbelianSpec, AbelianSpec> theorem_family_spec(std::uint32_t q, std::uint32_t n) {
  if (q < 1 || n < 2) throw Error(ErrorCode::kInvalidArgument, "family needs q >= 1 and n >= 2");
  AbelianSpec g, h;
  g.cyclic_orders.assign(q * n, 2);
  g.cyclic_orders.insert(g.cyclic_orders.end(), q * n, 4);
  h.cyclic_orders.assign(q * (n - 2), 2);
  h.cyclic_orders.insert(h.cyclic_orders.end(), q * (n + 1), 4);
  return {g, h};
}

std::pair<Group, Group> theorem_family(std::uint32_t q, std::uint32_t n, std::size_t cap) {
  auto [g, h] = theorem_family_spec(q, n);
  return {abelian(g, cap), abelian(h, cap)};
}

std::pair<AbelianGroup, AbelianGroup> theorem_family_implicit(std::uint32_t q, std::uint32_t n) {
  auto [g, h] = theorem_family_spec(q, n);
  return {AbelianGroup(g.cyclic_orders), AbelianGroup(h.cyclic_orders)};
}

Group direct_product(const Group& g, const Group& h, std::size_t cap) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  check_cap(n, cap, "direct product");
  std::vector<Element> table(n * n);
  for (std::size_t g1 = 0; g1 < ng; ++g1)
    for (std::size_t h1 = 0; h1 < nh; ++h1) {
      Element* row = &table[(g1 * nh + h1) * n];
      for (std::size_t g2 = 0; g2 < ng; ++g2) {
        std::size_t base = std::size_t{g.mul(static_cast<Element>(g1), static_cast<Element>(g2))} * nh;
        for (std::size_t h2 = 0; h2 < nh; ++h2)
          row[g2 * nh + h2] =
              static_cast<Element>(base + h.mul(static_cast<Element>(h1), static_cast<Element>(h2)));
      }
    }
  return validate_cayley(n, std::move(table));
}

Group symmetric(std::uint32_t m, std::size_t cap) { return permutation_group(m, false, cap); }
Group alternating(std::uint32_t m, std::size_t cap) { return permutation_group(m, true, cap); }

Group dihedral(std::uint32_t m) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "dihedral needs m >= 1");
  const std::size_t n = 2 * std::size_t{m};
  std::vector<Element> table(n * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t c = 0; c < n; ++c) {
      std::uint32_t i = a % m, j = a / m, k = c % m, l = c / m;
      // r^i s^j r^k s^l = r^{i +- k} s^{j+l}
      std::uint32_t e = j ? (i + m - k) % m : (i + k) % m;
      table[std::size_t{a} * n + c] = e + m * ((j + l) % 2);
    }
  return validate_cayley(n, std::move(table));
}

Group dicyclic(std::uint32_t m) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "dicyclic needs m >= 1");
  const std::uint32_t r = 2 * m;
  const std::size_t n = 2 * std::size_t{r};
  std::vector<Element> table(n * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t c = 0; c < n; ++c) {
      std::uint32_t i = a % r, j = a / r, k = c % r, l = c / r;
      std::uint32_t e = j ? (i + r - k) % r : (i + k) % r;
      std::uint32_t x = j + l;
      if (x == 2) {
        e = (e + m) % r;
        x = 0;
      }
      table[std::size_t{a} * n + c] = e + r * x;
    }
  return validate_cayley(n, std::move(table));
}

void validate_action(const Group& h, const Group& n, const ActionTable& theta) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::kInvalidAction, msg); };
  const std::size_t nh = h.order(), nn = n.order();
  if (theta.perm.size() != nh) fail("action has " + std::to_string(theta.perm.size()) +
                                    " entries, expected " + std::to_string(nh));
  for (std::size_t a = 0; a < nh; ++a) {
    const auto& p = theta.perm[a];
    if (p.size() != nn) fail("theta_" + std::to_string(a) + " has wrong length");
    std::vector<std::uint8_t> hit(nn, 0);
    for (Element x : p) {
      if (x >= nn || hit[x]) fail("theta_" + std::to_string(a) + " is not a permutation");
      hit[x] = 1;
    }
    for (std::size_t x = 0; x < nn; ++x)
      for (std::size_t y = 0; y < nn; ++y)
        if (p[n.mul(static_cast<Element>(x), static_cast<Element>(y))] != n.mul(p[x], p[y]))
          fail("theta_" + std::to_string(a) + " is not a homomorphism at (" + std::to_string(x) +
               "," + std::to_string(y) + ")");
  }
  for (std::size_t x = 0; x < nn; ++x)
    if (theta.perm[h.identity()][x] != x) fail("theta_e is not the identity");
  for (std::size_t a = 0; a < nh; ++a)
    for (std::size_t b = 0; b < nh; ++b) {
      const auto& ab = theta.perm[h.mul(static_cast<Element>(a), static_cast<Element>(b))];
      for (std::size_t x = 0; x < nn; ++x)
        if (ab[x] != theta.perm[a][theta.perm[b][x]])
          fail("theta_{" + std::to_string(a) + "*" + std::to_string(b) + "} != theta_" +
               std::to_string(a) + " o theta_" + std::to_string(b));
    }
}

ActionTable trivial_action(const Group& h, const Group& n) {
  ActionTable t;
  std::vector<Element> id(n.order());
  std::iota(id.begin(), id.end(), Element{0});
  t.perm.assign(h.order(), id);
  return t;
}

Group semidirect(const Group& h, const Group& n, const ActionTable& theta, bool require_coprime,
                 std::size_t cap) {
  const std::size_t nh = h.order(), nn = n.order(), total = nh * nn;
  if (require_coprime && std::gcd(nh, nn) != 1)
    throw Error(ErrorCode::kNotCoprime, "|H| = " + std::to_string(nh) + " and |N| = " +
                                            std::to_string(nn) + " are not coprime");
  check_cap(total, cap, "semidirect product");
  validate_action(h, n, theta);
  std::vector<Element> table(total * total);
  for (std::size_t h1 = 0; h1 < nh; ++h1)
    for (std::size_t n1 = 0; n1 < nn; ++n1) {
      Element* row = &table[(h1 * nn + n1) * total];
      for (std::size_t h2 = 0; h2 < nh; ++h2) {
        Element twisted = theta.perm[h.inv(static_cast<Element>(h2))][n1];
        std::size_t base = std::size_t{h.mul(static_cast<Element>(h1), static_cast<Element>(h2))} * nn;
        for (std::size_t n2 = 0; n2 < nn; ++n2)
          row[h2 * nn + n2] = static_cast<Element>(base + n.mul(twisted, static_cast<Element>(n2)));
      }
    }
  return validate_cayley(total, std::move(table));
}

ScalarExtension scalar_action(std::uint32_t m, std::uint32_t p,
                              const std::vector<std::uint32_t>& scalars) {
  if (!is_prime(p)) throw Error(ErrorCode::kBadPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "cyclic order must be positive");
  if (std::gcd(m, p) != 1)
    throw Error(ErrorCode::kNotCoprime, "gcd(" + std::to_string(m) + "," + std::to_string(p) + ") != 1");
  for (auto s : scalars) {
    std::uint64_t x = s % p;
    if (x == 0) throw Error(ErrorCode::kBadScalarOrder, "scalar 0 is not invertible");
    std::uint64_t y = 1;
    for (std::uint32_t i = 0; i < m; ++i) y = y * x % p;
    if (y != 1)
      throw Error(ErrorCode::kBadScalarOrder, "scalar " + std::to_string(s) +
                                                  " has multiplicative order not dividing " +
                                                  std::to_string(m) + " mod " + std::to_string(p));
  }
  ScalarExtension ext;
  ext.h = cyclic(m);
  AbelianSpec nspec{std::vector<std::uint32_t>(scalars.size(), p)};
  ext.n = abelian(nspec);
  AbelianGroup coords(nspec.cyclic_orders);
  const std::size_t nn = ext.n.order();
  ext.theta.perm.assign(m, std::vector<Element>(nn));
  for (std::uint32_t e = 0; e < m; ++e) {
    std::vector<std::uint64_t> factor(scalars.size());
    for (std::size_t i = 0; i < scalars.size(); ++i) {
      std::uint64_t y = 1;
      for (std::uint32_t t = 0; t < e; ++t) y = y * (scalars[i] % p) % p;
      factor[i] = y;
    }
    for (std::size_t x = 0; x < nn; ++x) {
      auto c = coords.coordinates(static_cast<Element>(x));
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<std::uint32_t>(c[i] * factor[i] % p);
      ext.theta.perm[e][x] = coords.encode(c);
    }
  }
  validate_action(ext.h, ext.n, ext.theta);
  return ext;
}

}  // namespace grpwl
