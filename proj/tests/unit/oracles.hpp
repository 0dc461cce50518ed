#pragma once

// Slow, obviously-correct reference computations used by the unit tests.
// Nothing here calls into the library beyond reading Cayley tables.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "grpwl/group.hpp"

namespace oracle {

using grpwl::Element;
using grpwl::Group;

inline bool associative(std::size_t n, const std::vector<Element>& t) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return false;
  return true;
}

inline std::uint32_t order_of(const Group& g, Element x) {
  std::uint32_t k = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

inline std::vector<Element> centralizer(const Group& g, Element x) {
  std::vector<Element> out;
  for (Element y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) out.push_back(y);
  return out;
}

inline std::vector<Element> center(const Group& g) {
  std::vector<Element> out;
  for (Element y = 0; y < g.order(); ++y)
    if (oracle::centralizer(g, y).size() == g.order()) out.push_back(y);
  return out;
}

// Smallest set containing gens and closed under multiplication.
inline std::vector<Element> closure(const Group& g, const std::vector<Element>& gens) {
  std::set<Element> s{g.identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> cur(s.begin(), s.end());
    for (Element a : cur)
      for (Element b : gens)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

inline std::size_t conjugacy_class_count(const Group& g) {
  std::vector<int> seen(g.order(), 0);
  std::size_t classes = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++classes;
    for (Element y = 0; y < g.order(); ++y) seen[g.mul(g.mul(g.inv(y), x), y)] = 1;
  }
  return classes;
}

// Number of normal cyclic subgroups of prime order p.
inline std::size_t normal_cyclic_subgroups(const Group& g, std::uint32_t p) {
  std::set<std::vector<Element>> seen;
  std::size_t normal = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (order_of(g, x) != p) continue;
    auto sub = closure(g, {x});
    if (!seen.insert(sub).second) continue;
    std::set<Element> members(sub.begin(), sub.end());
    bool ok = true;
    for (Element y = 0; y < g.order() && ok; ++y)
      ok = members.count(g.mul(g.mul(g.inv(y), x), y)) > 0;
    normal += ok;
  }
  return normal;
}

inline std::vector<std::size_t> order_profile(const Group& g) {
  std::vector<std::size_t> counts(g.order() + 1, 0);
  for (Element x = 0; x < g.order(); ++x) ++counts[order_of(g, x)];
  return counts;
}

inline bool is_homomorphism(const Group& g, const Group& h, const std::vector<Element>& f) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (f[g.mul(a, b)] != h.mul(f[a], f[b])) return false;
  return true;
}

// Greedy generating set, then every image tuple with matching element
// orders, extended along words and checked exhaustively. Small groups only.
inline bool isomorphic(const Group& g, const Group& h) {
  const std::size_t n = g.order();
  if (h.order() != n || order_profile(g) != order_profile(h)) return false;
  std::vector<Element> gens;
  while (closure(g, gens).size() < n) {
    auto cur = closure(g, gens);
    for (Element x = 0; x < n; ++x)
      if (!std::binary_search(cur.begin(), cur.end(), x)) {
        gens.push_back(x);
        break;
      }
  }
  std::vector<Element> img(gens.size());
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == gens.size()) {
      std::vector<Element> f(n, static_cast<Element>(n));
      f[g.identity()] = h.identity();
      std::vector<Element> queue{g.identity()};
      for (std::size_t q = 0; q < queue.size(); ++q)
        for (std::size_t j = 0; j < gens.size(); ++j) {
          Element x = g.mul(queue[q], gens[j]);
          if (f[x] != n) continue;
          f[x] = h.mul(f[queue[q]], img[j]);
          queue.push_back(x);
        }
      std::vector<int> hit(n, 0);
      for (Element y : f) {
        if (hit[y]) return false;
        hit[y] = 1;
      }
      return is_homomorphism(g, h, f);
    }
    for (Element y = 0; y < n; ++y) {
      if (order_of(h, y) != order_of(g, gens[i])) continue;
      img[i] = y;
      if (go(i + 1)) return true;
    }
    return false;
  };
  return go(0);
}

inline std::vector<Element> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// table'[p(a)][p(b)] = p(ab), built without the library.
inline std::vector<Element> relabelled_table(const Group& g, const std::vector<Element>& p) {
  const std::size_t n = g.order();
  std::vector<Element> t(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[p[a] * n + p[b]] = p[g.mul(a, b)];
  return t;
}

}  // namespace oracle
