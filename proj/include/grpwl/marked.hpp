#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "grpwl/element_set.hpp"
#include "grpwl/group.hpp"

namespace grpwl {

enum class MarkedVersion { kI, kII };

template <class G>
concept GroupArithmetic = requires(const G& g, Element a) {
  { g.order() } -> std::convertible_to<std::size_t>;
  { g.identity() } -> std::convertible_to<Element>;
  { g.mul(a, a) } -> std::convertible_to<Element>;
};

// Version I: same equality pattern and u_i u_j = u_l <=> v_i v_j = v_l.
template <GroupArithmetic A, GroupArithmetic B>
bool marked_equivalent_v1(const A& g, std::span<const Element> u, const B& h,
                          std::span<const Element> v) {
  if (u.size() != v.size()) return false;
  const std::size_t k = u.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if ((u[i] == u[j]) != (v[i] == v[j])) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Element gu = g.mul(u[i], u[j]);
      Element hv = h.mul(v[i], v[j]);
      for (std::size_t l = 0; l < k; ++l)
        if ((gu == u[l]) != (hv == v[l])) return false;
    }
  return true;
}

// Version II: u_i -> v_i extends to an isomorphism <u> -> <v>. Explored as a
// joint breadth-first closure from the identities; a bijection that commutes
// with right multiplication by every generator is a homomorphism, so the
// first inconsistency (either direction) refutes and full closure proves.
template <GroupArithmetic A, GroupArithmetic B>
bool marked_equivalent_v2(const A& g, std::span<const Element> u, const B& h,
                          std::span<const Element> v) {
  if (u.size() != v.size()) return false;
  std::unordered_map<Element, Element> fwd, bwd;
  std::vector<std::pair<Element, Element>> queue{{g.identity(), h.identity()}};
  fwd.emplace(g.identity(), h.identity());
  bwd.emplace(h.identity(), g.identity());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [x, y] = queue[i];
    for (std::size_t j = 0; j < u.size(); ++j) {
      Element xs = g.mul(x, u[j]);
      Element ys = h.mul(y, v[j]);
      auto f = fwd.find(xs);
      auto b = bwd.find(ys);
      if (f != fwd.end() || b != bwd.end()) {
        if (f == fwd.end() || b == bwd.end() || f->second != ys || b->second != xs) return false;
        continue;
      }
      fwd.emplace(xs, ys);
      bwd.emplace(ys, xs);
      queue.emplace_back(xs, ys);
    }
  }
  return true;
}

template <GroupArithmetic A, GroupArithmetic B>
bool marked_equivalent(const A& g, std::span<const Element> u, const B& h,
                       std::span<const Element> v, MarkedVersion version) {
  return version == MarkedVersion::kI ? marked_equivalent_v1(g, u, h, v)
                                      : marked_equivalent_v2(g, u, h, v);
}

// Same joint closure, returning the element map <u> -> <v> when it exists.
template <GroupArithmetic A, GroupArithmetic B>
bool extend_marked_map(const A& g, std::span<const Element> u, const B& h,
                       std::span<const Element> v, std::unordered_map<Element, Element>& out) {
  out.clear();
  std::unordered_map<Element, Element> bwd;
  std::vector<std::pair<Element, Element>> queue{{g.identity(), h.identity()}};
  out.emplace(g.identity(), h.identity());
  bwd.emplace(h.identity(), g.identity());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [x, y] = queue[i];
    for (std::size_t j = 0; j < u.size(); ++j) {
      Element xs = g.mul(x, u[j]);
      Element ys = h.mul(y, v[j]);
      auto f = out.find(xs);
      auto b = bwd.find(ys);
      if (f != out.end() || b != bwd.end()) {
        if (f == out.end() || b == bwd.end() || f->second != ys || b->second != xs) return false;
        continue;
      }
      out.emplace(xs, ys);
      bwd.emplace(ys, xs);
      queue.emplace_back(xs, ys);
    }
  }
  return true;
}

// Canonical description of the marked subgroup <u>: elements are numbered in
// breadth-first discovery order from the identity using right multiplication
// by u_1..u_k, and the certificate lists, for each numbered element, the
// numbers of its k right products. Two tuples have equal certificates iff
// they are Version II marked equivalent.
class MarkedCertifier {
 public:
  explicit MarkedCertifier(const Group& g) : g_(g), label_(g.order(), -1) {}

  // Appends the certificate of `u` to `out` (cleared first).
  void certificate(std::span<const Element> u, std::vector<std::uint32_t>& out);

 private:
  const Group& g_;
  std::vector<std::int64_t> label_;
  std::vector<Element> found_;
};

}  // namespace grpwl
