#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "grpwl/element_set.hpp"
#include "grpwl/group.hpp"

namespace grpwl {

// Arithmetic-only view of a finite group. Used where the group may be too
// large for a Cayley table (pebble games on the Abelian family).
class GroupView {
 public:
  virtual ~GroupView() = default;
  virtual std::size_t order() const = 0;
  virtual Element identity() const = 0;
  virtual Element mul(Element a, Element b) const = 0;
  virtual Element inv(Element a) const = 0;
  virtual std::uint32_t elt_order(Element a) const;
  // True iff a = s*s for some s.
  virtual bool is_square(Element a) const;
  virtual std::string describe() const = 0;
};

class CayleyView final : public GroupView {
 public:
  explicit CayleyView(std::shared_ptr<const Group> g) : g_(std::move(g)) {}

  std::size_t order() const override { return g_->order(); }
  Element identity() const override { return g_->identity(); }
  Element mul(Element a, Element b) const override { return g_->mul(a, b); }
  Element inv(Element a) const override { return g_->inv(a); }
  std::uint32_t elt_order(Element a) const override { return g_->elt_order(a); }
  std::string describe() const override;

  const Group& group() const { return *g_; }
  std::shared_ptr<const Group> shared() const { return g_; }

 private:
  std::shared_ptr<const Group> g_;
};

// Direct product of cyclic groups Z/m_1 x ... x Z/m_r with implicit
// arithmetic. Element index is the mixed-radix encoding with the first
// factor most significant, matching the explicit `abelian` constructor.
class AbelianGroup final : public GroupView {
 public:
  explicit AbelianGroup(std::vector<std::uint32_t> cyclic_orders);

  std::size_t order() const override { return order_; }
  Element identity() const override { return 0; }
  Element mul(Element a, Element b) const override;
  Element inv(Element a) const override;
  std::uint32_t elt_order(Element a) const override;
  bool is_square(Element a) const override;
  std::string describe() const override;

  const std::vector<std::uint32_t>& cyclic_orders() const { return orders_; }
  std::vector<std::uint32_t> coordinates(Element a) const;
  Element encode(const std::vector<std::uint32_t>& coords) const;

 private:
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint64_t> weight_;
  std::size_t order_ = 1;
};

}  // namespace grpwl
