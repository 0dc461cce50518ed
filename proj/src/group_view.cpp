#include "grpwl/group_view.hpp"

#include <numeric>

#include "grpwl/error.hpp"

namespace grpwl {

std::uint32_t GroupView::elt_order(Element a) const {
  std::uint32_t m = 1;
  for (Element y = a; y != identity(); y = mul(y, a)) ++m;
  return m;
}

bool GroupView::is_square(Element a) const {
  for (std::size_t s = 0; s < order(); ++s)
    if (mul(static_cast<Element>(s), static_cast<Element>(s)) == a) return true;
  return false;
}

std::string CayleyView::describe() const {
  return "cayley(n=" + std::to_string(g_->order()) + ")";
}

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> cyclic_orders)
    : orders_(std::move(cyclic_orders)), weight_(orders_.size()) {
  for (auto m : orders_)
    if (m < 1) throw Error(ErrorCode::kInvalidArgument, "cyclic order must be positive");
  std::uint64_t w = 1;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    weight_[i] = w;
    w *= orders_[i];
    if (w > (std::uint64_t{1} << 32))
      throw Error(ErrorCode::kCapExceeded, "implicit Abelian group larger than 2^32");
  }
  order_ = static_cast<std::size_t>(w);
}

std::vector<std::uint32_t> AbelianGroup::coordinates(Element a) const {
  std::vector<std::uint32_t> c(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    c[i] = a % orders_[i];
    a /= orders_[i];
  }
  return c;
}

Element AbelianGroup::encode(const std::vector<std::uint32_t>& coords) const {
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) x += coords[i] % orders_[i] * weight_[i];
  return static_cast<Element>(x);
}

Element AbelianGroup::mul(Element a, Element b) const {
  std::uint64_t out = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    std::uint32_t m = orders_[i];
    std::uint32_t s = a % m + b % m;
    if (s >= m) s -= m;
    out += s * weight_[i];
    a /= m;
    b /= m;
  }
  return static_cast<Element>(out);
}

Element AbelianGroup::inv(Element a) const {
  std::uint64_t out = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    std::uint32_t m = orders_[i];
    std::uint32_t c = a % m;
    out += (c == 0 ? 0 : m - c) * weight_[i];
    a /= m;
  }
  return static_cast<Element>(out);
}

std::uint32_t AbelianGroup::elt_order(Element a) const {
  std::uint64_t l = 1;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    std::uint32_t m = orders_[i];
    std::uint32_t c = a % m;
    l = std::lcm(l, std::uint64_t{m / std::gcd(m, c)});
    a /= m;
  }
  return static_cast<std::uint32_t>(l);
}

bool AbelianGroup::is_square(Element a) const {
  // In Z/m, c is a double iff gcd(2, m) divides c.
  for (std::size_t i = orders_.size(); i-- > 0;) {
    std::uint32_t m = orders_[i];
    std::uint32_t c = a % m;
    if (m % 2 == 0 && c % 2 != 0) return false;
    a /= m;
  }
  return true;
}

std::string AbelianGroup::describe() const {
  std::string s = "abelian(";
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(orders_[i]);
  }
  return s + ")";
}

}  // namespace grpwl
