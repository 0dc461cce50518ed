#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace grpwl {

using Element = std::uint32_t;

// A subset of the elements [0, universe) of some group, stored both as a
// sorted index array and as a membership bitmap.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : member_(universe, 0) {}

  static ElementSet from_bitmap(std::vector<std::uint8_t> bitmap);
  static ElementSet from_elements(std::size_t universe, std::span<const Element> elements);
  static ElementSet full(std::size_t universe);

  bool contains(Element e) const { return e < member_.size() && member_[e] != 0; }
  std::size_t size() const { return sorted_.size(); }
  bool empty() const { return sorted_.empty(); }
  std::size_t universe() const { return member_.size(); }
  const std::vector<Element>& elements() const { return sorted_; }
  const std::vector<std::uint8_t>& bitmap() const { return member_; }

  bool is_subset_of(const ElementSet& other) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.sorted_ == b.sorted_ && a.member_.size() == b.member_.size();
  }

 private:
  std::vector<Element> sorted_;
  std::vector<std::uint8_t> member_;
};

}  // namespace grpwl
