#include "grpwl/marked.hpp"

namespace grpwl {

void MarkedCertifier::certificate(std::span<const Element> u, std::vector<std::uint32_t>& out) {
  out.clear();
  out.push_back(static_cast<std::uint32_t>(u.size()));
  found_.clear();
  found_.push_back(g_.identity());
  label_[g_.identity()] = 0;
  for (std::size_t i = 0; i < found_.size(); ++i) {
    for (Element s : u) {
      Element y = g_.mul(found_[i], s);
      if (label_[y] < 0) {
        label_[y] = static_cast<std::int64_t>(found_.size());
        found_.push_back(y);
      }
      out.push_back(static_cast<std::uint32_t>(label_[y]));
    }
  }
  for (Element e : found_) label_[e] = -1;
}

}  // namespace grpwl
