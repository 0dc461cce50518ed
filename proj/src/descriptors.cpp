#include "grpwl/descriptors.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "grpwl/error.hpp"
#include "grpwl/mekler.hpp"

namespace grpwl {

namespace {

[[noreturn]] void bad(const std::string& desc, const std::string& why) {
  throw Error(ErrorCode::kParse, "descriptor '" + desc + "': " + why);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<std::uint32_t> number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::uint32_t need_number(const std::string& s, const std::string& desc) {
  auto v = number(s);
  if (!v) bad(desc, "expected a number, got '" + s + "'");
  return *v;
}

// Suffix number after a fixed prefix, e.g. "dih6" -> 6.
std::optional<std::uint32_t> after(const std::string& tok, const std::string& prefix) {
  if (tok.size() <= prefix.size() || tok.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  return number(tok.substr(prefix.size()));
}

Group named_factor(const std::string& tok, const std::string& desc, std::size_t cap) {
  if (tok == "Q8") return dicyclic(2);
  if (tok == "Q16") return dicyclic(4);
  if (auto m = after(tok, "dih")) return dihedral(*m);
  if (auto m = after(tok, "dic")) return dicyclic(*m);
  if (auto m = after(tok, "A")) return alternating(*m, cap);
  if (auto m = after(tok, "S")) return symmetric(*m, cap);
  bad(desc, "unknown factor '" + tok + "'");
}

Group product_descriptor(const std::string& desc, std::size_t cap) {
  std::optional<Group> acc;
  AbelianSpec pending;
  auto flush = [&]() {
    if (pending.cyclic_orders.empty()) return;
    Group a = abelian(pending, cap);
    acc = acc ? direct_product(*acc, a, cap) : std::move(a);
    pending.cyclic_orders.clear();
  };
  for (const auto& tok : split(desc, 'x')) {
    if (tok.empty()) bad(desc, "empty factor");
    auto caret = tok.find('^');
    std::string base = tok.substr(0, caret);
    std::uint32_t times = 1;
    if (caret != std::string::npos) times = need_number(tok.substr(caret + 1), desc);
    if (times == 0) bad(desc, "exponent must be positive");
    if (auto m = number(base)) {
      if (*m < 1) bad(desc, "cyclic order must be positive");
      for (std::uint32_t i = 0; i < times; ++i) pending.cyclic_orders.push_back(*m);
      continue;
    }
    flush();
    for (std::uint32_t i = 0; i < times; ++i) {
      Group f = named_factor(base, desc, cap);
      acc = acc ? direct_product(*acc, f, cap) : std::move(f);
    }
  }
  flush();
  return std::move(*acc);
}

}  // namespace

bool is_graph_descriptor(const std::string& desc) {
  if (desc.rfind("cfi:", 0) == 0) return true;
  for (const char* p : {"k", "K", "path", "cycle", "empty", "prism"})
    if (after(desc, p)) return true;
  return false;
}

Graph build_graph(const std::string& desc) {
  if (desc.rfind("cfi:", 0) == 0) {
    auto parts = split(desc, ':');
    if (parts.size() < 2 || parts.size() > 3) bad(desc, "expected cfi:<graph>[:twist=u-v,...]");
    Graph base = build_graph(parts[1]);
    std::vector<Edge> twist;
    if (parts.size() == 3) {
      if (parts[2].rfind("twist=", 0) != 0) bad(desc, "expected twist=u-v,...");
      std::string list = parts[2].substr(6);
      if (!list.empty())
        for (const auto& e : split(list, ',')) {
          auto uv = split(e, '-');
          if (uv.size() != 2) bad(desc, "twist edge must look like u-v");
          twist.emplace_back(need_number(uv[0], desc), need_number(uv[1], desc));
        }
    }
    return cfi(base, twist).graph;
  }
  if (auto m = after(desc, "k")) return complete_graph(*m);
  if (auto m = after(desc, "K")) return complete_graph(*m);
  if (auto m = after(desc, "path")) return path_graph(*m);
  if (auto m = after(desc, "cycle")) return cycle_graph(*m);
  if (auto m = after(desc, "empty")) return empty_graph(*m);
  if (auto m = after(desc, "prism")) return prism_graph(*m);
  bad(desc, "unknown graph");
}

Group build_group(const std::string& desc, std::size_t cap) {
  if (desc.empty()) bad(desc, "empty");
  if (desc.rfind("sdp:", 0) == 0) {
    auto parts = split(desc, ':');
    if (parts.size() != 4) bad(desc, "expected sdp:<m>:<p>^<d>:<scalars>");
    std::uint32_t m = need_number(parts[1], desc);
    auto pd = split(parts[2], '^');
    if (pd.size() != 2) bad(desc, "module must look like <p>^<d>");
    std::uint32_t p = need_number(pd[0], desc), d = need_number(pd[1], desc);
    std::vector<std::uint32_t> scalars;
    for (const auto& s : split(parts[3], ',')) scalars.push_back(need_number(s, desc));
    if (scalars.size() != d) bad(desc, "need exactly d scalars");
    auto ext = scalar_action(m, p, scalars);
    return semidirect(ext.h, ext.n, ext.theta, true, cap);
  }
  if (desc.rfind("mekler:", 0) == 0) {
    auto parts = split(desc, ':');
    if (parts.size() != 3 || parts[1].size() < 2 || parts[1][0] != 'p')
      bad(desc, "expected mekler:p<prime>:<graph>");
    std::uint32_t p = need_number(parts[1].substr(1), desc);
    return MeklerGroup(build_graph(parts[2]), p).to_cayley(cap);
  }
  if (desc.rfind("family:", 0) == 0) {
    auto parts = split(desc, ':');
    if (parts.size() != 4 || (parts[3] != "left" && parts[3] != "right"))
      bad(desc, "expected family:<q>:<n>:left|right");
    auto specs = theorem_family_spec(need_number(parts[1], desc), need_number(parts[2], desc));
    return abelian(parts[3] == "left" ? specs.first : specs.second, cap);
  }
  return product_descriptor(desc, cap);
}

Structure build_structure(const std::string& desc, std::size_t cap) {
  if (is_graph_descriptor(desc)) return build_graph(desc);
  return build_group(desc, cap);
}

}  // namespace grpwl
