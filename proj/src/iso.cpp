#include "grpwl/iso.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "grpwl/constructors.hpp"
#include "grpwl/error.hpp"
#include "grpwl/group_view.hpp"

namespace grpwl {

const char* to_string(IsoMethod method) {
  switch (method) {
    case IsoMethod::kOracle: return "oracle";
    case IsoMethod::kAbelian: return "abelian";
    case IsoMethod::kWlPipeline: return "wl-pipeline";
  }
  return "?";
}

const char* to_string(IsoVerdict verdict) {
  switch (verdict) {
    case IsoVerdict::kIsomorphic: return "isomorphic";
    case IsoVerdict::kNonIsomorphic: return "non-isomorphic";
    case IsoVerdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

bool is_isomorphism(const Group& g, const Group& h, const std::vector<Element>& map) {
  const std::size_t n = g.order();
  if (h.order() != n || map.size() != n) return false;
  std::vector<std::uint8_t> hit(n, 0);
  for (Element x : map) {
    if (x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
  return true;
}

namespace {

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; std::uint64_t{p} * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

// Multiplicities of cyclic p-power factors, read off from the counts of
// elements whose order divides p^j.
std::vector<std::uint32_t> invariants_from_orders(std::size_t n,
                                                  std::span<const std::uint32_t> orders) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p : prime_factors(n)) {
    std::vector<std::uint32_t> logs{0};
    for (std::uint64_t pj = p;; pj *= p) {
      std::uint64_t count = 0;
      for (std::uint32_t o : orders)
        if (pj % o == 0) ++count;
      std::uint32_t lg = 0;
      while (count > 1) {
        count /= p;
        ++lg;
      }
      if (lg == logs.back()) break;
      logs.push_back(lg);
    }
    // logs[j] - logs[j-1] factors have order >= p^j.
    for (std::size_t j = 1; j < logs.size(); ++j) {
      std::uint32_t at_least_j = logs[j] - logs[j - 1];
      std::uint32_t at_least_next = j + 1 < logs.size() ? logs[j + 1] - logs[j] : 0;
      std::uint32_t pj = 1;
      for (std::size_t t = 0; t < j; ++t) pj *= p;
      for (std::uint32_t c = 0; c < at_least_j - at_least_next; ++c) out.push_back(pj);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t abelian_rank_bound(const Group& g) {
  if (!g.is_abelian()) return 1;
  std::map<std::uint32_t, std::size_t> per_prime;
  for (std::uint32_t q : abelian_invariants(g)) {
    for (std::uint32_t p : prime_factors(q)) ++per_prime[p];
  }
  std::size_t best = 1;
  for (auto& [p, c] : per_prime) best = std::max(best, c);
  return best;
}

// Searches images for `gens` (which generate A) inside B, coordinate by
// coordinate, keeping the prefix map extendable to an isomorphism of the
// generated subgroups. Returns the full map on A when the images generate
// all of B.
template <class A, class B>
std::optional<std::vector<Element>> search_images(const A& a, const std::vector<Element>& gens,
                                                  const B& b, std::uint64_t& tried) {
  const std::size_t n = a.order();
  std::vector<Element> img;
  std::optional<std::vector<Element>> found;
  auto dfs = [&](auto&& self, std::size_t i) -> bool {
    if (i == gens.size()) {
      std::unordered_map<Element, Element> m;
      if (!extend_marked_map(a, gens, b, img, m) || m.size() != n) return false;
      std::vector<Element> out(n);
      for (auto& [x, y] : m) out[x] = y;
      found = std::move(out);
      return true;
    }
    const std::uint32_t want = a.elt_order(gens[i]);
    std::span<const Element> prefix(gens.data(), i + 1);
    for (Element y = 0; y < b.order(); ++y) {
      if (b.elt_order(y) != want) continue;
      img.push_back(y);
      ++tried;
      if (marked_equivalent_v2(a, prefix, b, img) && self(self, i + 1)) return true;
      img.pop_back();
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

std::vector<std::uint32_t> sorted_orders(const Group& g) {
  auto o = g.element_orders();
  std::vector<std::uint32_t> v(o.begin(), o.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<std::uint32_t> abelian_invariants(const Group& g) {
  if (!g.is_abelian()) throw Error(ErrorCode::kNotAbelian, "group is not Abelian");
  return invariants_from_orders(g.order(), g.element_orders());
}

std::vector<Element> minimal_generating_tuple(const Group& g, std::uint64_t node_cap) {
  const std::size_t n = g.order();
  if (n == 1) return {};
  std::vector<Element> pool;
  for (Element x = 0; x < n; ++x)
    if (x != g.identity()) pool.push_back(x);
  std::stable_sort(pool.begin(), pool.end(),
                   [&](Element x, Element y) { return g.elt_order(x) > g.elt_order(y); });

  std::vector<Element> greedy;
  {
    ElementSet cur = generate(g, greedy);
    for (Element x : pool) {
      if (cur.contains(x)) continue;
      greedy.push_back(x);
      cur = generate(g, greedy);
      if (cur.size() == n) break;
    }
  }

  for (std::size_t d = abelian_rank_bound(g); d < greedy.size(); ++d) {
    std::uint64_t nodes = 0;
    bool overflow = false;
    std::vector<Element> t;
    auto dfs = [&](auto&& self, std::size_t start, const ElementSet& cur) -> bool {
      if (t.size() == d) return cur.size() == n;
      for (std::size_t i = start; i < pool.size(); ++i) {
        if (cur.contains(pool[i])) continue;
        if (++nodes > node_cap) {
          overflow = true;
          return false;
        }
        t.push_back(pool[i]);
        ElementSet next = generate(g, t);
        if (self(self, i + 1, next)) return true;
        t.pop_back();
        if (overflow) return false;
      }
      return false;
    };
    if (dfs(dfs, 0, generate(g, std::vector<Element>{}))) return t;
    if (overflow) break;
  }
  return greedy;
}

IsoResult oracle_isomorphic(const Group& g, const Group& h, std::size_t cap) {
  IsoResult res;
  res.method = IsoMethod::kOracle;
  res.verdict = IsoVerdict::kNonIsomorphic;
  if (g.order() != h.order()) return res;
  if (g.order() > cap)
    throw Error(ErrorCode::kCapExceeded, "order " + std::to_string(g.order()) +
                                             " exceeds the oracle cap " + std::to_string(cap));
  if (sorted_orders(g) != sorted_orders(h)) return res;
  auto gens = minimal_generating_tuple(g);
  auto map = search_images(g, gens, h, res.tuples_tried);
  if (map) {
    if (!is_isomorphism(g, h, *map))
      throw Error(ErrorCode::kInvalidArgument, "oracle produced a non-isomorphism");
    res.verdict = IsoVerdict::kIsomorphic;
    res.witness = std::move(map);
  }
  return res;
}

IsoResult abelian_isomorphic(const Group& g, const Group& h) {
  if (!g.is_abelian() || !h.is_abelian())
    throw Error(ErrorCode::kNotAbelian, "abelian_isomorphic needs two Abelian groups");
  IsoResult res;
  res.method = IsoMethod::kAbelian;
  res.verdict = IsoVerdict::kNonIsomorphic;
  if (g.order() != h.order() || sorted_orders(g) != sorted_orders(h)) return res;

  // Map the standard basis of the common invariant-factor group into both.
  AbelianGroup model(abelian_invariants(g));
  std::vector<Element> basis;
  {
    const auto& orders = model.cyclic_orders();
    for (std::size_t i = 0; i < orders.size(); ++i) {
      std::vector<std::uint32_t> c(orders.size(), 0);
      c[i] = 1;
      basis.push_back(model.encode(c));
    }
  }
  auto into_g = search_images(model, basis, g, res.tuples_tried);
  auto into_h = search_images(model, basis, h, res.tuples_tried);
  if (!into_g || !into_h)
    throw Error(ErrorCode::kInvalidArgument, "Abelian basis matching failed");
  std::vector<Element> witness(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) witness[(*into_g)[x]] = (*into_h)[x];
  if (!is_isomorphism(g, h, witness))
    throw Error(ErrorCode::kInvalidArgument, "Abelian witness is not an isomorphism");
  res.verdict = IsoVerdict::kIsomorphic;
  res.witness = std::move(witness);
  return res;
}

AbelianModel abelian_model(const Group& g) {
  AbelianModel out{AbelianGroup(abelian_invariants(g)), {}, {}};
  const auto& orders = out.model.cyclic_orders();
  std::vector<Element> basis;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<std::uint32_t> c(orders.size(), 0);
    c[i] = 1;
    basis.push_back(out.model.encode(c));
  }
  std::uint64_t tried = 0;
  auto into = search_images(out.model, basis, g, tried);
  if (!into) throw Error(ErrorCode::kInvalidArgument, "Abelian basis matching failed");
  out.from_model = std::move(*into);
  out.to_model.assign(g.order(), 0);
  for (std::size_t x = 0; x < g.order(); ++x) out.to_model[out.from_model[x]] = static_cast<Element>(x);
  return out;
}

IsoResult wl_pipeline(const Group& g, const Group& h, const WlOptions& options,
                      MarkedVersion version) {
  IsoResult res;
  res.method = IsoMethod::kWlPipeline;
  WlOptions o = options;
  o.criterion = Criterion::kMultiset;
  auto left = RefinableStructure::group(std::make_shared<const Group>(g), version);
  auto right = RefinableStructure::group(std::make_shared<const Group>(h), version);
  WlRun r = run(left, right, o);
  res.rounds_run = r.verdict.rounds_run;
  res.verdict = r.verdict.distinguished ? IsoVerdict::kNonIsomorphic : IsoVerdict::kInconclusive;
  res.wl = std::move(r.verdict);
  return res;
}

}  // namespace grpwl
