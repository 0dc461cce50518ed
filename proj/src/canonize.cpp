#include <algorithm>
#include <map>

#include "grpwl/error.hpp"
#include "grpwl/wl.hpp"

namespace grpwl {

namespace {

// Advances `t` to the next d-tuple of distinct elements; false at the end.
bool next_distinct(std::vector<Element>& t, std::size_t n) {
  for (;;) {
    std::size_t i = t.size();
    while (i > 0) {
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
      if (i == 0) return false;
    }
    bool distinct = true;
    for (std::size_t a = 0; a < t.size() && distinct; ++a)
      for (std::size_t b = a + 1; b < t.size() && distinct; ++b) distinct = t[a] != t[b];
    if (distinct) return true;
  }
}

std::size_t tuple_rank(const std::vector<Element>& u, std::size_t n) {
  std::size_t r = 0;
  for (Element e : u) r = r * n + e;
  return r;
}

}  // namespace

std::uint64_t certificate_digest(const Certificate& c) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto feed = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 0x100000001b3ull;
    }
  };
  feed(c.order);
  for (Element e : c.table) feed(e);
  return h;
}

Certificate canonize(const Group& g, const CanonizeOptions& options) {
  const std::size_t n = g.order();
  const std::size_t d = options.d;
  if (d < 1 || d > kMaxWlDimension)
    throw Error(ErrorCode::kInvalidArgument, "generator cap d must be 1, 2 or 3");
  // 1-dimensional refinement is too coarse, so tuples are colored with at
  // least k = 2.
  const std::size_t k = std::max<std::size_t>(d, 2);

  Certificate best;
  best.order = n;
  if (n == 1) {
    best.table = {0};
    best.labelling = {0};
    best.tuple.assign(d, g.identity());
    return best;
  }
  if (n < d) throw Error(ErrorCode::kNotGenerated, "fewer elements than the generator cap");

  auto shared = std::make_shared<const Group>(g);
  const auto base_structure = RefinableStructure::group(shared, options.version);
  Coloring base = run_single(base_structure, k, options.mode, std::nullopt, options.threads,
                             options.budget);

  // Candidate generating d-tuples, grouped by the stable color of the
  // k-tuple obtained by repeating the last coordinate.
  std::map<std::uint32_t, std::vector<std::vector<Element>>> classes;
  std::vector<Element> t(d);
  for (std::size_t i = 0; i < d; ++i) t[i] = static_cast<Element>(i);
  do {
    if (generate(g, t).size() != n) continue;
    std::vector<Element> padded = t;
    padded.resize(k, t.back());
    classes[base.color_of[tuple_rank(padded, n)]].push_back(t);
  } while (next_distinct(t, n));

  std::size_t diag_step = 0;
  for (std::size_t i = 0, w = 1; i < k; ++i, w *= n) diag_step += w;

  std::size_t tried = 0;
  bool found = false;
  for (const auto& [color, members] : classes) {
    for (const auto& member : members) {
      ++tried;
      RefinableStructure s = base_structure.individualize(member);
      bool discrete = false;
      std::vector<std::uint32_t> diag(n);
      {
        // Shortcut: if round 0 already separates the diagonal, its key order
        // is the color order and the full tuple coloring is not needed.
        auto keys = diagonal_keys(s, k);
        std::vector<std::size_t> order(n);
        for (std::size_t x = 0; x < n; ++x) order[x] = x;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
        discrete = true;
        for (std::size_t i = 0; i + 1 < n && discrete; ++i)
          discrete = keys[order[i]] != keys[order[i + 1]];
        for (std::size_t i = 0; i < n; ++i) diag[order[i]] = static_cast<std::uint32_t>(i);
      }
      if (!discrete) {
        WlEngine e({&s}, k, options.mode, options.threads, options.budget);
        e.initialize();
        for (;;) {
          const auto& c = e.coloring(0).color_of;
          for (std::size_t x = 0; x < n; ++x) diag[x] = c[x * diag_step];
          std::vector<std::uint32_t> sorted = diag;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
            discrete = true;
            break;
          }
          if (options.rounds && e.round() >= *options.rounds) break;
          if (!e.refine()) break;
        }
      }
      if (!discrete) continue;

      std::vector<std::uint32_t> sorted = diag;
      std::sort(sorted.begin(), sorted.end());
      std::vector<Element> label(n);
      for (std::size_t x = 0; x < n; ++x)
        label[x] = static_cast<Element>(std::lower_bound(sorted.begin(), sorted.end(), diag[x]) -
                                        sorted.begin());
      std::vector<Element> table(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          table[std::size_t{label[a]} * n + label[b]] =
              label[g.mul(static_cast<Element>(a), static_cast<Element>(b))];
      if (!found || table < best.table) {
        best.table = std::move(table);
        best.tuple = member;
        best.labelling = std::move(label);
        found = true;
      }
    }
    if (found) break;
  }
  best.candidates_tried = tried;
  if (!found)
    throw Error(ErrorCode::kNotGenerated,
                "no generating " + std::to_string(d) + "-tuple yields a discrete coloring");
  return best;
}

}  // namespace grpwl
