#include "grpwl/wl.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "grpwl/error.hpp"
#include "grpwl/parallel.hpp"

namespace grpwl {

const char* to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::kGroupV1: return "group-v1";
    case StructureKind::kGroupV2: return "group-v2";
    case StructureKind::kGraph: return "graph";
  }
  return "?";
}

const char* to_string(WlMode mode) {
  return mode == WlMode::kCounting ? "counting" : "countfree";
}

const char* to_string(Criterion criterion) {
  return criterion == Criterion::kSet ? "set" : "multiset";
}

// ---- structures ---------------------------------------------------------------

RefinableStructure RefinableStructure::group(std::shared_ptr<const Group> g,
                                             MarkedVersion version) {
  RefinableStructure s;
  s.kind_ = version == MarkedVersion::kI ? StructureKind::kGroupV1 : StructureKind::kGroupV2;
  s.group_ = std::move(g);
  return s;
}

RefinableStructure RefinableStructure::graph(std::shared_ptr<const Graph> g) {
  RefinableStructure s;
  s.kind_ = StructureKind::kGraph;
  s.graph_ = std::move(g);
  return s;
}

std::size_t RefinableStructure::domain_size() const {
  return group_ ? group_->order() : graph_->num_vertices();
}

RefinableStructure RefinableStructure::individualize(std::span<const Element> tuple) const {
  RefinableStructure s = *this;
  const std::size_t n = domain_size();
  for (Element e : tuple) {
    if (e >= n) throw Error(ErrorCode::kInvalidArgument, "individualized element out of range");
    if (s.individualized_.size() >= kMaxIndividualized)
      throw Error(ErrorCode::kInvalidArgument, "too many individualized elements");
    s.individualized_.push_back(e);
  }
  return s;
}

// ---- colorings ------------------------------------------------------------------

std::size_t Coloring::num_classes() const {
  std::size_t c = 0;
  for (auto s : class_sizes) c += s != 0;
  return c;
}

std::vector<std::uint32_t> partition_labels(std::span<const std::uint32_t> colors) {
  std::uint32_t max = 0;
  for (auto c : colors) max = std::max(max, c);
  std::vector<std::uint32_t> first(colors.empty() ? 0 : std::size_t{max} + 1, UINT32_MAX);
  std::vector<std::uint32_t> out(colors.size());
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    auto& f = first[colors[i]];
    if (f == UINT32_MAX) f = next++;
    out[i] = f;
  }
  return out;
}

std::uint64_t partition_digest(std::span<const std::uint32_t> colors) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto label : partition_labels(colors))
    for (int b = 0; b < 4; ++b) {
      h ^= (label >> (8 * b)) & 0xff;
      h *= 0x100000001b3ull;
    }
  return h;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdull;
}

// Exact-key intern table for variable-length uint64 keys. Only used inside
// one worker; ids are local and later remapped to global ranks.
class KeyTable {
 public:
  KeyTable() : slots_(1024, UINT32_MAX) { offsets_.push_back(0); }

  std::uint32_t insert(const std::uint64_t* key, std::size_t len) {
    std::uint64_t h = len;
    for (std::size_t i = 0; i < len; ++i) h = mix(h, key[i]);
    std::size_t mask = slots_.size() - 1;
    for (std::size_t pos = h & mask;; pos = (pos + 1) & mask) {
      std::uint32_t id = slots_[pos];
      if (id == UINT32_MAX) {
        id = static_cast<std::uint32_t>(hashes_.size());
        slots_[pos] = id;
        hashes_.push_back(h);
        arena_.insert(arena_.end(), key, key + len);
        offsets_.push_back(arena_.size());
        if (2 * hashes_.size() > slots_.size()) grow();
        return id;
      }
      if (hashes_[id] == h && offsets_[id + 1] - offsets_[id] == len &&
          std::memcmp(&arena_[offsets_[id]], key, len * sizeof(std::uint64_t)) == 0)
        return id;
    }
  }

  std::size_t size() const { return hashes_.size(); }
  std::span<const std::uint64_t> key(std::uint32_t id) const {
    return {arena_.data() + offsets_[id], offsets_[id + 1] - offsets_[id]};
  }

 private:
  void grow() {
    std::vector<std::uint32_t> slots(slots_.size() * 2, UINT32_MAX);
    std::size_t mask = slots.size() - 1;
    for (std::uint32_t id = 0; id < hashes_.size(); ++id) {
      std::size_t pos = hashes_[id] & mask;
      while (slots[pos] != UINT32_MAX) pos = (pos + 1) & mask;
      slots[pos] = id;
    }
    slots_ = std::move(slots);
  }

  std::vector<std::uint32_t> slots_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint64_t> arena_;
  std::vector<std::size_t> offsets_;
};

// Global ranks for the union of several tables' keys (lexicographic order).
std::vector<std::vector<std::uint32_t>> rank_keys(const std::vector<KeyTable>& tables,
                                                  std::size_t& num_ids) {
  struct Ref {
    std::span<const std::uint64_t> key;
    std::uint32_t table;
    std::uint32_t local;
  };
  std::vector<Ref> refs;
  for (std::uint32_t t = 0; t < tables.size(); ++t)
    for (std::uint32_t i = 0; i < tables[t].size(); ++i) refs.push_back({tables[t].key(i), t, i});
  std::sort(refs.begin(), refs.end(), [](const Ref& a, const Ref& b) {
    return std::lexicographical_compare(a.key.begin(), a.key.end(), b.key.begin(), b.key.end());
  });
  std::vector<std::vector<std::uint32_t>> map(tables.size());
  for (std::size_t t = 0; t < tables.size(); ++t) map[t].resize(tables[t].size());
  std::uint32_t id = 0;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (i > 0 && !std::equal(refs[i].key.begin(), refs[i].key.end(), refs[i - 1].key.begin(),
                             refs[i - 1].key.end()))
      ++id;
    map[refs[i].table][refs[i].local] = id;
  }
  num_ids = refs.empty() ? 0 : std::size_t{id} + 1;
  return map;
}

std::uint64_t checked_power(std::size_t n, std::size_t k, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= n;
    if (total > budget)
      throw Error(ErrorCode::kBudgetExceeded, std::to_string(n) + "^" + std::to_string(k) +
                                                  " tuples exceed the budget of " +
                                                  std::to_string(budget));
  }
  return total;
}

// Initial key of one tuple, appended to `key` (cleared first).
void initial_key(const RefinableStructure& s, const Element* u, std::size_t k,
                 std::vector<std::uint64_t>& key, MarkedCertifier* certifier,
                 std::vector<std::uint32_t>& cert) {
  // Individualized elements act as constants appended to every tuple.
  const auto& consts = s.individualized();
  Element ext[kMaxWlDimension + kMaxIndividualized];
  std::copy(u, u + k, ext);
  std::copy(consts.begin(), consts.end(), ext + k);
  const std::size_t m = k + consts.size();
  key.clear();
  auto set_bit = [&](std::size_t b) {
    if (key.size() <= b / 64) key.resize(b / 64 + 1, 0);
    key[b / 64] |= std::uint64_t{1} << (b % 64);
  };
  switch (s.kind()) {
    case StructureKind::kGroupV1: {
      const Group& g = *s.group_ptr();
      key.assign((m * m + m * m * m + 63) / 64, 0);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (ext[i] == ext[j]) set_bit(i * m + j);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          Element p = g.mul(ext[i], ext[j]);
          for (std::size_t l = 0; l < m; ++l)
            if (p == ext[l]) set_bit(m * m + (i * m + j) * m + l);
        }
      break;
    }
    case StructureKind::kGraph: {
      const Graph& g = *s.graph_ptr();
      key.assign((2 * m * m + 63) / 64, 0);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          if (ext[i] == ext[j]) set_bit(i * m + j);
          else if (g.adjacent(ext[i], ext[j])) set_bit(m * m + i * m + j);
        }
      break;
    }
    case StructureKind::kGroupV2: {
      certifier->certificate(std::span<const Element>(ext, m), cert);
      key.assign(cert.begin(), cert.end());
      break;
    }
  }
}

}  // namespace

// ---- engine ----------------------------------------------------------------------

WlEngine::WlEngine(std::vector<const RefinableStructure*> structures, std::size_t k, WlMode mode,
                   unsigned threads, std::uint64_t budget)
    : structures_(std::move(structures)), k_(k), mode_(mode), threads_(threads), budget_(budget) {
  if (k < 1 || k > kMaxWlDimension)
    throw Error(ErrorCode::kInvalidArgument, "WL dimension must be 1, 2 or 3");
  if (structures_.empty()) throw Error(ErrorCode::kInvalidArgument, "no structures");
  for (auto* s : structures_)
    if (s->kind() != structures_[0]->kind())
      throw Error(ErrorCode::kInvalidArgument, "structures of different kinds");
  if (threads_ == 0) threads_ = default_threads();
}

void WlEngine::initialize() {
  std::vector<std::vector<std::uint32_t>> colors(structures_.size());
  std::vector<KeyTable> tables;
  std::vector<std::size_t> table_base(structures_.size());
  std::vector<std::uint64_t> totals(structures_.size());
  for (std::size_t si = 0; si < structures_.size(); ++si)
    totals[si] = checked_power(structures_[si]->domain_size(), k_, budget_);

  for (std::size_t si = 0; si < structures_.size(); ++si) {
    const RefinableStructure& s = *structures_[si];
    const std::size_t n = s.domain_size();
    const std::uint64_t total = totals[si];
    colors[si].resize(total);
    const std::size_t workers = chunk_count(total, threads_);
    table_base[si] = tables.size();
    tables.resize(tables.size() + workers);
    parallel_chunks(total, threads_, [&](std::size_t w, std::size_t begin, std::size_t end) {
      KeyTable& table = tables[table_base[si] + w];
      std::vector<std::uint64_t> key;
      std::vector<std::uint32_t> cert;
      std::optional<MarkedCertifier> certifier;
      if (s.kind() == StructureKind::kGroupV2) certifier.emplace(*s.group_ptr());
      Element u[kMaxWlDimension];
      for (std::size_t t = begin; t < end; ++t) {
        std::size_t r = t;
        for (std::size_t i = k_; i-- > 0;) {
          u[i] = static_cast<Element>(r % n);
          r /= n;
        }
        initial_key(s, u, k_, key, certifier ? &*certifier : nullptr, cert);
        colors[si][t] = table.insert(key.data(), key.size());
      }
    });
  }

  std::size_t num_ids = 0;
  auto map = rank_keys(tables, num_ids);
  for (std::size_t si = 0; si < structures_.size(); ++si)
    parallel_chunks(totals[si], threads_, [&](std::size_t w, std::size_t begin, std::size_t end) {
      const auto& m = map[table_base[si] + w];
      for (std::size_t t = begin; t < end; ++t) colors[si][t] = m[colors[si][t]];
    });

  round_ = 0;
  colorings_.assign(structures_.size(), Coloring{});
  joint_labels_.clear();
  finish_round(std::move(colors), num_ids);
}

void WlEngine::load(std::vector<Coloring> colorings) {
  if (colorings.size() != structures_.size())
    throw Error(ErrorCode::kInvalidArgument, "one coloring per structure required");
  for (std::size_t si = 0; si < colorings.size(); ++si)
    if (colorings[si].k != k_ || colorings[si].n != structures_[si]->domain_size())
      throw Error(ErrorCode::kInvalidArgument, "coloring does not match structure");
  colorings_ = std::move(colorings);
  round_ = colorings_[0].round;
  num_colors_ = colorings_[0].num_colors;
  std::vector<std::uint32_t> joint;
  for (const auto& c : colorings_) joint.insert(joint.end(), c.color_of.begin(), c.color_of.end());
  joint_labels_ = partition_labels(joint);
}

void WlEngine::finish_round(std::vector<std::vector<std::uint32_t>> colors,
                            std::size_t num_colors) {
  num_colors_ = num_colors;
  for (std::size_t si = 0; si < structures_.size(); ++si) {
    Coloring& c = colorings_[si];
    c.k = k_;
    c.n = structures_[si]->domain_size();
    c.round = round_;
    c.color_of = std::move(colors[si]);
    c.num_colors = num_colors;
    c.class_sizes.assign(num_colors, 0);
    for (auto id : c.color_of) ++c.class_sizes[id];
    c.history.push_back({c.num_classes(), partition_digest(c.color_of)});
  }
  std::vector<std::uint32_t> joint;
  for (const auto& c : colorings_) joint.insert(joint.end(), c.color_of.begin(), c.color_of.end());
  joint_labels_ = partition_labels(joint);
}

bool WlEngine::refine() {
  if (colorings_.empty() || colorings_[0].color_of.empty())
    throw Error(ErrorCode::kInvalidArgument, "refine before initialize");
  unsigned bits = std::max(1u, static_cast<unsigned>(std::bit_width(num_colors_ - 1)));
  if (bits * k_ > 64)
    throw Error(ErrorCode::kBudgetExceeded, "too many colors to pack a " + std::to_string(k_) +
                                                "-vector into 64 bits");

  std::vector<std::vector<std::uint32_t>> colors(structures_.size());
  std::vector<KeyTable> tables;
  std::vector<std::size_t> table_base(structures_.size());

  for (std::size_t si = 0; si < structures_.size(); ++si) {
    const std::size_t n = structures_[si]->domain_size();
    const std::vector<std::uint32_t>& old = colorings_[si].color_of;
    const std::size_t total = old.size();
    colors[si].resize(total);
    std::size_t weight[kMaxWlDimension];
    for (std::size_t i = k_, w = 1; i-- > 0; w *= n) weight[i] = w;
    const std::size_t workers = chunk_count(total, threads_);
    table_base[si] = tables.size();
    tables.resize(tables.size() + workers);
    parallel_chunks(total, threads_, [&](std::size_t w, std::size_t begin, std::size_t end) {
      KeyTable& table = tables[table_base[si] + w];
      std::vector<std::uint64_t> words(n), sig;
      sig.reserve(2 * n + 1);
      std::size_t base[kMaxWlDimension];
      for (std::size_t t = begin; t < end; ++t) {
        for (std::size_t i = 0; i < k_; ++i) base[i] = t - (t / weight[i]) % n * weight[i];
        for (std::size_t x = 0; x < n; ++x) {
          std::uint64_t word = 0;
          for (std::size_t i = 0; i < k_; ++i) word = (word << bits) | old[base[i] + x * weight[i]];
          words[x] = word;
        }
        std::sort(words.begin(), words.end());
        sig.clear();
        sig.push_back(old[t]);
        if (mode_ == WlMode::kCounting) {
          for (std::size_t x = 0; x < n;) {
            std::size_t y = x;
            while (y < n && words[y] == words[x]) ++y;
            sig.push_back(words[x]);
            sig.push_back(y - x);
            x = y;
          }
        } else {
          for (std::size_t x = 0; x < n; ++x)
            if (x == 0 || words[x] != words[x - 1]) sig.push_back(words[x]);
        }
        colors[si][t] = table.insert(sig.data(), sig.size());
      }
    });
  }

  std::size_t num_ids = 0;
  auto map = rank_keys(tables, num_ids);
  for (std::size_t si = 0; si < structures_.size(); ++si)
    parallel_chunks(colors[si].size(), threads_,
                    [&](std::size_t w, std::size_t begin, std::size_t end) {
                      const auto& m = map[table_base[si] + w];
                      for (std::size_t t = begin; t < end; ++t) colors[si][t] = m[colors[si][t]];
                    });

  auto previous = std::move(joint_labels_);
  ++round_;
  finish_round(std::move(colors), num_ids);
  return joint_labels_ != previous;
}

// ---- wrappers -------------------------------------------------------------------

std::vector<std::vector<std::uint64_t>> diagonal_keys(const RefinableStructure& s, std::size_t k) {
  if (k < 1 || k > kMaxWlDimension)
    throw Error(ErrorCode::kInvalidArgument, "WL dimension must be 1, 2 or 3");
  std::optional<MarkedCertifier> certifier;
  if (s.kind() == StructureKind::kGroupV2) certifier.emplace(*s.group_ptr());
  std::vector<std::vector<std::uint64_t>> out(s.domain_size());
  std::vector<std::uint32_t> cert;
  Element u[kMaxWlDimension];
  for (std::size_t x = 0; x < out.size(); ++x) {
    std::fill(u, u + k, static_cast<Element>(x));
    initial_key(s, u, k, out[x], certifier ? &*certifier : nullptr, cert);
  }
  return out;
}

Coloring initial_coloring(const RefinableStructure& s, std::size_t k, unsigned threads,
                          std::uint64_t budget) {
  WlEngine e({&s}, k, WlMode::kCounting, threads, budget);
  e.initialize();
  return e.take_coloring(0);
}

Coloring refine_round(const RefinableStructure& s, const Coloring& c, WlMode mode,
                      unsigned threads) {
  WlEngine e({&s}, c.k, mode, threads);
  e.load({c});
  e.refine();
  return e.take_coloring(0);
}

Coloring run_single(const RefinableStructure& s, std::size_t k, WlMode mode,
                    std::optional<std::size_t> rounds, unsigned threads, std::uint64_t budget) {
  WlEngine e({&s}, k, mode, threads, budget);
  e.initialize();
  while (!rounds || e.round() < *rounds)
    if (!e.refine()) break;
  return e.take_coloring(0);
}

namespace {

std::vector<std::pair<std::uint32_t, std::uint64_t>> histogram(const Coloring& c) {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> h;
  for (std::uint32_t id = 0; id < c.class_sizes.size(); ++id)
    if (c.class_sizes[id]) h.emplace_back(id, c.class_sizes[id]);
  return h;
}

std::optional<std::uint32_t> first_difference(const Coloring& a, const Coloring& b,
                                              Criterion criterion) {
  for (std::uint32_t id = 0; id < a.class_sizes.size(); ++id) {
    std::uint64_t x = a.class_sizes[id], y = b.class_sizes[id];
    bool differ = criterion == Criterion::kMultiset ? x != y : (x == 0) != (y == 0);
    if (differ) return id;
  }
  return std::nullopt;
}

}  // namespace

WlRun run(const RefinableStructure& g, const RefinableStructure& h, const WlOptions& options) {
  WlRun out;
  out.verdict.criterion = options.criterion;
  if (g.kind() != h.kind())
    throw Error(ErrorCode::kInvalidArgument, "cannot compare structures of different kinds");
  if (g.domain_size() != h.domain_size()) {
    out.verdict.distinguished = true;
    out.verdict.round = 0;
    out.verdict.reason = "domain-size";
    return out;
  }
  WlEngine e({&g, &h}, options.k, options.mode, options.threads, options.budget);
  e.initialize();
  bool changed = true;
  for (;;) {
    const Coloring& a = e.coloring(0);
    const Coloring& b = e.coloring(1);
    if (options.keep_histograms) {
      out.left_histograms.push_back(histogram(a));
      out.right_histograms.push_back(histogram(b));
    }
    if (auto w = first_difference(a, b, options.criterion)) {
      out.verdict.distinguished = true;
      out.verdict.round = e.round();
      out.verdict.witness = *w;
      out.verdict.reason = options.criterion == Criterion::kMultiset ? "multiplicity" : "presence";
      break;
    }
    if (!changed) {
      out.verdict.reached_stable = true;
      out.verdict.reason = "stable-equal";
      break;
    }
    if (options.rounds && e.round() >= *options.rounds) {
      out.verdict.reason = "round-limit";
      break;
    }
    changed = e.refine();
  }
  out.verdict.rounds_run = e.round();
  out.left = e.take_coloring(0);
  out.right = e.take_coloring(1);
  return out;
}

}  // namespace grpwl
