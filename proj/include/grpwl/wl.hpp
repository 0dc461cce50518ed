#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grpwl/graph.hpp"
#include "grpwl/group.hpp"
#include "grpwl/marked.hpp"

namespace grpwl {

inline constexpr std::uint64_t kDefaultWlBudget = 200'000'000;
inline constexpr std::size_t kMaxWlDimension = 3;
inline constexpr std::size_t kMaxIndividualized = 8;

enum class StructureKind { kGroupV1, kGroupV2, kGraph };
enum class WlMode { kCounting, kCountFree };
enum class Criterion { kSet, kMultiset };

const char* to_string(StructureKind kind);
const char* to_string(WlMode mode);
const char* to_string(Criterion criterion);

// Something whose k-tuples can be colored: a group (Version I or II initial
// colors) or a graph, optionally with individualized elements.
class RefinableStructure {
 public:
  static RefinableStructure group(std::shared_ptr<const Group> g, MarkedVersion version);
  static RefinableStructure graph(std::shared_ptr<const Graph> g);

  // Copy with `tuple` appended to the individualized elements, which then
  // behave as constants: every initial key describes the tuple extended by
  // them. Throws Error(kInvalidArgument) beyond kMaxIndividualized.
  RefinableStructure individualize(std::span<const Element> tuple) const;

  StructureKind kind() const { return kind_; }
  std::size_t domain_size() const;
  const std::vector<Element>& individualized() const { return individualized_; }
  const Group* group_ptr() const { return group_.get(); }
  const Graph* graph_ptr() const { return graph_.get(); }

 private:
  StructureKind kind_ = StructureKind::kGroupV1;
  std::shared_ptr<const Group> group_;
  std::shared_ptr<const Graph> graph_;
  std::vector<Element> individualized_;

  friend class WlEngine;
};

struct RoundSummary {
  std::size_t num_classes = 0;
  // FNV-1a over the first-occurrence relabelling of color_of.
  std::uint64_t digest = 0;
};

struct Coloring {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t round = 0;
  // Indexed by tuple rank sum_i u_i n^{k-1-i}.
  std::vector<std::uint32_t> color_of;
  // Size of the id space; shared by every structure of one run.
  std::size_t num_colors = 0;
  // class_sizes[id] = number of tuples with that color.
  std::vector<std::uint64_t> class_sizes;
  std::vector<RoundSummary> history;

  std::size_t num_classes() const;
  bool is_discrete() const { return num_classes() == color_of.size(); }
};

std::uint64_t partition_digest(std::span<const std::uint32_t> colors);
// Canonical first-occurrence labels: equal vectors <=> equal partitions.
std::vector<std::uint32_t> partition_labels(std::span<const std::uint32_t> colors);

struct Verdict {
  bool distinguished = false;
  Criterion criterion = Criterion::kMultiset;
  // First round at which the histograms differ.
  std::optional<std::size_t> round;
  std::optional<std::uint32_t> witness;
  // "domain-size", "multiplicity", "presence", "stable-equal", "round-limit"
  std::string reason;
  std::size_t rounds_run = 0;
  bool reached_stable = false;
};

struct WlOptions {
  std::size_t k = 2;
  WlMode mode = WlMode::kCountFree;
  Criterion criterion = Criterion::kMultiset;
  // Refinement rounds after the initial coloring; nullopt runs to the stable
  // coloring.
  std::optional<std::size_t> rounds;
  unsigned threads = 0;
  std::uint64_t budget = kDefaultWlBudget;
  bool keep_histograms = false;
};

struct WlRun {
  Coloring left;
  Coloring right;
  Verdict verdict;
  // Per round, per side: sorted (color id, multiplicity) pairs; only with
  // keep_histograms.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> left_histograms;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> right_histograms;
};

// Refinement state for one or more structures sharing a color id space.
// Ids are ranks of the exact keys in lexicographic order, so they depend only
// on the structures, never on hashing or on the worker count.
class WlEngine {
 public:
  WlEngine(std::vector<const RefinableStructure*> structures, std::size_t k, WlMode mode,
           unsigned threads = 0, std::uint64_t budget = kDefaultWlBudget);

  // Round 0. Throws Error(kBudgetExceeded) if n^k exceeds the budget.
  void initialize();
  // Resume from existing colorings (one per structure, same id space).
  void load(std::vector<Coloring> colorings);
  // One refinement round; returns false when the joint partition did not change.
  bool refine();

  std::size_t round() const { return round_; }
  std::size_t num_colors() const { return num_colors_; }
  const Coloring& coloring(std::size_t i) const { return colorings_[i]; }
  Coloring take_coloring(std::size_t i) { return std::move(colorings_[i]); }

 private:
  void finish_round(std::vector<std::vector<std::uint32_t>> colors, std::size_t num_colors);

  std::vector<const RefinableStructure*> structures_;
  std::size_t k_;
  WlMode mode_;
  unsigned threads_;
  std::uint64_t budget_;
  std::size_t round_ = 0;
  std::size_t num_colors_ = 0;
  std::vector<Coloring> colorings_;
  std::vector<std::uint32_t> joint_labels_;
};

// Single-structure forms.
Coloring initial_coloring(const RefinableStructure& s, std::size_t k, unsigned threads = 0,
                          std::uint64_t budget = kDefaultWlBudget);
// Round-0 keys of the diagonal tuples (x, ..., x). Color ids are ranks of
// keys, so these order the diagonal exactly as initial_coloring does.
std::vector<std::vector<std::uint64_t>> diagonal_keys(const RefinableStructure& s, std::size_t k);
Coloring refine_round(const RefinableStructure& s, const Coloring& c, WlMode mode,
                      unsigned threads = 0);
// Runs `rounds` refinements (or to stability) on one structure.
Coloring run_single(const RefinableStructure& s, std::size_t k, WlMode mode,
                    std::optional<std::size_t> rounds, unsigned threads = 0,
                    std::uint64_t budget = kDefaultWlBudget);

// Compares two structures round by round and stops at the first round whose
// histograms differ under the chosen criterion.
WlRun run(const RefinableStructure& g, const RefinableStructure& h, const WlOptions& options);

// Canonical form via individualize-and-refine.
struct Certificate {
  std::size_t order = 0;
  // Cayley table relabelled by the canonical labelling, row-major.
  std::vector<Element> table;
  // The individualized tuple (in the input's labels) that produced it.
  std::vector<Element> tuple;
  // canonical_label[g] for every element g of the input.
  std::vector<Element> labelling;
  std::size_t candidates_tried = 0;

  friend bool operator==(const Certificate& a, const Certificate& b) {
    return a.order == b.order && a.table == b.table;
  }
};

struct CanonizeOptions {
  std::size_t d = 2;
  // Version I at k = 2 only sees products landing inside a pair, which is
  // too weak to separate the powers of an individualized generator.
  MarkedVersion version = MarkedVersion::kII;
  WlMode mode = WlMode::kCountFree;
  // Rounds per individualized run; nullopt runs to stability.
  std::optional<std::size_t> rounds;
  unsigned threads = 0;
  std::uint64_t budget = kDefaultWlBudget;
};

// Throws Error(kNotGenerated) when no d-tuple discretizes the elements.
Certificate canonize(const Group& g, const CanonizeOptions& options);
std::uint64_t certificate_digest(const Certificate& c);

}  // namespace grpwl
