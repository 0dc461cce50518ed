#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grpwl/group.hpp"
#include "grpwl/group_view.hpp"
#include "grpwl/marked.hpp"

namespace grpwl {

// Bound on (n^k)^2 * (rounds + 1) table entries for the exhaustive solver.
inline constexpr std::uint64_t kDefaultGameCap = 50'000'000;

enum class Side { kLeft, kRight };
enum class Outcome { kOngoing, kSpoilerWins };

const char* to_string(Side side);
const char* to_string(Outcome outcome);

struct PebblePair {
  Element left = 0;
  Element right = 0;
};

// `budget` is the number of pebble pairs; the win condition is checked after
// Spoiler lifts, so at most budget - 1 pairs are ever inspected, matching
// (budget - 1)-dimensional WL.
struct GameState {
  std::shared_ptr<const GroupView> left;
  std::shared_ptr<const GroupView> right;
  std::vector<std::optional<PebblePair>> pebbles;
  std::size_t q = 1;
  std::size_t round = 0;
  MarkedVersion version = MarkedVersion::kII;

  GameState() = default;
  GameState(std::shared_ptr<const GroupView> l, std::shared_ptr<const GroupView> r,
            std::size_t budget, std::size_t q, MarkedVersion version);

  std::size_t budget() const { return pebbles.size(); }
  // Placed pairs in pebble-index order.
  std::vector<Element> left_tuple() const;
  std::vector<Element> right_tuple() const;
};

struct Placement {
  std::size_t pebble = 0;
  Element element = 0;
};

struct SpoilerMove {
  std::vector<std::size_t> lifted;
  Side side = Side::kLeft;
  // One placement per lifted pebble.
  std::vector<Placement> placements;
};

// Spoiler wins iff the group orders differ or the pebbled map is not a
// marked equivalence of the state's version.
Outcome check_win(const GameState& state);

class Duplicator {
 public:
  virtual ~Duplicator() = default;
  // `state` has the lifted pebbles removed. Returns one element of the other
  // group per placement, in order. Responses may be computed one at a time
  // but are placed together.
  virtual std::vector<Element> respond(const GameState& state, Side side,
                                       const std::vector<Placement>& placements) = 0;
  virtual std::string name() const = 0;
};

struct PlayResult {
  GameState state;
  // Win condition on the board after lifting, before placement.
  Outcome after_lift = Outcome::kOngoing;
  std::vector<Element> response;
  // Win condition on the full board after Duplicator's response.
  Outcome after_response = Outcome::kOngoing;
};

// Throws Error(kIllegalMove) on malformed moves.
PlayResult play(const GameState& state, const SpoilerMove& move, Duplicator& duplicator);

// Copies through a fixed isomorphism left -> right when one is supplied;
// otherwise answers greedily with the first element keeping the full board
// marked equivalent (or the identity if none does).
class BruteDuplicator final : public Duplicator {
 public:
  explicit BruteDuplicator(std::optional<std::vector<Element>> isomorphism = std::nullopt);
  std::vector<Element> respond(const GameState& state, Side side,
                               const std::vector<Placement>& placements) override;
  std::string name() const override { return "brute"; }

 private:
  std::optional<std::vector<Element>> forward_;
  std::optional<std::vector<Element>> backward_;
};

// Shape bookkeeping for a pebbled subgroup A of an Abelian 2-group of
// exponent <= 4: A = (Z/2)^a x (Z/4)^b and `contained` is the number of
// Z/2 factors lying in squares of the ambient group, i.e.
// log2 |Omega_1(A) cap ambient^2| - log2 |2A|.
struct SubgroupShape {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t contained = 0;
  friend bool operator==(const SubgroupShape&, const SubgroupShape&) = default;
};
SubgroupShape subgroup_shape(const AbelianGroup& ambient, const std::vector<Element>& gens);

struct FamilyStrategyState {
  bool marked_isomorphism = false;
  SubgroupShape left;
  SubgroupShape right;
  bool holds() const { return marked_isomorphism && left == right; }
};
FamilyStrategyState audit_family_state(const AbelianGroup& left, const AbelianGroup& right,
                                       const GameState& state);

// Duplicator for the pair (Z/2)^{qn} x (Z/4)^{qn} vs (Z/2)^{q(n-2)} x
// (Z/4)^{q(n+1)}: each new element is answered by the first element of the
// other group (in index order) that keeps the pebbled map a marked
// isomorphism and keeps the containment counts equal. Throws
// Error(kStrategyStuck) if no such element exists.
class FamilyDuplicator final : public Duplicator {
 public:
  FamilyDuplicator(std::shared_ptr<const AbelianGroup> left,
                   std::shared_ptr<const AbelianGroup> right);
  std::vector<Element> respond(const GameState& state, Side side,
                               const std::vector<Placement>& placements) override;
  std::string name() const override { return "family"; }

 private:
  std::shared_ptr<const AbelianGroup> left_;
  std::shared_ptr<const AbelianGroup> right_;
};

class Spoiler {
 public:
  virtual ~Spoiler() = default;
  // nullopt ends the game.
  virtual std::optional<SpoilerMove> next(const GameState& state) = 0;
};

class RandomSpoiler final : public Spoiler {
 public:
  explicit RandomSpoiler(std::uint64_t seed) : rng_(seed) {}
  std::optional<SpoilerMove> next(const GameState& state) override;

 private:
  std::mt19937_64 rng_;
};

// Script lines: "<pebble,pebble,...> <L|R> <element,element,...>"; blank
// lines and '#' comments are skipped.
class ScriptSpoiler final : public Spoiler {
 public:
  explicit ScriptSpoiler(const std::string& text);
  std::optional<SpoilerMove> next(const GameState& state) override;

 private:
  std::vector<SpoilerMove> moves_;
  std::size_t pos_ = 0;
};

struct TraceLine {
  std::size_t round = 0;
  SpoilerMove move;
  Outcome after_lift = Outcome::kOngoing;
  std::vector<Element> response;
  Outcome after_response = Outcome::kOngoing;
  std::optional<FamilyStrategyState> audit;
  std::string to_string() const;
};

struct GameRecord {
  std::vector<TraceLine> trace;
  Outcome outcome = Outcome::kOngoing;
  std::size_t rounds_played = 0;
  // Set when an audit failed (family games only).
  bool invariant_broken = false;
};

// Plays up to `rounds` rounds (stopping at Spoiler's first win). When both
// groups are AbelianGroup views, pass them to audit the family invariants
// after every response.
GameRecord play_game(GameState state, Spoiler& spoiler, Duplicator& duplicator,
                     std::size_t rounds, const AbelianGroup* audit_left = nullptr,
                     const AbelianGroup* audit_right = nullptr);

// Exact solver for the 1-ary game with `budget` pebble pairs (k = budget - 1
// pairs on the board when the win condition is checked) over `rounds`
// rounds. Spoiler opens by placing a full k-tuple on one side; afterwards
// W_r(u, v) holds iff W_{r-1}(u, v) and for every x on either side there is a
// y on the other with W_{r-1}(u[i/x], v[i/y]) for all i. Spoiler wins iff the
// orders differ or some opening u has no v with W_rounds(u, v).
// Throws Error(kCapExceeded) above `cap` table entries.
bool exhaustive_spoiler(const Group& left, const Group& right, std::size_t budget,
                        std::size_t rounds, MarkedVersion version,
                        std::uint64_t cap = kDefaultGameCap);

}  // namespace grpwl
