#include "grpwl/pebble.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

#include "grpwl/error.hpp"

namespace grpwl {

const char* to_string(Side side) { return side == Side::kLeft ? "L" : "R"; }

const char* to_string(Outcome outcome) {
  return outcome == Outcome::kOngoing ? "ongoing" : "spoiler-wins";
}

GameState::GameState(std::shared_ptr<const GroupView> l, std::shared_ptr<const GroupView> r,
                     std::size_t budget, std::size_t q_, MarkedVersion v)
    : left(std::move(l)), right(std::move(r)), pebbles(budget), q(q_), version(v) {
  if (!left || !right) throw Error(ErrorCode::kInvalidArgument, "game needs two groups");
  if (budget == 0) throw Error(ErrorCode::kInvalidArgument, "pebble budget must be positive");
  if (q == 0) throw Error(ErrorCode::kInvalidArgument, "arity q must be positive");
}

std::vector<Element> GameState::left_tuple() const {
  std::vector<Element> out;
  for (const auto& p : pebbles)
    if (p) out.push_back(p->left);
  return out;
}

std::vector<Element> GameState::right_tuple() const {
  std::vector<Element> out;
  for (const auto& p : pebbles)
    if (p) out.push_back(p->right);
  return out;
}

Outcome check_win(const GameState& state) {
  if (state.left->order() != state.right->order()) return Outcome::kSpoilerWins;
  auto u = state.left_tuple();
  auto v = state.right_tuple();
  return marked_equivalent(*state.left, u, *state.right, v, state.version)
             ? Outcome::kOngoing
             : Outcome::kSpoilerWins;
}

namespace {

void validate_move(const GameState& state, const SpoilerMove& move) {
  const std::size_t j = move.lifted.size();
  if (j == 0 || j > state.q)
    throw Error(ErrorCode::kIllegalMove, "must lift between 1 and q pebble pairs");
  std::vector<std::size_t> lifted = move.lifted;
  std::sort(lifted.begin(), lifted.end());
  if (std::adjacent_find(lifted.begin(), lifted.end()) != lifted.end())
    throw Error(ErrorCode::kIllegalMove, "pebble lifted twice");
  if (lifted.back() >= state.budget())
    throw Error(ErrorCode::kIllegalMove, "no pebble pair " + std::to_string(lifted.back()));
  if (move.placements.size() != j)
    throw Error(ErrorCode::kIllegalMove, "must place exactly the lifted pebbles");
  std::vector<std::size_t> placed;
  const GroupView& g = move.side == Side::kLeft ? *state.left : *state.right;
  for (const auto& p : move.placements) {
    if (p.element >= g.order())
      throw Error(ErrorCode::kIllegalMove, "element " + std::to_string(p.element) +
                                               " out of range");
    placed.push_back(p.pebble);
  }
  std::sort(placed.begin(), placed.end());
  if (placed != lifted) throw Error(ErrorCode::kIllegalMove, "must place exactly the lifted pebbles");
}

// Board tuples of `state` with extra (x, y) pairs appended, oriented so the
// first tuple lives in `side`'s group.
void oriented_board(const GameState& state, Side side, std::vector<Element>& mine,
                    std::vector<Element>& theirs) {
  mine = side == Side::kLeft ? state.left_tuple() : state.right_tuple();
  theirs = side == Side::kLeft ? state.right_tuple() : state.left_tuple();
}

}  // namespace

PlayResult play(const GameState& state, const SpoilerMove& move, Duplicator& duplicator) {
  validate_move(state, move);
  PlayResult res;
  res.state = state;
  res.state.round = state.round + 1;
  for (std::size_t p : move.lifted) res.state.pebbles[p].reset();
  res.after_lift = check_win(res.state);
  if (res.after_lift == Outcome::kSpoilerWins) return res;

  res.response = duplicator.respond(res.state, move.side, move.placements);
  const GroupView& other = move.side == Side::kLeft ? *state.right : *state.left;
  if (res.response.size() != move.placements.size())
    throw Error(ErrorCode::kIllegalMove, "duplicator answered the wrong number of elements");
  for (std::size_t i = 0; i < res.response.size(); ++i) {
    if (res.response[i] >= other.order())
      throw Error(ErrorCode::kIllegalMove, "duplicator element out of range");
    const auto& p = move.placements[i];
    res.state.pebbles[p.pebble] = move.side == Side::kLeft ? PebblePair{p.element, res.response[i]}
                                                           : PebblePair{res.response[i], p.element};
  }
  res.after_response = check_win(res.state);
  return res;
}

BruteDuplicator::BruteDuplicator(std::optional<std::vector<Element>> isomorphism)
    : forward_(std::move(isomorphism)) {
  if (forward_) {
    backward_.emplace(forward_->size());
    for (std::size_t x = 0; x < forward_->size(); ++x) (*backward_)[(*forward_)[x]] = static_cast<Element>(x);
  }
}

std::vector<Element> BruteDuplicator::respond(const GameState& state, Side side,
                                              const std::vector<Placement>& placements) {
  std::vector<Element> out;
  if (forward_) {
    const auto& map = side == Side::kLeft ? *forward_ : *backward_;
    for (const auto& p : placements) out.push_back(map.at(p.element));
    return out;
  }
  const GroupView& mine = side == Side::kLeft ? *state.left : *state.right;
  const GroupView& other = side == Side::kLeft ? *state.right : *state.left;
  std::vector<Element> u, v;
  oriented_board(state, side, u, v);
  for (const auto& p : placements) {
    u.push_back(p.element);
    v.push_back(other.identity());
    for (Element y = 0; y < other.order(); ++y) {
      v.back() = y;
      if (marked_equivalent(mine, u, other, v, state.version)) break;
      if (y + 1 == other.order()) v.back() = other.identity();
    }
    out.push_back(v.back());
  }
  return out;
}

SubgroupShape subgroup_shape(const AbelianGroup& ambient, const std::vector<Element>& gens) {
  std::unordered_set<Element> seen{ambient.identity()};
  std::vector<Element> a{ambient.identity()};
  for (std::size_t i = 0; i < a.size(); ++i)
    for (Element s : gens) {
      Element x = ambient.mul(a[i], s);
      if (seen.insert(x).second) a.push_back(x);
    }
  std::size_t omega = 0, omega_sq = 0;
  std::unordered_set<Element> doubles;
  for (Element x : a) {
    Element xx = ambient.mul(x, x);
    doubles.insert(xx);
    if (xx == ambient.identity()) {
      ++omega;
      if (ambient.is_square(x)) ++omega_sq;
    }
  }
  auto lg = [](std::size_t v) { return static_cast<std::size_t>(std::countr_zero(v)); };
  SubgroupShape s;
  s.b = lg(doubles.size());
  s.a = lg(omega) - s.b;
  s.contained = lg(omega_sq) - s.b;
  return s;
}

FamilyStrategyState audit_family_state(const AbelianGroup& left, const AbelianGroup& right,
                                       const GameState& state) {
  FamilyStrategyState out;
  auto u = state.left_tuple();
  auto v = state.right_tuple();
  out.marked_isomorphism = left.order() == right.order() && marked_equivalent_v2(left, u, right, v);
  out.left = subgroup_shape(left, u);
  out.right = subgroup_shape(right, v);
  return out;
}

FamilyDuplicator::FamilyDuplicator(std::shared_ptr<const AbelianGroup> left,
                                   std::shared_ptr<const AbelianGroup> right)
    : left_(std::move(left)), right_(std::move(right)) {}

std::vector<Element> FamilyDuplicator::respond(const GameState& state, Side side,
                                               const std::vector<Placement>& placements) {
  const AbelianGroup& mine = side == Side::kLeft ? *left_ : *right_;
  const AbelianGroup& other = side == Side::kLeft ? *right_ : *left_;
  std::vector<Element> u, v;
  oriented_board(state, side, u, v);
  std::vector<Element> out;
  for (const auto& p : placements) {
    u.push_back(p.element);
    const std::size_t want = subgroup_shape(mine, u).contained;
    v.push_back(0);
    bool ok = false;
    for (Element y = 0; y < other.order() && !ok; ++y) {
      v.back() = y;
      ok = marked_equivalent_v2(mine, u, other, v) && subgroup_shape(other, v).contained == want;
    }
    if (!ok)
      throw Error(ErrorCode::kStrategyStuck,
                  "no response keeps the marked isomorphism and containment counts");
    out.push_back(v.back());
  }
  return out;
}

std::optional<SpoilerMove> RandomSpoiler::next(const GameState& state) {
  const std::size_t budget = state.budget();
  std::uniform_int_distribution<std::size_t> jd(1, std::min(state.q, budget));
  const std::size_t j = jd(rng_);
  std::vector<std::size_t> idx(budget);
  for (std::size_t i = 0; i < budget; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng_);
  SpoilerMove m;
  m.side = std::bernoulli_distribution(0.5)(rng_) ? Side::kRight : Side::kLeft;
  const GroupView& g = m.side == Side::kLeft ? *state.left : *state.right;
  std::uniform_int_distribution<Element> ed(0, static_cast<Element>(g.order() - 1));
  for (std::size_t i = 0; i < j; ++i) {
    m.lifted.push_back(idx[i]);
    m.placements.push_back({idx[i], ed(rng_)});
  }
  return m;
}

namespace {

std::vector<std::uint64_t> parse_list(const std::string& s, std::size_t line) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (item.empty() || pos != item.size() || item[0] == '-')
      throw Error(ErrorCode::kParse, "script line " + std::to_string(line) + ": bad number '" +
                                         item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

ScriptSpoiler::ScriptSpoiler(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string pebbles, side, elements, extra;
    if (!(ls >> pebbles)) continue;
    if (!(ls >> side >> elements) || (ls >> extra))
      throw Error(ErrorCode::kParse, "script line " + std::to_string(no) +
                                         ": expected '<pebbles> <L|R> <elements>'");
    SpoilerMove m;
    if (side == "L" || side == "l") m.side = Side::kLeft;
    else if (side == "R" || side == "r") m.side = Side::kRight;
    else throw Error(ErrorCode::kParse, "script line " + std::to_string(no) + ": side must be L or R");
    auto ps = parse_list(pebbles, no);
    auto es = parse_list(elements, no);
    if (ps.size() != es.size())
      throw Error(ErrorCode::kParse, "script line " + std::to_string(no) +
                                         ": pebble and element counts differ");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      m.lifted.push_back(ps[i]);
      m.placements.push_back({ps[i], static_cast<Element>(es[i])});
    }
    moves_.push_back(std::move(m));
  }
}

std::optional<SpoilerMove> ScriptSpoiler::next(const GameState&) {
  if (pos_ >= moves_.size()) return std::nullopt;
  return moves_[pos_++];
}

std::string TraceLine::to_string() const {
  std::ostringstream os;
  auto list = [&](auto&& xs, auto&& f) {
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << f(xs[i]);
  };
  os << "round " << round << ": lift ";
  list(move.lifted, [](std::size_t p) { return p; });
  os << " | check " << grpwl::to_string(after_lift);
  if (after_lift == Outcome::kOngoing) {
    os << " | spoiler " << grpwl::to_string(move.side) << " ";
    list(move.placements, [](const Placement& p) { return p.element; });
    os << " -> duplicator ";
    list(response, [](Element e) { return e; });
    os << " | board " << grpwl::to_string(after_response);
  }
  if (audit) os << " | audit " << (audit->holds() ? "ok" : "broken");
  return os.str();
}

GameRecord play_game(GameState state, Spoiler& spoiler, Duplicator& duplicator,
                     std::size_t rounds, const AbelianGroup* audit_left,
                     const AbelianGroup* audit_right) {
  GameRecord rec;
  for (std::size_t r = 0; r < rounds; ++r) {
    auto move = spoiler.next(state);
    if (!move) break;
    PlayResult res = play(state, *move, duplicator);
    TraceLine line;
    line.round = res.state.round;
    line.move = *move;
    line.after_lift = res.after_lift;
    line.response = res.response;
    line.after_response = res.after_response;
    ++rec.rounds_played;
    if (res.after_lift == Outcome::kOngoing && audit_left && audit_right) {
      line.audit = audit_family_state(*audit_left, *audit_right, res.state);
      if (!line.audit->holds()) rec.invariant_broken = true;
    }
    rec.trace.push_back(std::move(line));
    state = std::move(res.state);
    if (res.after_lift == Outcome::kSpoilerWins) {
      rec.outcome = Outcome::kSpoilerWins;
      break;
    }
  }
  return rec;
}

bool exhaustive_spoiler(const Group& left, const Group& right, std::size_t budget,
                        std::size_t rounds, MarkedVersion version, std::uint64_t cap) {
  if (budget == 0) throw Error(ErrorCode::kInvalidArgument, "pebble budget must be positive");
  if (left.order() != right.order()) return true;
  const std::size_t n = left.order();
  const std::size_t k = budget - 1;
  if (k == 0) return false;

  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < k; ++i) {
    tuples *= n;
    if (tuples > cap) throw Error(ErrorCode::kCapExceeded, "game table exceeds the cap");
  }
  const std::uint64_t cells = tuples * tuples;
  if (tuples > cap || cells / tuples != tuples || cells > cap / (rounds + 1))
    throw Error(ErrorCode::kCapExceeded, "game table of " + std::to_string(cells) + " x " +
                                             std::to_string(rounds + 1) + " exceeds the cap " +
                                             std::to_string(cap));
  const std::size_t N = tuples;

  std::vector<std::size_t> weight(k);
  for (std::size_t i = k, w = 1; i-- > 0; w *= n) weight[i] = w;
  auto decode = [&](std::size_t r, std::vector<Element>& t) {
    for (std::size_t i = 0; i < k; ++i) t[i] = static_cast<Element>((r / weight[i]) % n);
  };

  std::vector<std::uint8_t> w(N * N);
  {
    std::vector<Element> u(k), v(k);
    if (version == MarkedVersion::kII) {
      MarkedCertifier cl(left), cr(right);
      std::vector<std::vector<std::uint32_t>> certl(N), certr(N);
      for (std::size_t a = 0; a < N; ++a) {
        decode(a, u);
        cl.certificate(u, certl[a]);
        cr.certificate(u, certr[a]);
      }
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) w[a * N + b] = certl[a] == certr[b];
    } else {
      for (std::size_t a = 0; a < N; ++a) {
        decode(a, u);
        for (std::size_t b = 0; b < N; ++b) {
          decode(b, v);
          w[a * N + b] = marked_equivalent_v1(left, u, right, v);
        }
      }
    }
  }

  std::vector<std::uint8_t> next(N * N);
  std::vector<Element> u(k), v(k);
  for (std::size_t r = 0; r < rounds; ++r) {
    bool changed = false;
    for (std::size_t a = 0; a < N; ++a) {
      decode(a, u);
      for (std::size_t b = 0; b < N; ++b) {
        std::uint8_t keep = w[a * N + b];
        if (keep) {
          decode(b, v);
          auto good = [&](Element x, Element y) {
            for (std::size_t i = 0; i < k; ++i) {
              std::size_t a2 = a + (std::size_t{x} - u[i]) * weight[i];
              std::size_t b2 = b + (std::size_t{y} - v[i]) * weight[i];
              if (!w[a2 * N + b2]) return false;
            }
            return true;
          };
          for (Element x = 0; x < n && keep; ++x) {
            bool found = false;
            for (Element y = 0; y < n && !found; ++y) found = good(x, y);
            keep = found;
          }
          for (Element y = 0; y < n && keep; ++y) {
            bool found = false;
            for (Element x = 0; x < n && !found; ++x) found = good(x, y);
            keep = found;
          }
        }
        next[a * N + b] = keep;
        changed |= keep != w[a * N + b];
      }
    }
    w.swap(next);
    if (!changed) break;
  }

  for (std::size_t a = 0; a < N; ++a) {
    bool any = false;
    for (std::size_t b = 0; b < N && !any; ++b) any = w[a * N + b];
    if (!any) return true;
  }
  for (std::size_t b = 0; b < N; ++b) {
    bool any = false;
    for (std::size_t a = 0; a < N && !any; ++a) any = w[a * N + b];
    if (!any) return true;
  }
  return false;
}

}  // namespace grpwl
