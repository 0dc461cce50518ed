#include "grpwl/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "grpwl/error.hpp"

namespace grpwl {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kNotLatinSquare: return "NotLatinSquare";
    case ErrorCode::kNoIdentity: return "NoIdentity";
    case ErrorCode::kNotAssociative: return "NotAssociative";
    case ErrorCode::kNotASubgroup: return "NotASubgroup";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInvalidAction: return "InvalidAction";
    case ErrorCode::kBadScalarOrder: return "BadScalarOrder";
    case ErrorCode::kNotCoprime: return "NotCoprime";
    case ErrorCode::kBadPrime: return "BadPrime";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kDegreeTooLow: return "DegreeTooLow";
    case ErrorCode::kNotAbelian: return "NotAbelian";
    case ErrorCode::kNotSemisimple: return "NotSemisimple";
    case ErrorCode::kNotGenerated: return "NotGenerated";
    case ErrorCode::kIllegalMove: return "IllegalMove";
    case ErrorCode::kStrategyStuck: return "StrategyStuck";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

// ---- ElementSet -----------------------------------------------------------

ElementSet ElementSet::from_bitmap(std::vector<std::uint8_t> bitmap) {
  ElementSet s;
  s.member_ = std::move(bitmap);
  for (std::size_t i = 0; i < s.member_.size(); ++i)
    if (s.member_[i]) s.sorted_.push_back(static_cast<Element>(i));
  return s;
}

ElementSet ElementSet::from_elements(std::size_t universe, std::span<const Element> elements) {
  std::vector<std::uint8_t> bitmap(universe, 0);
  for (Element e : elements) {
    if (e >= universe) throw Error(ErrorCode::kInvalidArgument, "element out of range");
    bitmap[e] = 1;
  }
  return from_bitmap(std::move(bitmap));
}

ElementSet ElementSet::full(std::size_t universe) {
  return from_bitmap(std::vector<std::uint8_t>(universe, 1));
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (size() > other.size()) return false;
  for (Element e : sorted_)
    if (!other.contains(e)) return false;
  return true;
}

// ---- validation -------------------------------------------------------------

namespace {

void check_latin(std::size_t n, const std::vector<Element>& t) {
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t a = 0; a < n; ++a) {
    ++stamp;
    for (std::size_t b = 0; b < n; ++b) {
      Element x = t[a * n + b];
      if (seen[x] == stamp)
        throw Error(ErrorCode::kNotLatinSquare,
                    "row " + std::to_string(a) + " repeats entry " + std::to_string(x));
      seen[x] = stamp;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    ++stamp;
    for (std::size_t a = 0; a < n; ++a) {
      Element x = t[a * n + b];
      if (seen[x] == stamp)
        throw Error(ErrorCode::kNotLatinSquare,
                    "column " + std::to_string(b) + " repeats entry " + std::to_string(x));
      seen[x] = stamp;
    }
  }
}

Element find_identity(std::size_t n, const std::vector<Element>& t) {
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      ok = t[e * n + a] == a && t[a * n + e] == a;
    if (ok) return static_cast<Element>(e);
  }
  throw Error(ErrorCode::kNoIdentity, "no two-sided identity");
}

// Left-normed powers e, a, (a)a, ... of a Latin square with identity return
// to e because right multiplication by a permutes the elements.
std::vector<std::uint32_t> power_orders(std::size_t n, const std::vector<Element>& t,
                                        Element identity) {
  std::vector<std::uint32_t> ord(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    Element x = static_cast<Element>(a);
    std::uint32_t m = 1;
    while (x != identity) {
      x = t[std::size_t{x} * n + a];
      ++m;
    }
    ord[a] = m;
  }
  return ord;
}

void check_associative(std::size_t n, const std::vector<Element>& t, Element identity,
                       const std::vector<std::uint32_t>& ord) {
  std::vector<Element> candidates(n);
  std::iota(candidates.begin(), candidates.end(), Element{0});
  std::stable_sort(candidates.begin(), candidates.end(), [&](Element a, Element b) {
    if (ord[a] != ord[b]) return ord[a] > ord[b];
    return a > b;
  });

  // Greedy generating set S: the right-multiplication closure of S must be
  // everything, so the set of "associative middles" (closed under products)
  // contains the whole table.
  std::vector<Element> gens;
  std::vector<std::uint8_t> reached(n, 0);
  std::size_t reached_count = 1;
  reached[identity] = 1;
  for (Element c : candidates) {
    if (reached_count == n) break;
    if (reached[c]) continue;
    gens.push_back(c);
    std::vector<Element> frontier;
    for (std::size_t x = 0; x < n; ++x)
      if (reached[x]) frontier.push_back(static_cast<Element>(x));
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (Element s : gens) {
        Element y = t[std::size_t{frontier[i]} * n + s];
        if (!reached[y]) {
          reached[y] = 1;
          ++reached_count;
          frontier.push_back(y);
        }
      }
    }
  }

  for (Element s : gens) {
    const Element* srow = &t[std::size_t{s} * n];
    for (std::size_t x = 0; x < n; ++x) {
      const Element* xrow = &t[x * n];
      const Element* xsrow = &t[std::size_t{xrow[s]} * n];
      for (std::size_t z = 0; z < n; ++z) {
        if (xsrow[z] != xrow[srow[z]])
          throw NotAssociativeError(static_cast<Element>(x), s, static_cast<Element>(z));
      }
    }
  }
}

}  // namespace

Group validate_cayley(std::size_t n, std::vector<Element> table) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty table");
  if (table.size() != n * n)
    throw Error(ErrorCode::kInvalidArgument, "table has wrong number of entries");
  for (Element x : table)
    if (x >= n) throw Error(ErrorCode::kInvalidArgument, "entry out of range");

  check_latin(n, table);
  Element identity = find_identity(n, table);
  auto ord = power_orders(n, table, identity);
  check_associative(n, table, identity, ord);

  Group g;
  g.n_ = n;
  g.identity_ = identity;
  g.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a * n + b] == identity) {
        g.inverse_[a] = static_cast<Element>(b);
        break;
      }
  g.elt_order_ = std::move(ord);
  g.table_ = std::move(table);
  return g;
}

Group validate_cayley(const std::vector<std::vector<Element>>& rows) {
  std::size_t n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorCode::kInvalidArgument, "table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return validate_cayley(n, std::move(flat));
}

bool Group::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (table_[a * n_ + b] != table_[b * n_ + a]) return false;
  return true;
}

std::uint64_t Group::exponent() const {
  std::uint64_t e = 1;
  for (auto o : elt_order_) e = std::lcm(e, std::uint64_t{o});
  return e;
}

std::uint32_t element_order(const Group& g, Element x) {
  std::uint32_t m = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++m;
  return m;
}

// ---- subgroups ------------------------------------------------------------

GeneratedSubgroup generated_subgroup(const Group& g, std::span<const Element> gens) {
  const std::size_t n = g.order();
  std::vector<std::int64_t> slot(n, -1);
  std::vector<Element> order_found{g.identity()};
  std::vector<std::vector<std::uint32_t>> words{{}};
  slot[g.identity()] = 0;
  for (std::size_t i = 0; i < order_found.size(); ++i) {
    for (std::uint32_t j = 0; j < gens.size(); ++j) {
      Element y = g.mul(order_found[i], gens[j]);
      if (slot[y] < 0) {
        slot[y] = static_cast<std::int64_t>(order_found.size());
        order_found.push_back(y);
        auto w = words[i];
        w.push_back(j);
        words.push_back(std::move(w));
      }
    }
  }
  GeneratedSubgroup out;
  out.elements = ElementSet::from_elements(n, order_found);
  out.words.reserve(order_found.size());
  for (Element e : out.elements.elements())
    out.words.push_back(std::move(words[static_cast<std::size_t>(slot[e])]));
  return out;
}

ElementSet generate(const Group& g, std::span<const Element> gens) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> in(n, 0);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = 1;
  std::vector<Element> useful;
  for (Element s : gens) {
    if (in[s]) continue;
    useful.push_back(s);
    // Restart the closure from every member with the enlarged generator list.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Element u : useful) {
        Element y = g.mul(members[i], u);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  return ElementSet::from_bitmap(std::move(in));
}

bool is_subgroup(const Group& g, const ElementSet& s) {
  if (!s.contains(g.identity())) return false;
  for (Element a : s.elements())
    for (Element b : s.elements())
      if (!s.contains(g.mul(a, b))) return false;
  return true;
}

bool is_normal(const Group& g, const ElementSet& s) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    Element xi = g.inv(static_cast<Element>(x));
    for (Element a : s.elements())
      if (!s.contains(g.mul(g.mul(static_cast<Element>(x), a), xi))) return false;
  }
  return true;
}

ElementSet centralizer(const Group& g, Element x) {
  std::vector<std::uint8_t> in(g.order(), 0);
  for (std::size_t y = 0; y < g.order(); ++y)
    in[y] = g.mul(x, static_cast<Element>(y)) == g.mul(static_cast<Element>(y), x);
  return ElementSet::from_bitmap(std::move(in));
}

ElementSet center(const Group& g) {
  std::vector<std::uint8_t> in(g.order(), 1);
  for (std::size_t y = 0; y < g.order(); ++y)
    for (std::size_t x = 0; x < g.order() && in[y]; ++x)
      in[y] = g.mul(static_cast<Element>(x), static_cast<Element>(y)) ==
              g.mul(static_cast<Element>(y), static_cast<Element>(x));
  return ElementSet::from_bitmap(std::move(in));
}

ElementSet commutator_subgroup(const Group& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) throw Error(ErrorCode::kNotASubgroup, "set is not closed");
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<Element> comms;
  for (Element a : s.elements()) {
    Element ai = g.inv(a);
    for (Element b : s.elements()) {
      Element c = g.mul(g.mul(ai, g.inv(b)), g.mul(a, b));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  }
  return generate(g, comms);
}

DerivedSeries derived_series(const Group& g) {
  DerivedSeries ds;
  ds.subgroups.push_back(ElementSet::full(g.order()));
  while (true) {
    const ElementSet& cur = ds.subgroups.back();
    if (cur.size() == 1) {
      ds.solvability_class = ds.subgroups.size() - 1;
      break;
    }
    ElementSet next = commutator_subgroup(g, cur);
    if (next.size() == cur.size()) break;
    ds.subgroups.push_back(std::move(next));
  }
  return ds;
}

std::vector<ElementSet> conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> done(n, 0);
  std::vector<ElementSet> classes;
  for (std::size_t a = 0; a < n; ++a) {
    if (done[a]) continue;
    std::vector<std::uint8_t> in(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      Element c = g.mul(g.mul(static_cast<Element>(x), static_cast<Element>(a)),
                        g.inv(static_cast<Element>(x)));
      in[c] = 1;
      done[c] = 1;
    }
    classes.push_back(ElementSet::from_bitmap(std::move(in)));
  }
  return classes;
}

ElementSet normal_closure(const Group& g, const ElementSet& s, const ElementSet* within) {
  const std::size_t n = g.order();
  std::vector<Element> conj_by;
  if (within) {
    conj_by = within->elements();
  } else {
    conj_by.resize(n);
    std::iota(conj_by.begin(), conj_by.end(), Element{0});
  }
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Element> gens;
  for (Element a : s.elements()) {
    for (Element x : conj_by) {
      Element c = g.mul(g.mul(x, a), g.inv(x));
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  }
  return generate(g, gens);
}

namespace {

std::vector<ElementSet> minimal_among(std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ElementSet> minimal;
  for (auto& s : sets) {
    bool has_smaller = false;
    for (const auto& m : minimal)
      if (m.is_subset_of(s)) {
        has_smaller = true;
        break;
      }
    if (!has_smaller) minimal.push_back(std::move(s));
  }
  return minimal;
}

}  // namespace

std::vector<ElementSet> minimal_normal_subgroups(const Group& g, std::size_t cap) {
  if (g.order() > cap)
    throw Error(ErrorCode::kTooLarge,
                "order " + std::to_string(g.order()) + " above socle cap " + std::to_string(cap));
  // ncl(x) only depends on the conjugacy class of x.
  std::vector<ElementSet> closures;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.contains(g.identity())) continue;
    closures.push_back(normal_closure(g, ElementSet::from_elements(g.order(),
                                                                  std::span(cls.elements()).first(1))));
  }
  return minimal_among(std::move(closures));
}

ElementSet socle(const Group& g, std::size_t cap) {
  std::vector<Element> gens;
  for (const auto& m : minimal_normal_subgroups(g, cap))
    gens.insert(gens.end(), m.elements().begin(), m.elements().end());
  return generate(g, gens);
}

std::vector<ElementSet> socle_factors(const Group& g, std::size_t cap) {
  std::vector<ElementSet> factors;
  for (const auto& m : minimal_normal_subgroups(g, cap)) {
    bool abelian = true;
    for (Element a : m.elements())
      for (Element b : m.elements())
        if (g.mul(a, b) != g.mul(b, a)) {
          abelian = false;
          break;
        }
    if (abelian)
      throw Error(ErrorCode::kNotSemisimple, "socle has an Abelian minimal normal subgroup");
    // A non-Abelian minimal normal subgroup is S^k; its simple factors are
    // its own minimal normal subgroups.
    std::vector<ElementSet> closures;
    for (Element x : m.elements()) {
      if (x == g.identity()) continue;
      closures.push_back(normal_closure(g, ElementSet::from_elements(g.order(), std::span(&x, 1)), &m));
    }
    for (auto& f : minimal_among(std::move(closures))) factors.push_back(std::move(f));
  }
  std::sort(factors.begin(), factors.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.elements() < b.elements();
  });
  return factors;
}

Group permuted_copy(const Group& g, std::span<const Element> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw Error(ErrorCode::kInvalidArgument, "permutation has wrong size");
  std::vector<std::uint8_t> hit(n, 0);
  for (Element p : perm) {
    if (p >= n || hit[p]) throw Error(ErrorCode::kInvalidArgument, "not a permutation");
    hit[p] = 1;
  }
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[std::size_t{perm[a]} * n + perm[b]] =
          perm[g.mul(static_cast<Element>(a), static_cast<Element>(b))];
  return validate_cayley(n, std::move(t));
}

Group subgroup_as_group(const Group& g, const ElementSet& s) {
  const std::size_t m = s.size();
  std::vector<Element> pos(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) pos[s.elements()[i]] = static_cast<Element>(i);
  std::vector<Element> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Element p = g.mul(s.elements()[i], s.elements()[j]);
      if (!s.contains(p)) throw Error(ErrorCode::kNotASubgroup, "set is not closed");
      t[i * m + j] = pos[p];
    }
  return validate_cayley(m, std::move(t));
}

}  // namespace grpwl
