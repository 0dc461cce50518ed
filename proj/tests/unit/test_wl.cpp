#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <memory>
#include <set>

#include "grpwl/constructors.hpp"
#include "grpwl/error.hpp"
#include "grpwl/graph.hpp"
#include "grpwl/marked.hpp"
#include "grpwl/wl.hpp"
#include "oracles.hpp"

using namespace grpwl;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

// Reference folklore k-WL on several structures at once, with a std::map
// assigning shared ids. Version II initial classes come from pairwise marked
// equivalence against class representatives.
struct Naive {
  struct Input {
    const Group* group = nullptr;
    const Graph* graph = nullptr;
    int version = 1;
    std::size_t n() const { return group ? group->order() : graph->num_vertices(); }
  };

  std::size_t k;
  bool counting;
  std::vector<Input> inputs;
  std::vector<std::vector<int>> colors;

  std::vector<Element> tuple(std::size_t n, std::size_t t) const {
    std::vector<Element> u(k);
    for (std::size_t i = k; i-- > 0; t /= n) u[i] = static_cast<Element>(t % n);
    return u;
  }

  void initialize() {
    std::map<std::vector<int>, int> ids;
    std::vector<std::pair<const Group*, std::vector<Element>>> v2_reps;
    colors.assign(inputs.size(), {});
    for (std::size_t s = 0; s < inputs.size(); ++s) {
      const Input& in = inputs[s];
      std::size_t n = in.n(), total = 1;
      for (std::size_t i = 0; i < k; ++i) total *= n;
      for (std::size_t t = 0; t < total; ++t) {
        auto u = tuple(n, t);
        std::vector<int> key;
        if (in.graph) {
          key.push_back(-1);
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
              key.push_back(u[i] == u[j] ? 2 : in.graph->adjacent(u[i], u[j]) ? 1 : 0);
        } else if (in.version == 1) {
          key.push_back(-2);
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
              key.push_back(u[i] == u[j]);
              for (std::size_t l = 0; l < k; ++l) key.push_back(in.group->mul(u[i], u[j]) == u[l]);
            }
        } else {
          std::size_t rep = 0;
          while (rep < v2_reps.size() &&
                 !marked_equivalent_v2(*v2_reps[rep].first, std::span<const Element>(v2_reps[rep].second),
                                       *in.group, std::span<const Element>(u)))
            ++rep;
          if (rep == v2_reps.size()) v2_reps.emplace_back(in.group, u);
          key = {-3, static_cast<int>(rep)};
        }
        colors[s].push_back(ids.emplace(key, static_cast<int>(ids.size())).first->second);
      }
    }
    relabel(ids);
  }

  // Ids by key order, so both sides share one numbering.
  void relabel(const std::map<std::vector<int>, int>& ids) {
    std::vector<int> rank(ids.size());
    int r = 0;
    for (const auto& [key, id] : ids) rank[id] = r++;
    for (auto& c : colors)
      for (auto& x : c) x = rank[x];
  }

  void refine() {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> next(inputs.size());
    for (std::size_t s = 0; s < inputs.size(); ++s) {
      std::size_t n = inputs[s].n();
      for (std::size_t t = 0; t < colors[s].size(); ++t) {
        auto u = tuple(n, t);
        std::multiset<std::vector<int>> ms;
        for (Element x = 0; x < n; ++x) {
          std::vector<int> row;
          for (std::size_t i = 0; i < k; ++i) {
            auto v = u;
            v[i] = x;
            std::size_t idx = 0;
            for (Element e : v) idx = idx * n + e;
            row.push_back(colors[s][idx]);
          }
          ms.insert(row);
        }
        std::vector<int> key{colors[s][t]};
        std::set<std::vector<int>> seen;
        for (const auto& row : ms) {
          if (!counting && !seen.insert(row).second) continue;
          key.insert(key.end(), row.begin(), row.end());
          key.push_back(-1);
        }
        next[s].push_back(ids.emplace(key, static_cast<int>(ids.size())).first->second);
      }
    }
    colors = std::move(next);
    relabel(ids);
  }

  std::map<int, std::size_t> histogram(std::size_t s) const {
    std::map<int, std::size_t> h;
    for (int c : colors[s]) ++h[c];
    return h;
  }
};

// Same partition, ignoring the actual id values.
bool same_partition(const std::vector<int>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return false;
  std::map<int, std::uint32_t> f;
  std::map<std::uint32_t, int> g;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [it, fresh] = f.emplace(a[i], b[i]);
    auto [jt, fresh2] = g.emplace(b[i], a[i]);
    if (it->second != b[i] || jt->second != a[i]) return false;
  }
  return true;
}

RefinableStructure group_structure(const Group& g, MarkedVersion v) {
  return RefinableStructure::group(std::make_shared<const Group>(g), v);
}

std::size_t distinct(const std::vector<std::uint32_t>& c) {
  return std::set<std::uint32_t>(c.begin(), c.end()).size();
}

}  // namespace

TEST(WlReference, PartitionsMatchRoundByRound) {
  struct Case {
    Group g;
    int version;
    std::size_t k;
  };
  std::vector<Case> cases{{cyclic(6), 1, 2}, {symmetric(3), 1, 2}, {dihedral(4), 2, 2},
                          {dicyclic(2), 1, 3}, {abelian({{2, 4}}), 2, 1}, {dihedral(5), 1, 2}};
  for (const auto& c : cases)
    for (bool counting : {false, true}) {
      Naive ref{c.k, counting, {{&c.g, nullptr, c.version}}, {}};
      ref.initialize();
      auto s = group_structure(c.g, c.version == 1 ? MarkedVersion::kI : MarkedVersion::kII);
      WlMode mode = counting ? WlMode::kCounting : WlMode::kCountFree;
      Coloring col = initial_coloring(s, c.k, 1);
      for (int round = 0; round < 4; ++round) {
        EXPECT_TRUE(same_partition(ref.colors[0], col.color_of))
            << "order " << c.g.order() << " k " << c.k << " round " << round;
        ref.refine();
        col = refine_round(s, col, mode, 1);
      }
    }
}

TEST(WlReference, GraphPartitionsMatch) {
  for (Graph g : {cycle_graph(6), prism_graph(3), path_graph(5)}) {
    Naive ref{2, true, {{nullptr, &g, 1}}, {}};
    ref.initialize();
    auto s = RefinableStructure::graph(std::make_shared<const Graph>(g));
    Coloring col = initial_coloring(s, 2);
    for (int round = 0; round < 4; ++round) {
      EXPECT_TRUE(same_partition(ref.colors[0], col.color_of));
      ref.refine();
      col = refine_round(s, col, WlMode::kCounting);
    }
  }
}

TEST(WlReference, VerdictsMatch) {
  struct Pair {
    Group a, b;
    int version;
  };
  std::vector<Pair> pairs{{cyclic(4), abelian({{2, 2}}), 1}, {dihedral(4), dicyclic(2), 1},
                          {cyclic(6), symmetric(3), 1},      {dihedral(4), dicyclic(2), 2},
                          {cyclic(8), abelian({{2, 4}}), 1}, {abelian({{2, 4}}), dihedral(4), 2}};
  for (const auto& p : pairs)
    for (bool counting : {false, true})
      for (Criterion crit : {Criterion::kSet, Criterion::kMultiset}) {
        Naive ref{2, counting, {{&p.a, nullptr, p.version}, {&p.b, nullptr, p.version}}, {}};
        ref.initialize();
        std::optional<std::size_t> expected;
        for (std::size_t r = 0; r <= 6 && !expected; ++r) {
          auto ha = ref.histogram(0), hb = ref.histogram(1);
          bool differ = false;
          if (crit == Criterion::kMultiset) {
            differ = ha != hb;
          } else {
            std::set<int> ka, kb;
            for (auto& [c, m] : ha) ka.insert(c);
            for (auto& [c, m] : hb) kb.insert(c);
            differ = ka != kb;
          }
          if (differ) expected = r;
          ref.refine();
        }
        WlOptions o;
        o.k = 2;
        o.mode = counting ? WlMode::kCounting : WlMode::kCountFree;
        o.criterion = crit;
        o.rounds = 6;
        MarkedVersion v = p.version == 1 ? MarkedVersion::kI : MarkedVersion::kII;
        Verdict verdict = run(group_structure(p.a, v), group_structure(p.b, v), o).verdict;
        EXPECT_EQ(verdict.distinguished, expected.has_value());
        if (expected) { EXPECT_EQ(verdict.round, expected); }
      }
}

TEST(Wl, Z4VersusKleinAtRoundZero) {
  WlOptions o;
  o.k = 2;
  o.criterion = Criterion::kSet;
  Verdict v = run(group_structure(cyclic(4), MarkedVersion::kI),
                  group_structure(abelian({{2, 2}}), MarkedVersion::kI), o)
                  .verdict;
  EXPECT_TRUE(v.distinguished);
  EXPECT_EQ(v.round, 0u);
}

TEST(Wl, TriangleHasTwoPairClasses) {
  auto s = RefinableStructure::graph(std::make_shared<const Graph>(complete_graph(3)));
  EXPECT_EQ(initial_coloring(s, 2).num_classes(), 2u);
}

TEST(Wl, VersionTwoSingletonsAreElementOrdersForCyclicGroups) {
  Group z12 = cyclic(12);
  Coloring c = initial_coloring(group_structure(z12, MarkedVersion::kII), 1);
  std::set<std::uint32_t> orders;
  for (Element x = 0; x < 12; ++x) orders.insert(oracle::order_of(z12, x));
  EXPECT_EQ(c.num_classes(), orders.size());
  for (Element x = 0; x < 12; ++x)
    for (Element y = 0; y < 12; ++y)
      EXPECT_EQ(c.color_of[x] == c.color_of[y], oracle::order_of(z12, x) == oracle::order_of(z12, y));
}

TEST(Wl, RefinementRefinesAndStabilizes) {
  Group z6 = cyclic(6);
  auto s = group_structure(z6, MarkedVersion::kI);
  Coloring c = initial_coloring(s, 2);
  std::size_t rounds = 0;
  for (;; ++rounds) {
    Coloring next = refine_round(s, c, WlMode::kCounting);
    std::map<std::uint32_t, std::uint32_t> coarse;
    for (std::size_t t = 0; t < c.color_of.size(); ++t) {
      auto [it, fresh] = coarse.emplace(next.color_of[t], c.color_of[t]);
      EXPECT_EQ(it->second, c.color_of[t]);
    }
    if (next.num_classes() == c.num_classes()) break;
    EXPECT_GT(next.num_classes(), c.num_classes());
    c = std::move(next);
  }
  EXPECT_LE(rounds, 6u);
  Coloring again = refine_round(s, c, WlMode::kCounting);
  EXPECT_EQ(again.num_classes(), c.num_classes());
}

TEST(Wl, DiscreteColoringIsStable) {
  auto s = group_structure(cyclic(5), MarkedVersion::kI).individualize(std::vector<Element>{1});
  Coloring c = run_single(s, 2, WlMode::kCountFree, std::nullopt);
  ASSERT_TRUE(c.is_discrete());
  EXPECT_EQ(refine_round(s, c, WlMode::kCountFree).num_classes(), c.num_classes());
}

TEST(Wl, PermutedCopyIsNeverDistinguished) {
  for (Group g : {dihedral(6), dicyclic(3), symmetric(4)}) {
    auto p = oracle::random_permutation(g.order(), g.order());
    Group h = validate_cayley(g.order(), oracle::relabelled_table(g, p));
    for (MarkedVersion v : {MarkedVersion::kI, MarkedVersion::kII}) {
      WlOptions o;
      o.k = 2;
      Verdict verdict = run(group_structure(g, v), group_structure(h, v), o).verdict;
      EXPECT_FALSE(verdict.distinguished);
      EXPECT_TRUE(verdict.reached_stable);
    }
  }
}

TEST(Wl, FamilyPairSetVersusMultiset) {
  auto [g, h] = theorem_family(1, 3);
  auto pg = oracle::order_profile(g), ph = oracle::order_profile(h);
  ASSERT_EQ(pg[2], 63u);
  ASSERT_EQ(ph[2], 31u);
  WlOptions o;
  o.k = 2;
  o.criterion = Criterion::kMultiset;
  o.rounds = 10;
  auto sg = group_structure(g, MarkedVersion::kI), sh = group_structure(h, MarkedVersion::kI);
  WlRun multiset = run(sg, sh, o);
  EXPECT_TRUE(multiset.verdict.distinguished);
  EXPECT_EQ(multiset.verdict.round, 0u);
  o.criterion = Criterion::kSet;
  WlRun set = run(sg, sh, o);
  EXPECT_FALSE(set.verdict.distinguished);
}

TEST(Wl, IndividualizingAGeneratorOfZ6Discretizes) {
  auto s = group_structure(cyclic(6), MarkedVersion::kI).individualize(std::vector<Element>{1});
  Coloring c = run_single(s, 2, WlMode::kCountFree, std::nullopt);
  EXPECT_TRUE(c.is_discrete());
  std::vector<std::uint32_t> diag;
  for (Element x = 0; x < 6; ++x) diag.push_back(c.color_of[x * 6 + x]);
  EXPECT_EQ(distinct(diag), 6u);
}

TEST(Wl, IndividualizingS3GeneratorsDiscretizes) {
  Group s3 = symmetric(3);
  Element t = 0, r = 0;
  for (Element x = 0; x < 6; ++x) {
    if (s3.elt_order(x) == 2) t = x;
    if (s3.elt_order(x) == 3) r = x;
  }
  auto s = group_structure(s3, MarkedVersion::kI).individualize(std::vector<Element>{t, r});
  EXPECT_TRUE(run_single(s, 2, WlMode::kCountFree, std::nullopt).is_discrete());
}

TEST(Wl, IndividualizingTheIdentityStillRefines) {
  Group g = dihedral(4);
  auto base = group_structure(g, MarkedVersion::kI);
  auto ind = base.individualize(std::vector<Element>{g.identity()});
  Coloring a = run_single(base, 2, WlMode::kCountFree, std::nullopt);
  Coloring b = run_single(ind, 2, WlMode::kCountFree, std::nullopt);
  std::map<std::uint32_t, std::uint32_t> coarse;
  for (std::size_t t = 0; t < a.color_of.size(); ++t) {
    auto [it, fresh] = coarse.emplace(b.color_of[t], a.color_of[t]);
    EXPECT_EQ(it->second, a.color_of[t]);
  }
}

TEST(Wl, IndividualizeLimit) {
  auto s = group_structure(cyclic(12), MarkedVersion::kI);
  std::vector<Element> nine(9, 1);
  EXPECT_EQ(code_of([&] { s.individualize(nine); }), ErrorCode::kInvalidArgument);
}

TEST(Wl, ResultsIndependentOfThreads) {
  Group g = symmetric(4);
  auto s = group_structure(g, MarkedVersion::kI);
  Coloring one = run_single(s, 2, WlMode::kCounting, std::nullopt, 1);
  Coloring three = run_single(s, 2, WlMode::kCounting, std::nullopt, 3);
  EXPECT_EQ(one.color_of, three.color_of);
  EXPECT_EQ(one.history.back().digest, three.history.back().digest);
}

TEST(Wl, BudgetExceeded) {
  auto s = group_structure(cyclic(50), MarkedVersion::kI);
  EXPECT_EQ(code_of([&] { initial_coloring(s, 3, 0, 1000); }), ErrorCode::kBudgetExceeded);
}

TEST(Wl, PartitionLabels) {
  std::vector<std::uint32_t> a{5, 5, 2, 9, 2}, b{1, 1, 7, 3, 7};
  EXPECT_EQ(partition_labels(a), partition_labels(b));
  EXPECT_EQ(partition_labels(a), (std::vector<std::uint32_t>{0, 0, 1, 2, 1}));
  EXPECT_EQ(partition_digest(a), partition_digest(b));
}

TEST(Canonize, RelabellingInvariance) {
  CanonizeOptions o;
  for (Group g : {dicyclic(2), dihedral(6), cyclic(9), abelian({{2, 4}}), symmetric(4)}) {
    Certificate c = canonize(g, o);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      auto p = oracle::random_permutation(g.order(), seed);
      Group h = validate_cayley(g.order(), oracle::relabelled_table(g, p));
      EXPECT_EQ(canonize(h, o), c);
      EXPECT_EQ(certificate_digest(canonize(h, o)), certificate_digest(c));
    }
  }
}

TEST(Canonize, CertificateIsAnIsomorphicTable) {
  Group g = dihedral(5);
  Certificate c = canonize(g, CanonizeOptions{});
  Group canon = validate_cayley(c.order, c.table);
  EXPECT_TRUE(oracle::is_homomorphism(g, canon, c.labelling));
  EXPECT_EQ(std::set<Element>(c.labelling.begin(), c.labelling.end()).size(), g.order());
}

TEST(Canonize, SeparatesNonIsomorphicGroups) {
  CanonizeOptions o;
  EXPECT_FALSE(canonize(cyclic(6), o) == canonize(symmetric(3), o));
  EXPECT_FALSE(canonize(dihedral(4), o) == canonize(dicyclic(2), o));
}
