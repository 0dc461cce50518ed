#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "grpwl/constructors.hpp"
#include "grpwl/error.hpp"
#include "grpwl/graph.hpp"
#include "grpwl/mekler.hpp"
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

Graph two_isolated() { return empty_graph(2); }

// Multiplies normal forms by writing both as words in single generator
// letters and bubble-sorting them. Swapping x_i x_j (i > j) into x_j x_i
// leaves [x_i, x_j] = [x_j, x_i]^-1 behind, which is central.
MeklerElement rewrite_product(const MeklerGroup& m, const MeklerElement& x, const MeklerElement& y) {
  const std::uint32_t p = m.prime();
  std::vector<Vertex> word;
  for (const auto* e : {&x, &y})
    for (Vertex v = 0; v < m.num_vertices(); ++v)
      for (std::uint32_t k = 0; k < e->gen[v]; ++k) word.push_back(v);
  std::vector<std::uint32_t> comm(m.non_edges().size());
  for (std::size_t k = 0; k < comm.size(); ++k) comm[k] = (x.comm[k] + y.comm[k]) % p;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t t = 0; t + 1 < word.size(); ++t) {
      Vertex i = word[t], j = word[t + 1];
      if (i <= j) continue;
      std::swap(word[t], word[t + 1]);
      swapped = true;
      if (!m.graph().adjacent(i, j)) {
        std::size_t k = 0;
        while (m.non_edges()[k] != Edge{j, i}) ++k;
        comm[k] = (comm[k] + p - 1) % p;
      }
    }
  }
  MeklerElement out{std::vector<std::uint32_t>(m.num_vertices(), 0), comm};
  for (Vertex v : word) out.gen[v] = (out.gen[v] + 1) % p;
  return out;
}

MeklerElement random_element(const MeklerGroup& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, m.prime() - 1);
  MeklerElement e{std::vector<std::uint32_t>(m.num_vertices()), std::vector<std::uint32_t>(m.non_edges().size())};
  for (auto& a : e.gen) a = d(rng);
  for (auto& a : e.comm) a = d(rng);
  return e;
}

std::vector<Element> subgroup_indices(const MeklerGroup& m, const MeklerSubgroup& s) {
  auto idx = closure(m, s.generators);
  return std::vector<Element>(idx.begin(), idx.end());
}

}  // namespace

TEST(Mekler, Orders) {
  EXPECT_EQ(MeklerGroup(path_graph(3), 3).order(), 81u);
  EXPECT_EQ(MeklerGroup(complete_graph(4), 3).order(), 81u);
  EXPECT_EQ(MeklerGroup(two_isolated(), 3).order(), 27u);
  // |F_{n,p}| = p^{n + n(n-1)/2} for the empty graph.
  EXPECT_EQ(MeklerGroup(empty_graph(4), 5).order_exponent(), 4u + 6u);
}

TEST(Mekler, RejectsBadPrimes) {
  EXPECT_EQ(code_of([] { MeklerGroup(path_graph(3), 2); }), ErrorCode::kBadPrime);
  EXPECT_EQ(code_of([] { MeklerGroup(path_graph(3), 9); }), ErrorCode::kBadPrime);
}

TEST(Mekler, MultiplyExamples) {
  MeklerGroup m(path_graph(3), 3);
  MeklerElement x1 = m.generator(0), x3 = m.generator(2);
  EXPECT_EQ(m.multiply(x1, m.identity()), x1);
  EXPECT_EQ(m.multiply(x1, x1).gen, (std::vector<std::uint32_t>{2, 0, 0}));
  EXPECT_EQ(m.multiply(x1, x1).comm, (std::vector<std::uint32_t>{0}));
  MeklerElement p = m.multiply(x3, x1);
  EXPECT_EQ(p.gen, (std::vector<std::uint32_t>{1, 0, 1}));
  ASSERT_EQ(m.non_edges(), (std::vector<Edge>{{0, 2}}));
  EXPECT_EQ(p.comm, (std::vector<std::uint32_t>{2}));
  EXPECT_EQ(rewrite_product(m, x3, x1), p);
}

TEST(Mekler, MultiplyMatchesWordRewriting) {
  std::mt19937_64 rng(5);
  for (Graph g : {path_graph(3), empty_graph(3), cycle_graph(4), path_graph(4)})
    for (std::uint32_t p : {3u, 5u}) {
      MeklerGroup m(g, p);
      for (int t = 0; t < 200; ++t) {
        auto x = random_element(m, rng), y = random_element(m, rng);
        EXPECT_EQ(m.multiply(x, y), rewrite_product(m, x, y));
      }
    }
}

TEST(Mekler, CommutatorBasisConvention) {
  MeklerGroup m(empty_graph(3), 3);
  for (std::size_t k = 0; k < m.non_edges().size(); ++k) {
    auto [j, i] = m.non_edges()[k];
    EXPECT_EQ(m.commutator(m.generator(j), m.generator(i)), m.commutator_basis(k));
  }
}

TEST(Mekler, IndexRoundTripIsOrderPreserving) {
  MeklerGroup m(path_graph(3), 3);
  for (std::uint64_t i = 0; i < m.order(); ++i) {
    EXPECT_EQ(m.index(m.element(i)), i);
    if (i) { EXPECT_LT(m.element(i - 1), m.element(i)); }
  }
}

TEST(Mekler, CommuteIffEdge) {
  for (Graph g : {path_graph(4), cycle_graph(4), complete_graph(3)}) {
    MeklerGroup m(g, 3);
    for (Vertex u = 0; u < g.num_vertices(); ++u)
      for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (u != v) { EXPECT_EQ(m.commute(m.generator(u), m.generator(v)), g.adjacent(u, v)); }
  }
}

TEST(Mekler, SupportAndSubWord) {
  MeklerGroup m(path_graph(3), 3);
  EXPECT_TRUE(support(m, m.identity()).empty());
  MeklerElement x{{2, 0, 1}, {1}};
  EXPECT_EQ(support(m, x), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(sub_word(m, x, {0}), (MeklerElement{{2, 0, 0}, {0}}));
}

TEST(Mekler, TableIsExponentThree) {
  MeklerGroup m(path_graph(3), 3);
  Group t = m.to_cayley();
  EXPECT_EQ(t.order(), 81u);
  for (Element x = 0; x < 81; ++x) EXPECT_EQ(oracle::order_of(t, x), x == t.identity() ? 1u : 3u);
  // Table agrees with the implicit product.
  for (Element a = 0; a < 81; a += 7)
    for (Element b = 0; b < 81; b += 5) EXPECT_EQ(t.mul(a, b), m.index(m.multiply(m.element(a), m.element(b))));
}

TEST(Mekler, CompleteGraphIsElementaryAbelian) {
  EXPECT_TRUE(oracle::isomorphic(MeklerGroup(complete_graph(3), 3).to_cayley(), abelian({{3, 3, 3}})));
}

TEST(Mekler, TwoIsolatedVerticesGiveHeisenberg) {
  // Upper unitriangular 3x3 matrices over F_3, coded as (a, b, c).
  std::vector<std::vector<Element>> rows(27, std::vector<Element>(27));
  auto code = [](int a, int b, int c) { return static_cast<Element>(9 * a + 3 * b + c); };
  for (int x = 0; x < 27; ++x)
    for (int y = 0; y < 27; ++y) {
      int a = x / 9, b = x / 3 % 3, c = x % 3, a2 = y / 9, b2 = y / 3 % 3, c2 = y % 3;
      rows[x][y] = code((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3);
    }
  Group heis = validate_cayley(rows);
  Group t = MeklerGroup(two_isolated(), 3).to_cayley();
  EXPECT_FALSE(t.is_abelian());
  EXPECT_EQ(t.exponent(), 3u);
  EXPECT_TRUE(oracle::isomorphic(t, heis));
}

TEST(Mekler, CentralizerFormulaMatchesBruteForce) {
  for (Graph g : {path_graph(3), two_isolated(), empty_graph(3), complete_graph(3)}) {
    MeklerGroup m(g, 3);
    Group t = m.to_cayley();
    for (Element x = 0; x < t.order(); ++x)
      EXPECT_EQ(subgroup_indices(m, centralizer_formula(m, m.element(x))), oracle::centralizer(t, x));
    EXPECT_EQ(subgroup_indices(m, center_of(m)), oracle::center(t));
  }
}

TEST(Mekler, CentralizerExamples) {
  MeklerGroup p3(path_graph(3), 3);
  EXPECT_EQ(subgroup_indices(p3, centralizer_formula(p3, p3.generator(0))).size(), 27u);
  EXPECT_EQ(subgroup_indices(p3, center_of(p3)).size(), 9u);

  MeklerGroup e2(two_isolated(), 3);
  MeklerElement x1x2{{1, 1}, {0}};
  // <x1 x2> G', order 9.
  EXPECT_EQ(subgroup_indices(e2, centralizer_formula(e2, x1x2)).size(), 9u);

  // No dominating vertex: Z = G'.
  MeklerGroup c4(cycle_graph(4), 3);
  EXPECT_EQ(subgroup_indices(c4, center_of(c4)).size(), 9u);

  MeklerGroup k3(complete_graph(3), 3);
  EXPECT_EQ(subgroup_indices(k3, center_of(k3)).size(), 27u);
}

TEST(Mekler, ImplicitAxiomCheck) {
  EXPECT_NO_THROW(verify_axioms_implicit(MeklerGroup(path_graph(4), 3)));
  EXPECT_NO_THROW(verify_axioms_implicit(MeklerGroup(empty_graph(3), 5)));
}

TEST(Mekler, CayleyCap) {
  MeklerGroup m(empty_graph(4), 3);
  EXPECT_EQ(code_of([&] { m.to_cayley(1000); }), ErrorCode::kCapExceeded);
}
