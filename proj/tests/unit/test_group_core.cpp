#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "grpwl/constructors.hpp"
#include "grpwl/error.hpp"
#include "grpwl/group.hpp"
#include "grpwl/marked.hpp"
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

// All n x n Latin squares with row 0 and column 0 equal to 0..n-1, i.e.
// loops with identity 0.
std::vector<std::vector<Element>> normalized_latin_squares(std::size_t n) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> t(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) t[i] = t[i * n] = static_cast<Element>(i);
  std::function<void(std::size_t)> fill = [&](std::size_t cell) {
    if (cell == n * n) {
      out.push_back(t);
      return;
    }
    std::size_t r = cell / n, c = cell % n;
    if (r == 0 || c == 0) return fill(cell + 1);
    for (Element v = 0; v < n; ++v) {
      bool ok = true;
      for (std::size_t j = 0; j < c && ok; ++j) ok = t[r * n + j] != v;
      for (std::size_t i = 0; i < r && ok; ++i) ok = t[i * n + c] != v;
      if (!ok) continue;
      t[r * n + c] = v;
      fill(cell + 1);
    }
  };
  fill(0);
  return out;
}

}  // namespace

TEST(ValidateCayley, AcceptsZ3) {
  Group g = validate_cayley({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.identity(), 0u);
  EXPECT_EQ(g.inv(1), 2u);
}

TEST(ValidateCayley, RejectsRepeatedEntry) {
  EXPECT_EQ(code_of([] { validate_cayley({{0, 1}, {1, 1}}); }), ErrorCode::kNotLatinSquare);
}

TEST(ValidateCayley, RejectsMissingIdentity) {
  // Z/3 with identity 2 is fine.
  EXPECT_EQ(validate_cayley({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}).identity(), 2u);
  // No row reads 0 1 2, so nothing is a left identity.
  EXPECT_EQ(code_of([] { validate_cayley({{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}); }),
            ErrorCode::kNoIdentity);
}

TEST(ValidateCayley, NonAssociativeFiveByFiveHasRealWitness) {
  // First non-associative loop of order 5 found by brute force.
  auto squares = normalized_latin_squares(5);
  auto it = std::find_if(squares.begin(), squares.end(),
                         [](const auto& t) { return !oracle::associative(5, t); });
  ASSERT_NE(it, squares.end());
  const auto& t = *it;
  try {
    validate_cayley(5, t);
    FAIL() << "accepted a non-associative table";
  } catch (const NotAssociativeError& e) {
    auto [a, b, c] = e.witness();
    EXPECT_NE(t[t[a * 5 + b] * 5 + c], t[a * 5 + t[b * 5 + c]]);
  }
}

TEST(ValidateCayley, LightsTestAgreesWithCubicCheckOnAllLoopsOfOrder5) {
  auto squares = normalized_latin_squares(5);
  EXPECT_EQ(squares.size(), 56u);
  std::size_t groups = 0;
  for (const auto& t : squares) {
    bool brute = oracle::associative(5, t);
    bool accepted = true;
    try {
      validate_cayley(5, t);
    } catch (const NotAssociativeError&) {
      accepted = false;
    }
    EXPECT_EQ(accepted, brute);
    groups += brute;
  }
  // Labelled copies of Z/5 with identity 0: 4! / |Aut(Z/5)| = 6.
  EXPECT_EQ(groups, 6u);
}

TEST(ValidateCayley, RejectsBadShapes) {
  EXPECT_EQ(code_of([] { validate_cayley(2, {0, 1, 1}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { validate_cayley({{0, 1}, {1}}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { validate_cayley({{0, 5}, {5, 0}}); }), ErrorCode::kInvalidArgument);
}

TEST(ElementOrder, Examples) {
  Group z6 = cyclic(6);
  EXPECT_EQ(element_order(z6, 1), 6u);
  EXPECT_EQ(element_order(z6, z6.identity()), 1u);
  Group z2z4 = abelian({{2, 4}});
  EXPECT_EQ(element_order(z2z4, 1 * 4 + 1), 4u);
  for (Element x = 0; x < z2z4.order(); ++x) {
    EXPECT_EQ(z2z4.elt_order(x), oracle::order_of(z2z4, x));
    EXPECT_EQ(z2z4.order() % z2z4.elt_order(x), 0u);
  }
}

TEST(GeneratedSubgroup, Examples) {
  Group z6 = cyclic(6);
  EXPECT_EQ(generated_subgroup(z6, {}).elements.elements(), std::vector<Element>{0});
  EXPECT_EQ(generated_subgroup(z6, std::vector<Element>{2}).elements.elements(),
            (std::vector<Element>{0, 2, 4}));
  Group s3 = symmetric(3);
  Element transposition = 0, three_cycle = 0;
  for (Element x = 0; x < 6; ++x) {
    if (s3.elt_order(x) == 2) transposition = x;
    if (s3.elt_order(x) == 3) three_cycle = x;
  }
  EXPECT_EQ(generated_subgroup(s3, std::vector<Element>{transposition, three_cycle}).elements.size(), 6u);
}

TEST(GeneratedSubgroup, WordsEvaluateToTheirElements) {
  Group g = dihedral(5);
  std::vector<Element> gens{1, 5};
  auto sub = generated_subgroup(g, gens);
  ASSERT_EQ(sub.elements.size(), 10u);
  for (std::size_t i = 0; i < sub.words.size(); ++i) {
    Element x = g.identity();
    for (auto pos : sub.words[i]) x = g.mul(x, gens[pos]);
    EXPECT_EQ(x, sub.elements.elements()[i]);
  }
  EXPECT_EQ(oracle::closure(g, gens), sub.elements.elements());
}

TEST(Centralizer, MatchesBruteForce) {
  for (Group g : {symmetric(3), dihedral(4), dicyclic(2), abelian({{2, 4}}), alternating(4)}) {
    for (Element x = 0; x < g.order(); ++x) EXPECT_EQ(centralizer(g, x).elements(), oracle::centralizer(g, x));
    EXPECT_EQ(center(g).elements(), oracle::center(g));
  }
  Group s3 = symmetric(3);
  for (Element x = 0; x < 6; ++x)
    if (s3.elt_order(x) == 2) { EXPECT_EQ(centralizer(s3, x).size(), 2u); }
  EXPECT_EQ(center(s3).size(), 1u);
}

TEST(DerivedSeries, Examples) {
  auto s3 = derived_series(symmetric(3));
  ASSERT_EQ(s3.subgroups.size(), 3u);
  EXPECT_EQ(s3.subgroups[0].size(), 6u);
  EXPECT_EQ(s3.subgroups[1].size(), 3u);
  EXPECT_EQ(s3.subgroups[2].size(), 1u);
  EXPECT_EQ(s3.solvability_class, 2u);

  EXPECT_LE(derived_series(abelian({{2, 2, 3}})).solvability_class.value(), 1u);
  auto a5 = derived_series(alternating(5));
  EXPECT_FALSE(a5.solvability_class.has_value());
  EXPECT_EQ(a5.subgroups.back().size(), 60u);
}

TEST(NormalClosure, Examples) {
  Group s3 = symmetric(3);
  for (Element x = 0; x < 6; ++x) {
    auto ncl = normal_closure(s3, ElementSet::from_elements(6, std::vector<Element>{x}));
    if (s3.elt_order(x) == 3) { EXPECT_EQ(ncl.size(), 3u); }
    if (s3.elt_order(x) == 2) { EXPECT_EQ(ncl.size(), 6u); }
  }
  // A subset of the first factor of G x H stays inside it.
  Group gh = direct_product(symmetric(3), cyclic(2));
  ElementSet first = ElementSet::from_elements(12, std::vector<Element>{2});  // (s, 0)
  auto ncl = normal_closure(gh, first);
  for (Element x : ncl.elements()) EXPECT_EQ(x % 2, 0u);
}

TEST(Socle, Examples) {
  EXPECT_EQ(socle(cyclic(12)).size(), 6u);
  EXPECT_EQ(socle(alternating(5)).size(), 60u);
  Group s4 = symmetric(4);
  auto soc = socle(s4);
  EXPECT_EQ(soc.size(), 4u);
  for (Element x : soc.elements()) EXPECT_LE(s4.elt_order(x), 2u);
  EXPECT_EQ(socle_factors(direct_product(alternating(5), alternating(5))).size(), 2u);
}

TEST(Socle, AbelianMinimalNormalIsNotSemisimple) {
  EXPECT_EQ(code_of([] { socle_factors(symmetric(4)); }), ErrorCode::kNotSemisimple);
}

TEST(ConjugacyClasses, CountMatchesBruteForce) {
  for (Group g : {symmetric(4), dihedral(6), dicyclic(3), alternating(5)}) {
    auto cls = conjugacy_classes(g);
    EXPECT_EQ(cls.size(), oracle::conjugacy_class_count(g));
    std::size_t total = 0;
    for (const auto& c : cls) total += c.size();
    EXPECT_EQ(total, g.order());
  }
}

TEST(MarkedEquivalence, Examples) {
  Group z4 = cyclic(4), v4 = abelian({{2, 2}}), z5 = cyclic(5);
  std::vector<Element> u{1, 2};
  EXPECT_TRUE(marked_equivalent(z4, std::span<const Element>(u), z4, std::span<const Element>(u), MarkedVersion::kI));
  EXPECT_TRUE(marked_equivalent(z4, std::span<const Element>(u), z4, std::span<const Element>(u), MarkedVersion::kII));
  std::vector<Element> gen{1};
  for (Element y = 0; y < 4; ++y) {
    std::vector<Element> v{y};
    EXPECT_FALSE(marked_equivalent_v2(z4, std::span<const Element>(gen), v4, std::span<const Element>(v)));
  }
  std::vector<Element> one{1}, two{2};
  EXPECT_TRUE(marked_equivalent_v2(z5, std::span<const Element>(one), z5, std::span<const Element>(two)));
}

TEST(MarkedEquivalence, VersionTwoMatchesExplicitMapCheck) {
  // Pairs of tuples in S3: v2 holds iff u_i -> v_i extends to an isomorphism.
  Group s3 = symmetric(3);
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b)
      for (Element c = 0; c < 6; ++c)
        for (Element d = 0; d < 6; ++d) {
          std::vector<Element> u{a, b}, v{c, d};
          auto su = oracle::closure(s3, u), sv = oracle::closure(s3, v);
          bool expected = false;
          if (su.size() == sv.size()) {
            // Words in u evaluate to the same positions as words in v.
            expected = true;
            std::vector<std::pair<Element, Element>> pairs{{s3.identity(), s3.identity()}};
            std::vector<int> seen_u(6, -1), seen_v(6, -1);
            seen_u[s3.identity()] = s3.identity();
            seen_v[s3.identity()] = s3.identity();
            for (std::size_t i = 0; i < pairs.size() && expected; ++i)
              for (std::size_t j = 0; j < 2 && expected; ++j) {
                Element x = s3.mul(pairs[i].first, u[j]), y = s3.mul(pairs[i].second, v[j]);
                if (seen_u[x] < 0 && seen_v[y] < 0) {
                  seen_u[x] = static_cast<int>(y);
                  seen_v[y] = static_cast<int>(x);
                  pairs.emplace_back(x, y);
                } else if (seen_u[x] != static_cast<int>(y) || seen_v[y] != static_cast<int>(x)) {
                  expected = false;
                }
              }
          }
          EXPECT_EQ(marked_equivalent_v2(s3, std::span<const Element>(u), s3, std::span<const Element>(v)), expected);
        }
}

TEST(PermutedCopy, IdentityAndIdentityMoves) {
  Group g = dihedral(4);
  std::vector<Element> id(8);
  for (Element i = 0; i < 8; ++i) id[i] = i;
  EXPECT_EQ(permuted_copy(g, id), g);

  std::vector<Element> swap = id;
  std::swap(swap[0], swap[3]);
  Group h = permuted_copy(g, swap);
  EXPECT_EQ(h.identity(), 3u);
  EXPECT_TRUE(oracle::isomorphic(g, h));
  auto expected = oracle::relabelled_table(g, swap);
  EXPECT_TRUE(std::equal(expected.begin(), expected.end(), h.table().begin()));
}

TEST(Exponent, Examples) {
  EXPECT_EQ(abelian({{2, 2, 4}}).exponent(), 4u);
  EXPECT_EQ(symmetric(4).exponent(), 12u);
  EXPECT_TRUE(cyclic(7).is_abelian());
  EXPECT_FALSE(dicyclic(2).is_abelian());
}
