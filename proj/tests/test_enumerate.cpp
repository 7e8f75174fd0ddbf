#include <gtest/gtest.h>

#include "effalg/enumerate.hpp"

using namespace effalg;

TEST(Enumerate, CountsUpToSeven) {
  const std::vector<std::size_t> expected{1, 1, 1, 3, 4, 10, 14};
  for (int n = 1; n <= 7; ++n) {
    const auto r = enumerate_effect_algebras(n);
    EXPECT_TRUE(r.complete);
    EXPECT_EQ(r.algebras.size(), expected[n - 1]) << "size " << n;
  }
}

TEST(Enumerate, AgreesWithNaiveOracle) {
  for (int n = 1; n <= 5; ++n) {
    const auto fast = enumerate_effect_algebras(n).algebras;
    const auto naive = enumerate_effect_algebras_naive(n);
    ASSERT_EQ(fast.size(), naive.size()) << "size " << n;
    for (const auto& e : naive) {
      bool found = false;
      for (const auto& f : fast) found = found || is_isomorphic(e, f);
      EXPECT_TRUE(found);
    }
  }
}

TEST(Enumerate, ClassesArePairwiseNonIsomorphic) {
  for (int n = 4; n <= 7; ++n) {
    const auto v = enumerate_effect_algebras(n).algebras;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) EXPECT_FALSE(is_isomorphic(v[i], v[j]));
  }
}

TEST(Enumerate, OutputIsCanonical) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& e : enumerate_effect_algebras(n).algebras) {
      EXPECT_EQ(canonical_code(e), canonical_code(canonical_form(e)));
      EXPECT_EQ(decode(canonical_code(e)).size(), n);
    }
}

TEST(Enumerate, KnownMembersOfSizeFour) {
  const auto v = enumerate_effect_algebras(4).algebras;
  for (const auto& known : {EffectAlgebra::chain(3), EffectAlgebra::boolean(2), mo2()}) {
    int hits = 0;
    for (const auto& e : v) hits += is_isomorphic(e, known);
    EXPECT_EQ(hits, 1);
  }
}

TEST(Enumerate, FindIsomorphismIsAnIsomorphism) {
  const auto e = horizontal_sum(EffectAlgebra::chain(2), EffectAlgebra::boolean(2));
  const auto f = e.relabel({0, 3, 1, 4, 2});
  const auto iso = find_isomorphism(e, f);
  ASSERT_TRUE(iso.has_value());
  for (Elem a : e.elements())
    for (Elem b : e.elements()) {
      const auto s = e.sum(a, b);
      const auto t = f.sum((*iso)[a], (*iso)[b]);
      ASSERT_EQ(s.has_value(), t.has_value());
      if (s) {
        EXPECT_EQ((*iso)[*s], *t);
      }
    }
}

TEST(Enumerate, TinyBudgetReportsIncomplete) {
  const auto r = enumerate_effect_algebras(7, 5);
  EXPECT_FALSE(r.complete);
}

TEST(Enumerate, RejectsNonPositiveSize) { EXPECT_THROW(enumerate_effect_algebras(0), std::invalid_argument); }
