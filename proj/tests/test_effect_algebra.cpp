#include <gtest/gtest.h>

#include <random>

#include "effalg/effect_algebra.hpp"
#include "effalg/enumerate.hpp"

using namespace effalg;

TEST(EffectAlgebra, ChainTable) {
  const auto c3 = EffectAlgebra::chain(3);
  EXPECT_EQ(c3.size(), 4);
  EXPECT_EQ(c3.one(), 3);
  EXPECT_EQ(c3.sum(1, 2), std::optional<Elem>(3));
  EXPECT_FALSE(c3.sum(2, 2));
  EXPECT_EQ(c3.complement(1), 2);
  EXPECT_TRUE(c3.leq(1, 2));
  EXPECT_EQ(c3.minus(3, 1), std::optional<Elem>(2));
}

TEST(EffectAlgebra, BooleanAlgebraOrderIsInclusion) {
  const auto b3 = EffectAlgebra::boolean(3);
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) EXPECT_EQ(b3.leq(a, b), (a & b) == a);
}

TEST(EffectAlgebra, RejectsNonCommutativeTable) {
  PartialTable t(3, 2);
  for (Elem a = 0; a < 3; ++a) t.at(0, a) = a, t.at(a, 0) = a;
  t.at(1, 1) = 2;
  EXPECT_NO_THROW(EffectAlgebra{t});
  t.at(1, 1).reset();
  const auto r = validate_effect_algebra(t);
  EXPECT_FALSE(r.valid());
  EXPECT_THROW(EffectAlgebra{t}, InvalidAlgebra);
}

TEST(EffectAlgebra, ValidatorFlagsEachKindOfBreakage) {
  // 1 (+) 1 = 1 breaks cancellation; 1 (+) 2 without 2 (+) 1 breaks commutativity
  PartialTable t = PartialTable(3, 2);
  for (Elem a = 0; a < 3; ++a) t.at(0, a) = a, t.at(a, 0) = a;
  t.at(1, 1) = 1;
  EXPECT_FALSE(validate_effect_algebra(t).valid());
  PartialTable u(4, 3);
  for (Elem a = 0; a < 4; ++a) u.at(0, a) = a, u.at(a, 0) = a;
  u.at(1, 2) = 3;
  EXPECT_FALSE(validate_effect_algebra(u).valid());
}

TEST(EffectAlgebra, Mo2IsHorizontalSumAndFailsRdp) {
  const auto m = mo2();
  EXPECT_EQ(m.size(), 4);
  const auto r = check_rdp(m);
  EXPECT_FALSE(r.pass());
  EXPECT_TRUE(r.forms_agree());
}

TEST(EffectAlgebra, ChainsAndBooleanAlgebrasHaveRdp) {
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(check_rdp(EffectAlgebra::chain(n)).pass()) << n;
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(check_rdp(EffectAlgebra::boolean(n)).pass()) << n;
}

TEST(EffectAlgebra, RdpFormsAgreeOnCorpus) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& e : enumerate_effect_algebras(n).algebras) EXPECT_TRUE(check_rdp(e).forms_agree());
}

TEST(EffectAlgebra, VolIdentityHoldsOnCorpus) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& e : enumerate_effect_algebras(n).algebras) EXPECT_FALSE(check_vol_identity(e).has_value());
}

TEST(EffectAlgebra, OrderPropertiesOnCorpus) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& e : enumerate_effect_algebras(n).algebras)
      for (Elem a : e.elements()) {
        EXPECT_TRUE(e.leq(0, a));
        EXPECT_TRUE(e.leq(a, e.one()));
        EXPECT_EQ(e.complement(e.complement(a)), a);
        EXPECT_EQ(e.sum(a, e.complement(a)), std::optional<Elem>(e.one()));
        for (Elem b : e.elements())
          if (e.leq(a, b) && e.leq(b, a)) {
            EXPECT_EQ(a, b);
          }
      }
}

TEST(EffectAlgebra, RelabelPreservesIsomorphismClass) {
  std::mt19937_64 rng(3);
  const auto b2 = EffectAlgebra::boolean(2);
  std::vector<Elem> perm{0, 2, 1, 3};
  EXPECT_TRUE(is_isomorphic(b2, b2.relabel(perm)));
  const auto e = horizontal_sum(EffectAlgebra::chain(2), EffectAlgebra::chain(3));
  std::vector<Elem> p = e.elements();
  std::shuffle(p.begin() + 1, p.end(), rng);  // 0 stays the zero
  EXPECT_TRUE(is_isomorphic(e, e.relabel(p)));
  EXPECT_FALSE(is_isomorphic(EffectAlgebra::chain(3), b2));
}
