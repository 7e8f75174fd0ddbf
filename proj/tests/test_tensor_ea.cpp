#include <gtest/gtest.h>

#include "effalg/enumerate.hpp"
#include "effalg/tensor_ea.hpp"

using namespace effalg;

namespace {

TensorCandidate tensor(const EffectAlgebra& e, const EffectAlgebra& f) {
  const TensorSaturation t = saturate_tensor(e, f);
  EXPECT_EQ(t.saturation.status, SaturationStatus::ok);
  return *t.candidate;
}

}  // namespace

TEST(TensorEa, ChainsMultiply) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const TensorCandidate c = tensor(EffectAlgebra::chain(m), EffectAlgebra::chain(n));
      EXPECT_TRUE(is_isomorphic(c.algebra, EffectAlgebra::chain(m * n))) << m << " " << n;
    }
}

TEST(TensorEa, BooleanAlgebrasMultiply) {
  const TensorCandidate c = tensor(EffectAlgebra::boolean(2), EffectAlgebra::boolean(2));
  EXPECT_TRUE(is_isomorphic(c.algebra, EffectAlgebra::boolean(4)));
}

TEST(TensorEa, TwoIsTheUnit) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& e : enumerate_effect_algebras(n).algebras) {
      EXPECT_TRUE(is_isomorphic(tensor(EffectAlgebra::two_element(), e).algebra, e));
      EXPECT_TRUE(is_isomorphic(tensor(e, EffectAlgebra::two_element()).algebra, e));
    }
}

TEST(TensorEa, OneElementAbsorbs) {
  const TensorCandidate c = tensor(EffectAlgebra::one_element(), EffectAlgebra::chain(3));
  EXPECT_EQ(c.algebra.size(), 1);
}

TEST(TensorEa, BetaIsBimorphismAndGenerates) {
  const TensorCandidate c = tensor(mo2(), EffectAlgebra::chain(2));
  EXPECT_TRUE(validate_morphism(c.beta).valid());
  EXPECT_TRUE(ungenerated_elements(c).empty());
}

TEST(TensorEa, SymmetryIsIsomorphism) {
  const auto e = EffectAlgebra::boolean(2), f = EffectAlgebra::chain(3);
  const HomFactorization s = symmetry(tensor(e, f), tensor(f, e));
  ASSERT_EQ(s.solutions, 1u);
  EXPECT_TRUE(is_ea_isomorphism(*s.map));
}

TEST(TensorEa, TensorOfHomsIsFunctorial) {
  const auto c1 = EffectAlgebra::chain(1), c2 = EffectAlgebra::chain(2), b2 = EffectAlgebra::boolean(2);
  const auto g = enumerate_morphisms(c1, c2, MorphismKind::ea).at(0);
  const auto h = identity_morphism(b2);
  const HomFactorization gh = tensor_of_homs(g, h, tensor(c1, b2), tensor(c2, b2));
  ASSERT_EQ(gh.solutions, 1u);
  EXPECT_TRUE(validate_morphism(*gh.map).valid());
  const HomFactorization id = tensor_of_homs(identity_morphism(c2), h, tensor(c2, b2), tensor(c2, b2));
  ASSERT_EQ(id.solutions, 1u);
  EXPECT_EQ(id.map->map, id.map->domain.elements());
}

TEST(TensorEa, CertifiesSmallProducts) {
  for (const auto& [e, f] : {std::pair{EffectAlgebra::chain(2), EffectAlgebra::chain(2)},
                             std::pair{EffectAlgebra::boolean(2), EffectAlgebra::chain(1)}}) {
    const CertificationReport r = certify_universal(tensor(e, f), 5);
    EXPECT_TRUE(r.certified());
    EXPECT_EQ(r.bound, 5);
    EXPECT_GT(r.targets, 0u);
  }
}

TEST(TensorEa, RefutesForgedCandidates) {
  // 2 (x) 2 claimed to be C_2: the middle element is not generated
  const auto two = EffectAlgebra::two_element(), c2 = EffectAlgebra::chain(2);
  const TensorCandidate bloated{two, two, c2, Bimorphism{two, two, c2, {0, 0, 0, 2}}};
  ASSERT_TRUE(validate_morphism(bloated.beta).valid());
  const CertificationReport r = certify_universal(bloated, 4);
  EXPECT_FALSE(r.certified());
  EXPECT_FALSE(r.ungenerated.empty());
  EXPECT_TRUE(replay_refutation(bloated, r));

  // B_2 (x) 2 claimed to be C_2 through a state: generated, but not universal
  const auto b2 = EffectAlgebra::boolean(2);
  const TensorCandidate collapsed{b2, two, c2, Bimorphism{b2, two, c2, {0, 0, 0, 1, 0, 1, 0, 2}}};
  ASSERT_TRUE(validate_morphism(collapsed.beta).valid());
  ASSERT_TRUE(ungenerated_elements(collapsed).empty());
  const CertificationReport s = certify_universal(collapsed, 4);
  EXPECT_FALSE(s.certified());
  EXPECT_TRUE(s.witness_target.has_value());
  EXPECT_TRUE(replay_refutation(collapsed, s));
}

TEST(TensorEa, TinyBudgetIsReported) {
  const TensorSaturation t = saturate_tensor(EffectAlgebra::boolean(2), EffectAlgebra::chain(4), 1);
  if (!t.candidate) {
    EXPECT_EQ(t.saturation.status, SaturationStatus::budget_exhausted);
  }
}
