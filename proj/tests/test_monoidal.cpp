#include <gtest/gtest.h>

#include "effalg/monoidal.hpp"

using namespace effalg;

namespace {

std::vector<EffectAlgebra> factors() {
  return {EffectAlgebra::two_element(), EffectAlgebra::chain(2), EffectAlgebra::chain(3), EffectAlgebra::boolean(2)};
}

}  // namespace

TEST(Monoidal, GammaIsIsomorphism) {
  for (const auto& e : factors())
    for (const auto& f : factors()) {
      const auto m = gamma_map(e, f, 5);
      ASSERT_TRUE(m.has_value());
      EXPECT_TRUE(m->certification.certified());
      ASSERT_TRUE(m->gamma.has_value());
      EXPECT_TRUE(verify_gamma_iso(*m).ok());
      EXPECT_TRUE(verify_iota_compatibility(*m).ok());
    }
}

TEST(Monoidal, GammaSendsSimpleTensorsToPureTensors) {
  const auto m = gamma_map(EffectAlgebra::chain(2), EffectAlgebra::boolean(2), 5);
  ASSERT_TRUE(m && m->gamma);
  const TensorCandidate& c = m->candidate;
  for (Elem a = 0; a < c.left.size(); ++a)
    for (Elem b = 0; b < c.right.size(); ++b)
      EXPECT_EQ(m->gamma->apply(m->gr_tensor.eta[c.beta(a, b)]), m->pure(a, b));
}

TEST(Monoidal, EpsilonAndUnitality) {
  EXPECT_TRUE(verify_epsilon().ok());
  for (const auto& e : factors()) EXPECT_TRUE(verify_unitality(e, 5).ok());
}

TEST(Monoidal, Associativity) {
  EXPECT_TRUE(verify_associativity(EffectAlgebra::chain(2), EffectAlgebra::chain(2), EffectAlgebra::chain(2), 4).ok());
  EXPECT_TRUE(verify_associativity(EffectAlgebra::boolean(2), EffectAlgebra::chain(2), EffectAlgebra::two_element(), 4).ok());
}

TEST(Monoidal, Naturality) {
  const auto c1 = EffectAlgebra::chain(1), c2 = EffectAlgebra::chain(2), c3 = EffectAlgebra::chain(3);
  const auto src = gamma_map(c1, c3, 4), dst = gamma_map(c2, c3, 4);
  ASSERT_TRUE(src && dst);
  const auto g = enumerate_morphisms(c1, c2, MorphismKind::ea).at(0);
  EXPECT_TRUE(verify_naturality(*src, *dst, g, identity_morphism(c3)).ok());
}

TEST(Monoidal, ConjugacySquare) {
  for (const auto& e : factors()) {
    const auto m = gamma_map(e, EffectAlgebra::chain(2), 4);
    ASSERT_TRUE(m.has_value());
    const MonoidalReport r = verify_conjugacy_square(*m);
    EXPECT_TRUE(r.passed);
  }
}

TEST(Monoidal, StrongMonoidalityBundle) {
  const StrongMonoidalReport s =
      verify_strong_monoidality(EffectAlgebra::chain(2), EffectAlgebra::boolean(2), EffectAlgebra::chain(1), 4);
  EXPECT_TRUE(s.ok());
  EXPECT_FALSE(s.combined().equations.empty());
}

TEST(Monoidal, UnderAdjunction) {
  const auto c2 = EffectAlgebra::chain(2);
  const UniversalGroup gr = gr_universal_group(c2);
  const UnitalPoGroup b = integers(2);
  std::vector<IntVec> id, zero;
  for (Elem x = 0; x < 3; ++x) id.push_back(int_vec({x})), zero.push_back(int_vec({0}));
  const AdjunctionIsoReport r = verify_under_adjunction_iso(c2, b, hom_from_values(gr, b.group, id));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.left_size, 2u);
  EXPECT_EQ(r.right_size, 2u);
  const AdjunctionIsoReport z = verify_under_adjunction_iso(c2, b, hom_from_values(gr, b.group, zero));
  EXPECT_TRUE(z.ok());
  EXPECT_EQ(z.left_size, 1u);
}

TEST(Monoidal, ReportRecordsFailures) {
  MonoidalReport r;
  EXPECT_TRUE(r.check("same", int_vec({1, 2}), int_vec({1, 2})));
  EXPECT_FALSE(r.check("different", int_vec({1}), int_vec({2})));
  EXPECT_FALSE(r.ok());
  ASSERT_EQ(r.equations.size(), 2u);
  EXPECT_FALSE(r.equations[1].holds);
}
