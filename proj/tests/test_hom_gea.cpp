#include <gtest/gtest.h>

#include "effalg/enumerate.hpp"
#include "effalg/hom_gea.hpp"

using namespace effalg;

namespace {

// every map E -> F, tested against the additivity laws directly
std::size_t brute_force_homs(const EffectAlgebra& e, const EffectAlgebra& f, MorphismKind kind) {
  const int n = e.size(), m = f.size();
  std::vector<Elem> map(static_cast<std::size_t>(n), 0);
  std::size_t count = 0;
  while (true) {
    bool ok = map[0] == 0 && (kind == MorphismKind::gea || map[e.one()] == f.one());
    for (Elem a = 0; ok && a < n; ++a)
      for (Elem b = 0; ok && b < n; ++b)
        if (auto s = e.sum(a, b)) ok = f.sum(map[a], map[b]) == std::optional<Elem>(map[*s]);
    count += ok;
    int i = 0;
    while (i < n && ++map[i] == m) map[i++] = 0;
    if (i == n) break;
  }
  return count;
}

std::vector<EffectAlgebra> small_algebras(int max) {
  std::vector<EffectAlgebra> v;
  for (int n = 1; n <= max; ++n)
    for (const auto& e : enumerate_effect_algebras(n).algebras) v.push_back(e);
  return v;
}

}  // namespace

TEST(Morphisms, ChainCounts) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 8; ++m)
      EXPECT_EQ(enumerate_morphisms(EffectAlgebra::chain(n), EffectAlgebra::chain(m), MorphismKind::ea).size(),
                m % n == 0 ? 1u : 0u);
}

TEST(Morphisms, AgreeWithBruteForce) {
  const auto v = small_algebras(5);
  for (const auto& e : v)
    for (const auto& f : v)
      for (auto kind : {MorphismKind::ea, MorphismKind::gea})
        EXPECT_EQ(enumerate_morphisms(e, f, kind).size(), brute_force_homs(e, f, kind));
}

TEST(Morphisms, EnumeratedMapsValidate) {
  const auto b2 = EffectAlgebra::boolean(2);
  const auto c2 = EffectAlgebra::chain(2);
  const auto homs = enumerate_morphisms(b2, c2, MorphismKind::ea);
  EXPECT_EQ(homs.size(), 3u);
  for (const auto& h : homs) EXPECT_TRUE(validate_morphism(h).valid());
  EAMorphism bad{b2, c2, {0, 1, 1, 1}, MorphismKind::ea};
  EXPECT_FALSE(validate_morphism(bad).valid());
}

TEST(Morphisms, CompositionAndIdentity) {
  const auto c1 = EffectAlgebra::chain(1), c2 = EffectAlgebra::chain(2), c4 = EffectAlgebra::chain(4);
  const auto f = enumerate_morphisms(c1, c2, MorphismKind::ea).at(0);
  const auto g = enumerate_morphisms(c2, c4, MorphismKind::ea).at(0);
  const auto gf = compose(g, f);
  EXPECT_EQ(gf.map, (std::vector<Elem>{0, 4}));
  EXPECT_EQ(compose(identity_morphism(c2), f), f);
}

TEST(HomGea, IsGeneralizedEffectAlgebraWithPointwiseOrder) {
  const auto v = small_algebras(5);
  for (const auto& e : v)
    for (const auto& f : v) {
      const HomGEA h = build_hom_gea(e, f);
      EXPECT_EQ(h.maps.size(), enumerate_morphisms(e, f, MorphismKind::gea).size());
      EXPECT_TRUE(validate_generalized_effect_algebra(h.table).valid());
      for (int a = 0; a < h.size(); ++a)
        for (int b = 0; b < h.size(); ++b) EXPECT_EQ(h.algebraic_leq(a, b), h.pointwise_leq(a, b));
    }
}

TEST(HomGea, IntervalBelowEaHomIsEffectAlgebra) {
  const auto b2 = EffectAlgebra::boolean(2);
  const auto c2 = EffectAlgebra::chain(2);
  for (const auto& h : enumerate_morphisms(b2, c2, MorphismKind::ea)) {
    const IntervalEA iv = build_interval(b2, c2, h.map);
    EXPECT_EQ(iv.map(iv.top), h.map);
    EXPECT_EQ(iv.algebra.one(), iv.top);
  }
}

TEST(HomGea, TransposesAreMutuallyInverse) {
  const auto v = small_algebras(4);
  for (const auto& e : v)
    for (const auto& f : v)
      for (const auto& g : v)
        for (const auto& beta : enumerate_bimorphisms(e, f, g)) {
          const Transpose t = transpose_forward(beta);
          EXPECT_EQ(transpose_backward(t.interval, t.map), beta);
        }
}
