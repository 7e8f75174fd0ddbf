#include <gtest/gtest.h>

#include <random>

#include "effalg/enumerate.hpp"
#include "effalg/lp.hpp"
#include "effalg/pog.hpp"

using namespace effalg;

namespace {

// nonnegative combinations of the cone generators with coefficients <= cap
bool brute_force_member(const UnitalPoGroup& a, const GroupElement& v, int cap) {
  const std::size_t k = a.cone.size();
  std::vector<int> c(k, 0);
  while (true) {
    GroupElement s = a.group.zero();
    for (std::size_t i = 0; i < k; ++i) s = a.group.plus(s, a.group.times(c[i], a.cone[i]));
    if (s == v) return true;
    std::size_t i = 0;
    while (i < k && ++c[i] > cap) c[i++] = 0;
    if (i == k) return false;
  }
}

}  // namespace

TEST(Pog, ConeMembershipAgreesWithBruteForce) {
  const UnitalPoGroup a = make_pog(FpAbGroup::free(2), {int_vec({1, 0}), int_vec({1, 2}), int_vec({0, 3})}, int_vec({2, 2}));
  for (long x = -3; x <= 4; ++x)
    for (long y = -3; y <= 6; ++y) {
      const GroupElement v = a.element(int_vec({x, y}));
      const ConeDecision d = cone_member(a, v);
      ASSERT_NE(d.status, ConeStatus::unknown) << x << "," << y;
      EXPECT_EQ(d.member(), brute_force_member(a, v, 6)) << x << "," << y;
      EXPECT_TRUE(verify_cone_decision(a, v, d));
    }
}

TEST(Pog, ConeMembershipWithTorsion) {
  const FpAbGroup g(2, IntMatrix::from_ints({{0, 3}}));
  const UnitalPoGroup a = make_pog(g, {int_vec({1, 1})}, int_vec({1, 1}));
  EXPECT_TRUE(cone_member(a, int_vec({3, 0})).member());
  EXPECT_TRUE(cone_member(a, int_vec({2, 2})).member());
  EXPECT_TRUE(cone_member(a, int_vec({1, 0})).refuted());
}

TEST(Pog, FarkasCertificates) {
  RatMatrix m(2, 2);
  m(0, 0) = 1, m(0, 1) = 1, m(1, 1) = 1;
  const LpResult feasible = solve_feasibility(m, {3, 1});
  ASSERT_TRUE(feasible.feasible);
  EXPECT_EQ(feasible.x, (RatVec{2, 1}));
  const LpResult infeasible = solve_feasibility(m, {-1, 1});
  ASSERT_FALSE(infeasible.feasible);
  EXPECT_TRUE(verify_farkas(m, {-1, 1}, infeasible.farkas));
}

TEST(Pog, UniversalGroupOfChainIsIntegers) {
  for (int n = 1; n <= 6; ++n) {
    const UniversalGroup gr = gr_universal_group(EffectAlgebra::chain(n));
    EXPECT_EQ(gr.pog.group.free_rank(), 1u);
    EXPECT_TRUE(gr.pog.group.torsion_factors().empty());
    EXPECT_EQ(gr.pog.unit, gr.pog.group.times(n, gr.eta[1]));
    EXPECT_TRUE(verify_smith_form(gr.presentation, smith_normal_form(gr.presentation)));
  }
}

TEST(Pog, UniversalGroupOfBooleanIsStandardLattice) {
  for (int n = 1; n <= 3; ++n) {
    const UniversalGroup gr = gr_universal_group(EffectAlgebra::boolean(n));
    EXPECT_EQ(gr.pog.group.free_rank(), static_cast<std::size_t>(n));
    EXPECT_TRUE(gr.pog.group.torsion_factors().empty());
    EXPECT_TRUE(cone_is_strict(gr.pog));
  }
}

TEST(Pog, UniversalGroupOfMo2HasTorsion) {
  const UniversalGroup gr = gr_universal_group(mo2());
  EXPECT_EQ(gr.pog.group.torsion_factors(), int_vec({2}));
  EXPECT_EQ(gr.pog.group.free_rank(), 1u);
  EXPECT_NE(gr.eta[1], gr.eta[2]);
  EXPECT_EQ(gr.pog.group.times(2, gr.eta[1]), gr.pog.group.times(2, gr.eta[2]));
}

TEST(Pog, UniversalPropertyAgainstIntegers) {
  // every state E -> [0,1] of C_n counts atoms; through Gr this is x |-> x
  const auto c4 = EffectAlgebra::chain(4);
  const UniversalGroup gr = gr_universal_group(c4);
  std::vector<IntVec> values;
  for (Elem x = 0; x < 5; ++x) values.push_back(int_vec({x}));
  EXPECT_TRUE(values_additive(c4, FpAbGroup::free(1), values));
  const GroupHom h = hom_from_values(gr, FpAbGroup::free(1), values);
  EXPECT_TRUE(h.is_well_defined());
  EXPECT_TRUE(check_pog_iso(h, gr.pog, integers(4)).ok());
  values[1] = int_vec({2});
  EXPECT_FALSE(values_additive(c4, FpAbGroup::free(1), values));
}

TEST(Pog, GammaOfIntegersIsChain) {
  for (long n = 1; n <= 6; ++n) {
    const GammaResult g = gamma_interval(integers(n));
    ASSERT_EQ(g.status, GammaStatus::ok);
    ASSERT_TRUE(g.algebra.has_value());
    EXPECT_TRUE(is_isomorphic(*g.algebra, EffectAlgebra::chain(static_cast<int>(n))));
  }
}

TEST(Pog, GammaOfStandardLatticeIsProductOfChains) {
  const GammaResult g = gamma_interval(standard_lattice(int_vec({1, 2})));
  ASSERT_EQ(g.status, GammaStatus::ok);
  EXPECT_EQ(g.algebra->size(), 6);
  EXPECT_TRUE(check_rdp(*g.algebra).pass());
}

TEST(Pog, GammaOfGrRecoversRdpAlgebras) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& e : enumerate_effect_algebras(n).algebras) {
      if (!check_rdp(e).pass()) continue;
      const UniversalGroup gr = gr_universal_group(e);
      const GammaResult g = gamma_interval(gr.pog);
      ASSERT_EQ(g.status, GammaStatus::ok);
      EXPECT_TRUE(is_isomorphic(*g.algebra, e));
    }
}

TEST(Pog, OrderUnitAndStrictness) {
  EXPECT_EQ(check_order_unit(integers(3)).status, Tri::yes);
  const UnitalPoGroup bad = make_pog(FpAbGroup::free(2), {int_vec({1, 0}), int_vec({0, 1})}, int_vec({1, 0}));
  EXPECT_EQ(check_order_unit(bad).status, Tri::no);
  EXPECT_TRUE(cone_is_strict(standard_lattice(int_vec({1, 1}))));
  const UnitalPoGroup line = make_pog(FpAbGroup::free(1), {int_vec({1}), int_vec({-1})}, int_vec({1}));
  EXPECT_FALSE(cone_is_strict(line));
}

TEST(Pog, TensorOfIntegers) {
  for (long m = 1; m <= 5; ++m)
    for (long n = 1; n <= 5; ++n) {
      const PogTensor t = tensor_pog(integers(m), integers(n));
      const GroupHom f(t.pog.group, FpAbGroup::free(1), IntMatrix::from_ints({{1}}));
      EXPECT_TRUE(check_pog_iso(f, t.pog, integers(m * n)).ok());
    }
}

TEST(Pog, InterpolationInLattice) {
  const UnitalPoGroup a = standard_lattice(int_vec({4, 4}));
  auto e = [&](long x, long y) { return a.element(int_vec({x, y})); };
  const InterpolationResult r = check_interpolation(a, e(0, 1), e(1, 0), e(2, 2), e(3, 1));
  ASSERT_EQ(r.status, InterpolationStatus::found);
  for (const auto& lo : {e(0, 1), e(1, 0)}) EXPECT_TRUE(cone_member(a, a.group.minus(*r.interpolant, lo)).member());
  for (const auto& hi : {e(2, 2), e(3, 1)}) EXPECT_TRUE(cone_member(a, a.group.minus(hi, *r.interpolant)).member());
  EXPECT_EQ(check_interpolation(a, e(3, 0), e(0, 0), e(1, 1), e(4, 4)).status, InterpolationStatus::precondition_failed);
}

TEST(Pog, ReflectionIntoArchimedeanPart) {
  const UnitalPoGroup a = standard_lattice(int_vec({1, 1}));
  const Reflection r = pogp_reflection(a, a.unit);
  EXPECT_TRUE(r.complete);
  EXPECT_TRUE(r.contains(a, a.unit));
}
