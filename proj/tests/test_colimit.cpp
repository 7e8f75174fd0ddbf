#include <gtest/gtest.h>

#include "effalg/colimit.hpp"
#include "effalg/json_io.hpp"

using namespace effalg;

namespace {

const std::string kData = EFFALG_DATA_DIR;

EaDiagram ea_file(const std::string& name) {
  return ea_diagram_from_json(read_json_file(kData + "/diagrams/" + name + ".json")).diagram;
}

PogDiagram pog_file(const std::string& name) {
  return pog_diagram_from_json(read_json_file(kData + "/pog_diagrams/" + name + ".json")).diagram;
}

}  // namespace

TEST(Category, FreeCategoryOnChain) {
  const FiniteCategory c = FiniteCategory::free_on(3, {{0, 1, "f"}, {1, 2, "g"}});
  EXPECT_EQ(c.objects(), 3);
  EXPECT_EQ(c.arrow_count(), 6);  // three identities, f, g, g o f
  EXPECT_TRUE(c.valid());
  EXPECT_TRUE(is_connected(c));
  EXPECT_EQ(c.arrows_between(0, 2).size(), 1u);
  EXPECT_EQ(c.compose(c.identity(1), c.arrows_between(0, 1)[0]), c.arrows_between(0, 1)[0]);
}

TEST(Category, ConnectednessAndFinality) {
  const FiniteCategory discrete = FiniteCategory::free_on(2, {});
  EXPECT_FALSE(is_connected(discrete));
  const FiniteCategory chain = FiniteCategory::free_on(3, {{0, 1, "f"}, {1, 2, "g"}});
  EXPECT_TRUE(is_final(chain, full_subcategory(chain, {2})).final);
  EXPECT_FALSE(is_final(chain, full_subcategory(chain, {0})).final);
  const FiniteCategory span = FiniteCategory::free_on(3, {{2, 0, "f"}, {2, 1, "g"}});
  const FinalityReport r = is_final(span, discrete_subcategory(span, {0, 1}));
  EXPECT_FALSE(r.final);
  EXPECT_EQ(r.witness, std::optional<int>(2));
  EXPECT_TRUE(is_final(span, whole(span)).final);
}

TEST(Category, InitialObjectIsAdjoined) {
  const FiniteCategory d = FiniteCategory::free_on(2, {});
  const FiniteCategory e = d.with_initial_object();
  EXPECT_EQ(e.objects(), 3);
  EXPECT_TRUE(is_connected(e));
  EXPECT_EQ(e.arrows_between(2, 0).size(), 1u);
}

TEST(EaColimit, CoproductIsHorizontalSum) {
  const EaColimit c = colimit_ea(ea_file("discrete_2_2"));
  ASSERT_EQ(c.status, SaturationStatus::ok);
  EXPECT_TRUE(c.cocone_verified);
  EXPECT_EQ(c.apex->size(), 2);
  const EaColimit h = horizontal_sum_with_legs(EffectAlgebra::chain(2), EffectAlgebra::chain(2));
  EXPECT_TRUE(is_isomorphic(*h.apex, mo2()));
}

TEST(EaColimit, PushoutOverTwo) {
  const EaColimit c = colimit_ea(ea_file("span_c2_2_c2"));
  ASSERT_EQ(c.status, SaturationStatus::ok);
  EXPECT_TRUE(c.cocone_verified);
  EXPECT_TRUE(is_isomorphic(*c.apex, mo2()));
}

TEST(EaColimit, CoequalizerCollapses) {
  const EaColimit c = colimit_ea(ea_file("parallel_b2_2"));
  ASSERT_EQ(c.status, SaturationStatus::ok);
  EXPECT_EQ(c.apex->size(), 1);
}

TEST(EaColimit, ChainHasTerminalColimit) {
  const EaDiagram d = ea_file("chain1_2_c2");
  const EaColimit c = colimit_ea(d);
  ASSERT_EQ(c.status, SaturationStatus::ok);
  EXPECT_TRUE(is_isomorphic(*c.apex, d.objects.back()));
}

TEST(EaColimit, CanonicalComparison) {
  const ComparisonReport span = canonical_comparison(EffectAlgebra::chain(2), ea_file("span_b2_2_c3"), 5);
  EXPECT_EQ(span.status, ComparisonStatus::iso);
  EXPECT_EQ(span.left_size, span.right_size);
  const ComparisonReport pair = canonical_comparison(EffectAlgebra::chain(2), ea_file("discrete_2_2"));
  EXPECT_EQ(pair.status, ComparisonStatus::not_iso);
  EXPECT_EQ(pair.left_size, 4u);
  EXPECT_EQ(pair.right_size, 3u);
}

TEST(PogColimit, ChainOfDoublings) {
  const PogDiagram d = pog_file("chain_z2_z4_z8");
  ASSERT_TRUE(d.functorial());
  const PogColimit c = colimit_pog(d);
  EXPECT_TRUE(c.cocone_verified);
  EXPECT_TRUE(c.complete);
  const RestrictionComparison r = compare_restriction(d, full_subcategory(d.category, {2}));
  EXPECT_TRUE(r.iso.ok());
  const RestrictionComparison s = compare_restriction(d, full_subcategory(d.category, {0}));
  EXPECT_FALSE(s.iso.ok());
}

TEST(PogColimit, CoproductOfIntegers) {
  const PogColimit c = colimit_pog(pog_file("discrete_z2_z3"));
  EXPECT_TRUE(c.cocone_verified);
  // (Z,2) + (Z,3) with units identified: Z^2 / (2,-3) ~ Z with unit 6, cone spanned by 2 and 3
  EXPECT_EQ(c.apex.group.free_rank(), 1u);
  EXPECT_TRUE(c.apex.group.torsion_factors().empty());
  const GammaResult g = gamma_interval(c.apex);
  ASSERT_EQ(g.status, GammaStatus::ok);
  EXPECT_EQ(g.algebra->size(), 5);  // 0, 2, 3, 4, 6
}

TEST(PogColimit, EmptyDiagramIsInitial) {
  PogDiagram d{FiniteCategory::free_on(0, {}), {}, {}};
  const PogColimit c = colimit_pog(d);
  const GroupHom f(c.apex.group, FpAbGroup::free(1), IntMatrix::identity(1));
  EXPECT_TRUE(check_pog_iso(f, c.apex, integers(1)).ok());
}

TEST(PogColimit, InitialObjectAdjoined) {
  const PogDiagram d = with_initial_object(pog_file("discrete_z2_z3"));
  EXPECT_TRUE(d.functorial());
  EXPECT_EQ(d.category.objects(), 3);
  const RestrictionComparison r = compare_restriction(d, full_subcategory(d.category, {0, 1}));
  EXPECT_TRUE(r.iso.ok());
}
