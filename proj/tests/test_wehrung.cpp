#include <gtest/gtest.h>

#include <random>

#include "effalg/wehrung.hpp"

using namespace effalg;
using namespace effalg::wehrung;

namespace {

SliceElement random_slice(std::mt19937_64& rng) {
  SliceElement s;
  s.qh2 = static_cast<long>(rng() % 2);
  s.gq2[0] = 0;
  for (int i = 1; i < 3; ++i) s.gq2[i] = static_cast<long>(rng() % 2);
  for (int i = 0; i < 3; ++i) s.gh[i] = 2 * (static_cast<long>(rng() % 5) - 2);
  return s;
}

bool below(Variant v, const TensorABElement& x, const TensorABElement& y) {
  TensorABElement d;
  d.qq = y.qq - x.qq;
  d.qh = y.qh - x.qh;
  for (int i = 0; i < 3; ++i) d.gq[i] = y.gq[i] - x.gq[i], d.gh[i] = y.gh[i] - x.gh[i];
  const TensorConeDecision c = ab_tensor_cone_member(v, d);
  EXPECT_TRUE(verify_decision(v, d, c));
  return c.status == DecisionStatus::member;
}

}  // namespace

TEST(Wehrung, ModelsAreValid) {
  for (Variant v : {Variant::as_printed, Variant::nonneg_cone}) {
    const Model m = build_wehrung(v);
    EXPECT_TRUE(m.valid()) << variant_name(v);
  }
  EXPECT_TRUE(build_wehrung(Variant::as_printed).cone_is_subgroup);
  EXPECT_FALSE(build_wehrung(Variant::nonneg_cone).cone_is_subgroup);
}

TEST(Wehrung, LexOrder) {
  EXPECT_TRUE(valid(Side::A, lex(1, {-5, 3, 2})));
  EXPECT_FALSE(valid(Side::A, lex(1, {-5, 3, 1})));
  EXPECT_TRUE(positive(Variant::nonneg_cone, Side::A, lex(1, {-5, 3, 2})));
  EXPECT_FALSE(positive(Variant::nonneg_cone, Side::B, lex(0, {-2})));
  EXPECT_TRUE(positive(Variant::as_printed, Side::B, lex(0, {-2})));
  EXPECT_FALSE(positive(Variant::as_printed, Side::A, lex(0, {1, 1, 0})));
  EXPECT_TRUE(positive(Variant::nonneg_cone, Side::B, unit(Side::B)));
  EXPECT_FALSE(positive(Variant::nonneg_cone, Side::B, lex(-1, {4})));
}

TEST(Wehrung, FactorsInterpolate) {
  for (Variant v : {Variant::as_printed, Variant::nonneg_cone})
    for (Side s : {Side::A, Side::B}) EXPECT_TRUE(sample_interpolation(v, s, 200).ok());
}

TEST(Wehrung, PureTensorsOfPositivesArePositive) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const LexElement a = random_element(Side::A, rng, 4), b = random_element(Side::B, rng, 4);
    if (!positive(Variant::nonneg_cone, Side::A, a) || !positive(Variant::nonneg_cone, Side::B, b)) continue;
    const TensorABElement p = pure(a, b);
    ASSERT_TRUE(valid(p));
    const TensorConeDecision d = ab_tensor_cone_member(Variant::nonneg_cone, p);
    EXPECT_EQ(d.status, DecisionStatus::member);
    EXPECT_TRUE(verify_decision(Variant::nonneg_cone, p, d));
  }
}

TEST(Wehrung, SliceSolverAgreesWithBruteForce) {
  std::mt19937_64 rng(17);
  for (Variant v : {Variant::as_printed, Variant::nonneg_cone})
    for (int t = 0; t < 400; ++t) {
      SliceElement q[4];
      for (auto& x : q) x = random_slice(rng);
      const SliceInterpolation fast = slice_interpolant(v, q);
      const SliceInterpolation slow = slice_interpolant_bruteforce(v, q);
      ASSERT_EQ(fast.exists, slow.exists) << variant_name(v) << " case " << t;
    }
}

TEST(Wehrung, FailureSearchWitnessIsGenuine) {
  const FailureSearchReport r = interpolation_failure_search(Variant::nonneg_cone, 2);
  EXPECT_EQ(r.quadruples >= r.interpolated, true);
  EXPECT_FALSE(r.transcript.empty());
  if (!r.witness) GTEST_SKIP() << "no witness at bound 2";
  const auto& w = *r.witness;
  ASSERT_EQ(w.size(), 4u);
  for (int i : {0, 1})
    for (int j : {2, 3}) EXPECT_TRUE(below(Variant::nonneg_cone, w[i], w[j]));
}
