#include <gtest/gtest.h>

#include <random>

#include "effalg/fpab.hpp"

using namespace effalg;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

Int gcd_of_entries(const IntMatrix& m) {
  Int g = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g = gcd(g, m(i, j));
  return g;
}

}  // namespace

TEST(Smith, CertificateOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, r, c, 6);
    const SmithForm s = smith_normal_form(m);
    ASSERT_TRUE(verify_smith_form(m, s));
    const IntVec d = s.diagonal();
    for (std::size_t i = 0; i + 1 < s.rank; ++i) EXPECT_EQ(d[i + 1] % d[i], 0);
    for (std::size_t i = 0; i < s.rank; ++i) EXPECT_GT(d[i], 0);
    if (s.rank > 0) {
      EXPECT_EQ(d[0], gcd_of_entries(m));
    }
  }
}

TEST(Smith, DeterminantOracle) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rng, n, n, 9);
    const SmithForm s = smith_normal_form(m);
    Int prod = 1;
    for (const Int& x : s.diagonal()) prod *= x;
    EXPECT_EQ(abs_value(determinant(m)), abs_value(prod));
  }
}

TEST(Smith, RejectsForgedCertificate) {
  const IntMatrix m = IntMatrix::from_ints({{2, 4}, {6, 8}});
  SmithForm s = smith_normal_form(m);
  ASSERT_TRUE(verify_smith_form(m, s));
  s.D(1, 1) += 1;
  EXPECT_FALSE(verify_smith_form(m, s));
}

TEST(FpAbGroup, KnownGroups) {
  const FpAbGroup z6(1, IntMatrix::from_ints({{6}}));
  EXPECT_EQ(z6.torsion_factors(), int_vec({6}));
  EXPECT_EQ(z6.free_rank(), 0u);
  const FpAbGroup g(3, IntMatrix::from_ints({{2, 0, 0}, {0, 3, 0}}));
  EXPECT_EQ(g.torsion_factors(), int_vec({6}));
  EXPECT_EQ(g.free_rank(), 1u);
  EXPECT_EQ(g.invariant_factors(), int_vec({6, 0}));
  const FpAbGroup k(2, IntMatrix::from_ints({{1, 1}, {1, -1}}));
  EXPECT_EQ(k.torsion_factors(), int_vec({2}));
  EXPECT_TRUE(FpAbGroup(2, IntMatrix::from_ints({{1, 0}, {0, 1}})).is_trivial());
}

TEST(FpAbGroup, ArithmeticAndOrders) {
  const FpAbGroup g(2, IntMatrix::from_ints({{4, 0}}));
  const auto x = g.generator(0), y = g.generator(1);
  EXPECT_EQ(g.times(4, x), g.zero());
  EXPECT_EQ(g.order(x), std::optional<Int>(4));
  EXPECT_FALSE(g.order(y).has_value());
  EXPECT_EQ(g.minus(g.plus(x, y), y), x);
  EXPECT_EQ(g.plus(x, g.neg(x)), g.zero());
  EXPECT_TRUE(g.is_zero(int_vec({8, 0})));
}

TEST(FpAbGroup, TensorOfCyclicGroups) {
  for (long m = 1; m <= 8; ++m)
    for (long n = 1; n <= 8; ++n) {
      const GroupTensor t = tensor_groups(FpAbGroup::cyclic(m), FpAbGroup::cyclic(n));
      const long g = std::gcd(m, n);
      EXPECT_EQ(t.group.torsion_factors(), g > 1 ? int_vec({g}) : IntVec{}) << m << " " << n;
    }
  const GroupTensor zz = tensor_groups(FpAbGroup::free(2), FpAbGroup::free(3));
  EXPECT_EQ(zz.group.free_rank(), 6u);
}

TEST(FpAbGroup, HomGroupOfCyclics) {
  for (long m = 1; m <= 6; ++m)
    for (long n = 1; n <= 6; ++n) {
      const HomGroup h = hom_group(FpAbGroup::cyclic(m), FpAbGroup::cyclic(n));
      const long g = std::gcd(m, n);
      EXPECT_EQ(h.group.torsion_factors(), g > 1 ? int_vec({g}) : IntVec{});
      EXPECT_EQ(h.group.free_rank(), 0u);
    }
  EXPECT_EQ(hom_group(FpAbGroup::free(2), FpAbGroup::cyclic(3)).group.torsion_factors(), int_vec({3, 3}));
}

TEST(GroupHom, IsomorphismDecision) {
  const FpAbGroup z = FpAbGroup::free(1);
  EXPECT_TRUE(is_isomorphism(GroupHom(z, z, IntMatrix::from_ints({{-1}}))).is_iso);
  const auto two = is_isomorphism(GroupHom(z, z, IntMatrix::from_ints({{2}})));
  EXPECT_FALSE(two.is_iso);
  EXPECT_EQ(two.cokernel_factors, int_vec({2}));
  const FpAbGroup z2 = FpAbGroup::cyclic(2);
  const auto proj = is_isomorphism(GroupHom(z, z2, IntMatrix::from_ints({{1}})));
  EXPECT_FALSE(proj.is_iso);
  EXPECT_TRUE(proj.kernel_witness.has_value());
}

TEST(GroupHom, WellDefinednessAndComposition) {
  const FpAbGroup z4 = FpAbGroup::cyclic(4), z2 = FpAbGroup::cyclic(2);
  EXPECT_TRUE(GroupHom(z4, z2, IntMatrix::from_ints({{1}})).is_well_defined());
  EXPECT_FALSE(GroupHom(z2, z4, IntMatrix::from_ints({{1}})).is_well_defined());
  const GroupHom d(z2, z4, IntMatrix::from_ints({{2}}));
  const GroupHom p(z4, z2, IntMatrix::from_ints({{1}}));
  EXPECT_TRUE(compose(p, d).matrix() == IntMatrix::from_ints({{2}}));
  EXPECT_TRUE(compose(p, d).apply(z2.generator(0)) == z2.zero());
}

TEST(FpAbGroup, ReducedPresentationIsIsomorphic) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const FpAbGroup g(n, random_matrix(rng, 1 + rng() % 4, n, 4));
    const ReducedPresentation r = reduce_presentation(g);
    EXPECT_EQ(r.group.torsion_factors(), g.torsion_factors());
    EXPECT_EQ(r.group.free_rank(), g.free_rank());
    EXPECT_TRUE(is_isomorphism(GroupHom(g, r.group, r.to_reduced)).is_iso);
  }
}
