#include <gtest/gtest.h>

#include <random>

#include "centra/error.hpp"
#include "centra/perm.hpp"
#include "helpers.hpp"

using namespace centra;

TEST(Perm, ComposeAppliesRightFactorFirst) {
  auto const a = Perm::from_cycles("(1,2)", 3);
  auto const b = Perm::from_cycles("(2,3)", 3);
  auto const c = a * b;
  // 0-based: (0 1) o (1 2) sends 0 -> 1, 1 -> 2, 2 -> 0; the other order
  // gives the inverse 3-cycle 1 -> 0, 2 -> 1, 0 -> 2
  EXPECT_EQ(c[0], 1U);
  EXPECT_EQ(c[1], 2U);
  EXPECT_EQ(c[2], 0U);
  auto const d = b * a;
  EXPECT_EQ(d[1], 0U);
  EXPECT_EQ(d[2], 1U);
  EXPECT_EQ(d[0], 2U);
  EXPECT_EQ(d, c.inverse());
  EXPECT_NE(a * b, b * a);
}

TEST(Perm, IdentityAndInverse) {
  auto const p = Perm::from_cycles("(1,4,2)(3,5)", 5);
  auto const e = Perm::identity(5);
  EXPECT_EQ(e * p, p);
  EXPECT_EQ(p * e, p);
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_TRUE((p.inverse() * p).is_identity());
}

TEST(Perm, DegreeMismatchIsUsageError) {
  EXPECT_THROW(compose(Perm::identity(3), Perm::identity(4)), UsageError);
}

TEST(Perm, RejectsNonBijection) {
  EXPECT_THROW(Perm(std::vector<Point>{0, 0, 1}), UsageError);
  EXPECT_THROW(Perm(std::vector<Point>{0, 3, 1}), UsageError);
}

TEST(Perm, OrderIsLcmOfCycleLengths) {
  EXPECT_EQ(Perm::identity(4).order(), 1U);
  EXPECT_EQ(Perm::from_cycles("(1,2,3,4,5)").order(), 5U);
  auto const p = Perm::from_cycles("(1,2)(3,4,5)");
  EXPECT_EQ(p.order(), 6U);
  Perm x = p;
  std::size_t k = 1;
  while (!x.is_identity()) {
    x = x * p;
    ++k;
  }
  EXPECT_EQ(k, 6U);
}

TEST(Perm, CycleNotationRoundTrip) {
  auto const p = Perm::from_cycles("(1,2,3)(4,10)(5,11,6,8,9,7)", 11);
  EXPECT_EQ(p.degree(), 11U);
  EXPECT_EQ(Perm::from_cycles(p.to_cycles(), 11), p);
  EXPECT_EQ(Perm::identity(3).to_cycles(), "()");
  EXPECT_EQ(Perm::from_cycles("(1 2)(3 4)", 4), Perm::from_cycles("(1,2)(3,4)", 4));
}

TEST(PermProperty, AssociativityAndInverseLaws) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t const n = 1 + rng() % 12;
    auto a = test::random_perm(n, rng);
    auto b = test::random_perm(n, rng);
    auto c = test::random_perm(n, rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ((a * b).inverse(), b.inverse() * a.inverse());
    ASSERT_EQ(Perm::from_cycles(a.to_cycles(), n), a);
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ((a * b)[i], a[b[i]]);
    }
  }
}

TEST(Perm, ExtendAndShift) {
  auto const p = Perm::from_cycles("(1,2)", 2);
  auto const e = extend_degree(p, 4);
  EXPECT_EQ(e, Perm::from_cycles("(1,2)", 4));
  auto const s = shift(p, 2, 4);
  EXPECT_EQ(s, Perm::from_cycles("(3,4)", 4));
}
