#include <gtest/gtest.h>

#include <map>
#include <random>

#include "centra/constructors.hpp"
#include "centra/error.hpp"
#include "centra/group.hpp"
#include "centra/group_ops.hpp"
#include "centra/lattice.hpp"
#include "helpers.hpp"

using namespace centra;

TEST(Closure, SmallExamples) {
  EXPECT_EQ(close_generators({Perm::from_cycles("(1,2)")})->order(), 2U);
  auto S3 = close_generators({Perm::from_cycles("(1,2)", 3), Perm::from_cycles("(1,2,3)", 3)});
  EXPECT_EQ(S3->order(), 6U);
}

TEST(Closure, A7PairGivesOrder12) {
  auto K = close_generators({Perm::from_cycles("(1,2)(3,4)(5,6,7)", 7),
                             Perm::from_cycles("(1,3)(2,4)", 7)});
  EXPECT_EQ(K->order(), 12U);
  EXPECT_TRUE(K->is_abelian());
  std::map<std::uint32_t, int> orders;
  for (auto o : K->element_orders()) {
    ++orders[o];
  }
  // C6 x C2: one identity, 3 involutions, 2 of order 3, 6 of order 6
  EXPECT_EQ(orders[1], 1);
  EXPECT_EQ(orders[2], 3);
  EXPECT_EQ(orders[3], 2);
  EXPECT_EQ(orders[6], 6);
}

TEST(Closure, CapExceededReportsPartialCount) {
  ClosureOptions opts;
  opts.max_order = 100;
  try {
    symmetric(6, opts);
    FAIL() << "expected CapExceeded";
  } catch (CapExceeded const& e) {
    EXPECT_EQ(e.cap(), 100U);
    EXPECT_GE(e.reached(), 100U);
    EXPECT_NE(std::string(e.what()).find("group too large"), std::string::npos);
  }
}

TEST(Closure, CanonicalOrderingIsDeterministic) {
  auto a = close_generators({Perm::from_cycles("(1,2,3,4)", 4), Perm::from_cycles("(1,3)", 4)});
  auto b = close_generators({Perm::from_cycles("(1,3)", 4), Perm::from_cycles("(1,2,3,4)", 4),
                             Perm::from_cycles("(2,4)", 4)});
  ASSERT_EQ(a->order(), b->order());
  for (Elem e = 0; e < a->order(); ++e) {
    EXPECT_EQ(a->element(e), b->element(e));
  }
  EXPECT_TRUE(a->element(0).is_identity());
  for (Elem e = 1; e < a->order(); ++e) {
    EXPECT_LT(a->element(e - 1), a->element(e));
  }
}

TEST(ElementOrder, Examples) {
  auto G = symmetric(5);
  EXPECT_EQ(G->element_order(FiniteGroup::identity()), 1U);
  EXPECT_EQ(G->element_order(G->index_of(Perm::from_cycles("(1,2,3,4,5)", 5))), 5U);
  EXPECT_EQ(G->element_order(G->index_of(Perm::from_cycles("(1,2)(3,4,5)", 5))), 6U);
}

TEST(Centralizer, Examples) {
  auto S3 = symmetric(3);
  Elem const id[] = {FiniteGroup::identity()};
  EXPECT_EQ(centralizer(*S3, id).order(), 6U);
  Elem const three[] = {S3->index_of(Perm::from_cycles("(1,2,3)", 3))};
  auto C = centralizer(*S3, three);
  EXPECT_EQ(C.order(), 3U);
  EXPECT_EQ(C.members(), S3->cyclic_of(three[0]));

  auto D8 = dihedral(8);
  EXPECT_EQ(centralizer(*D8, whole_group(*D8)).order(), 2U);
}

TEST(Center, Examples) {
  EXPECT_EQ(center(*abelian({2, 4})).order(), 8U);
  EXPECT_EQ(center(*dihedral(8)).order(), 2U);
  EXPECT_EQ(center(*symmetric(3)).order(), 1U);
}

TEST(ConjugacyClasses, Examples) {
  auto ab = abelian({2, 6});
  EXPECT_EQ(ab->conjugacy_classes().size(), 12U);
  auto S3 = symmetric(3);
  std::vector<std::size_t> sizes;
  for (auto const& c : S3->conjugacy_classes()) {
    sizes.push_back(c.size());
  }
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(generalized_quaternion(8)->conjugacy_classes().size(), 5U);
}

TEST(Series, Examples) {
  auto A = abelian({3, 3});
  auto lcs = lower_central_series(*A);
  ASSERT_EQ(lcs.size(), 2U);
  EXPECT_EQ(lcs[0].order(), 9U);
  EXPECT_EQ(lcs[1].order(), 1U);
  EXPECT_EQ(nilpotency_class(*dihedral(16)), 3U);
  EXPECT_FALSE(nilpotency_class(*symmetric(3)).has_value());
  EXPECT_EQ(derived_subgroup(*symmetric(3)).order(), 3U);
  EXPECT_EQ(derived_subgroup(*alternating(5)).order(), 60U);
}

namespace {
  std::vector<GroupPtr> sample_groups() {
    return {cyclic(12),          abelian({2, 2, 2}), dihedral(20),       semidihedral(16),
            generalized_quaternion(16), symmetric(4), alternating(5), extraspecial_p3(3, Exponent::p),
            extraspecial_p3(3, Exponent::p_squared), psl2(gf(7, 1)), direct_product(*dihedral(8), *cyclic(3))};
  }
}  // namespace

TEST(GroupProperty, ClosureIdentityInverses) {
  for (auto const& G : sample_groups()) {
    ASSERT_LE(G->order(), 2000U);
    for (Elem a = 0; a < G->order(); ++a) {
      ASSERT_EQ(G->mul(a, G->inv(a)), FiniteGroup::identity());
      ASSERT_EQ(G->mul(a, 0), a);
      ASSERT_EQ(G->mul(0, a), a);
      ASSERT_EQ(G->element(G->mul(a, G->inv(a))), Perm::identity(G->degree()));
    }
    std::mt19937 rng(11);
    for (int t = 0; t < 2000; ++t) {
      Elem a = rng() % G->order(), b = rng() % G->order();
      ASSERT_EQ(G->element(G->mul(a, b)), G->element(a) * G->element(b));
    }
    for (auto const& g : G->generators()) {
      ASSERT_TRUE(G->contains(g));
    }
  }
}

TEST(GroupProperty, CentralizersAreSubgroupsContainingCenter) {
  std::mt19937 rng(3);
  for (auto const& G : sample_groups()) {
    auto const Z = center(*G);
    for (int t = 0; t < 20; ++t) {
      std::vector<Elem> S{static_cast<Elem>(rng() % G->order()), static_cast<Elem>(rng() % G->order())};
      auto C = centralizer(*G, S);
      ASSERT_TRUE(test::closed_under_mul(*G, C.elements()));
      ASSERT_TRUE(Z.is_subgroup_of(C));
      ElementSet s(G->order());
      for (Elem x : S) {
        s.set(x);
      }
      ASSERT_EQ(C.members(), test::naive_centralizer(*G, s));
    }
  }
}

TEST(GroupProperty, ClassSizesDivideOrderAndSum) {
  for (auto const& G : sample_groups()) {
    std::size_t total = 0;
    for (auto const& c : G->conjugacy_classes()) {
      ASSERT_EQ(G->order() % c.size(), 0U);
      ASSERT_EQ(*std::min_element(c.begin(), c.end()), c.front());
      total += c.size();
    }
    ASSERT_EQ(total, G->order());
  }
}

TEST(GroupProperty, IndependentConstructionsGiveIdenticalBitsets) {
  auto G = symmetric(4);
  auto a = G->index_of(Perm::from_cycles("(1,2,3,4)", 4));
  auto b = G->index_of(Perm::from_cycles("(1,3)", 4));
  Elem const g1[] = {a, b};
  Elem const g2[] = {b, G->mul(a, b), G->mul(a, a)};
  EXPECT_EQ(generated_subgroup(*G, g1).members(), generated_subgroup(*G, g2).members());
}

TEST(GroupOps, NormalClosure) {
  auto S4 = symmetric(4);
  Elem const dbl[] = {S4->index_of(Perm::from_cycles("(1,2)(3,4)", 4))};
  EXPECT_EQ(normal_closure(*S4, dbl).order(), 4U);
  Elem const tr[] = {S4->index_of(Perm::from_cycles("(1,2)", 4))};
  EXPECT_EQ(normal_closure(*S4, tr).order(), 24U);
}
