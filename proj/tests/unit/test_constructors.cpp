#include <gtest/gtest.h>

#include <numeric>

#include "centra/action.hpp"
#include "centra/classify.hpp"
#include "centra/constructors.hpp"
#include "centra/error.hpp"
#include "centra/group_ops.hpp"
#include "centra/number_theory.hpp"

using namespace centra;

TEST(Constructors, FamilyOrders) {
  for (std::size_t n = 1; n <= 30; ++n) {
    EXPECT_EQ(cyclic(n)->order(), n);
  }
  EXPECT_EQ(abelian({2, 6, 6})->order(), 72U);
  EXPECT_EQ(symmetric(5)->order(), 120U);
  EXPECT_EQ(alternating(6)->order(), 360U);
  for (std::size_t n = 2; n <= 64; n += 2) {
    EXPECT_EQ(dihedral(n)->order(), n);
  }
  for (std::size_t n : {16U, 32U, 64U}) {
    EXPECT_EQ(semidihedral(n)->order(), n);
  }
  for (std::size_t n : {8U, 16U, 32U, 64U}) {
    EXPECT_EQ(generalized_quaternion(n)->order(), n);
  }
  EXPECT_EQ(extraspecial_p3(5, Exponent::p)->order(), 125U);
  EXPECT_EQ(extraspecial_p3(5, Exponent::p_squared)->order(), 125U);
  EXPECT_EQ(psl3(2)->order(), 168U);
}

TEST(Constructors, InvalidParameters) {
  EXPECT_THROW(cyclic(0), UsageError);
  EXPECT_THROW(dihedral(7), UsageError);
  EXPECT_THROW(semidihedral(8), UsageError);
  EXPECT_THROW(generalized_quaternion(12), UsageError);
  EXPECT_THROW(extraspecial_p3(2, Exponent::p), UsageError);
  EXPECT_THROW(abelian({1, 3}), UsageError);
}

TEST(Constructors, TwoGroupInvolutionCounts) {
  EXPECT_EQ(involution_count(*dihedral(16)), 9U);
  EXPECT_EQ(involution_count(*semidihedral(16)), 5U);
  EXPECT_EQ(involution_count(*generalized_quaternion(16)), 1U);
  EXPECT_EQ(involution_count(*generalized_quaternion(8)), 1U);
  for (std::size_t n : {16U, 32U, 64U}) {
    EXPECT_EQ(involution_count(*dihedral(n)), n / 2 + 1);
    EXPECT_EQ(involution_count(*semidihedral(n)), n / 4 + 1);
    EXPECT_EQ(nilpotency_class(*dihedral(n)), std::countr_zero(n) - 1);
  }
}

TEST(Constructors, DihedralRelations) {
  for (std::size_t two_n = 6; two_n <= 64; two_n += 2) {
    auto const G = dihedral(two_n);
    auto const n = two_n / 2;
    std::size_t rotations = 0;
    for (Elem y = 0; y < G->order(); ++y) {
      if (G->element_order(y) == n) {
        ++rotations;
      }
    }
    std::size_t phi = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      phi += std::gcd(k, n) == 1 ? 1 : 0;
    }
    EXPECT_EQ(rotations, phi) << two_n;
    EXPECT_TRUE(is_dihedral(*G)) << two_n;
    EXPECT_EQ(center(*G).order(), n % 2 == 0 ? 2U : 1U);
  }
  EXPECT_FALSE(is_dihedral(*generalized_quaternion(8)));
  EXPECT_FALSE(is_dihedral(*cyclic(8)));
}

TEST(Constructors, Psl2OrdersAndSimplicity) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}}) {
    auto const  F = gf(p, m);
    std::size_t q = F.size();
    std::size_t expected = q * (q * q - 1) / (q % 2 == 0 ? 1 : 2);
    auto const  G = psl2(F);
    EXPECT_EQ(G->order(), expected) << q;
    EXPECT_EQ(G->degree(), q + 1);
    if (q <= 9) {
      EXPECT_TRUE(is_simple(*G)) << q;
    }
  }
  EXPECT_EQ(psl2(gf(3))->order(), 12U);
  EXPECT_FALSE(is_simple(*psl2(gf(3))));
}

TEST(Constructors, ExtraspecialProperties) {
  for (std::uint32_t p : {3U, 5U, 7U}) {
    for (auto e : {Exponent::p, Exponent::p_squared}) {
      auto const G = extraspecial_p3(p, e);
      EXPECT_EQ(center(*G).order(), p);
      EXPECT_EQ(derived_subgroup(*G).order(), p);
      EXPECT_FALSE(G->is_abelian());
      std::uint32_t exponent = 1;
      for (auto o : G->element_orders()) {
        exponent = std::max(exponent, o);
      }
      EXPECT_EQ(exponent, e == Exponent::p ? p : p * p);
    }
  }
}

TEST(Constructors, FermatAndMersenne) {
  EXPECT_TRUE(is_fermat_prime(17));
  EXPECT_TRUE(is_fermat_prime(257));
  EXPECT_FALSE(is_fermat_prime(11));
  EXPECT_TRUE(is_mersenne_prime(31));
  EXPECT_TRUE(is_mersenne_prime(7));
  EXPECT_FALSE(is_mersenne_prime(11));
  EXPECT_FALSE(is_mersenne_prime(15));
}

TEST(Constructors, SemidirectSymmetricGroup) {
  auto const C2 = cyclic(2);
  auto const C3 = cyclic(3);
  std::int64_t const minus_one[] = {-1};
  ActionSpec spec(C2, C3, {power_automorphism(*C3, minus_one)});
  auto const G = semidirect(spec);
  EXPECT_EQ(G->order(), 6U);
  EXPECT_FALSE(G->is_abelian());
  EXPECT_EQ(center(*G).order(), 1U);
}

TEST(Constructors, SemidirectOrder18) {
  auto const C2 = cyclic(2);
  auto const N  = abelian({3, 3});
  std::int64_t const minus_one[] = {-1, -1};
  ActionSpec spec(C2, N, {power_automorphism(*N, minus_one)});
  auto const G = semidirect(spec);
  EXPECT_EQ(G->order(), 18U);
  EXPECT_TRUE(acts_fixed_point_freely(spec));
  EXPECT_EQ(center(*G).order(), 1U);
}

TEST(Constructors, TrivialActionGivesDirectProduct) {
  auto const H = cyclic(4);
  auto const N = cyclic(3);
  ElemMap id(N->order());
  std::iota(id.begin(), id.end(), 0U);
  auto const G = semidirect(ActionSpec(H, N, {id}));
  EXPECT_EQ(G->order(), 12U);
  EXPECT_TRUE(G->is_abelian());
  EXPECT_EQ(describe(*G), "cyclic:12");
  EXPECT_EQ(describe(*direct_product(*H, *N)), "cyclic:12");
}

TEST(Constructors, ActionRejectsNonHomomorphism) {
  auto const C3 = cyclic(3);
  std::int64_t const minus_one[] = {-1};
  // inversion has order 2, which cannot be the image of an element of order 3
  EXPECT_THROW(ActionSpec(C3, C3, {power_automorphism(*C3, minus_one)}), UsageError);
  ElemMap collapse(C3->order(), 0);
  EXPECT_THROW(ActionSpec(cyclic(2), C3, {collapse}), UsageError);
}

TEST(Constructors, RegularRepresentationRoundTrip) {
  auto const G = dihedral(12);
  auto const T = cayley_table(*G);
  auto const R = regular_representation(T);
  EXPECT_EQ(R->order(), 12U);
  EXPECT_EQ(R->degree(), 12U);
  EXPECT_EQ(describe(*R), "dihedral:12");
}

TEST(Constructors, ProjectivePlane) {
  EXPECT_EQ(projective_plane_size(2), 7U);
  EXPECT_EQ(projective_plane_size(3), 13U);
  EXPECT_EQ(psl3(3)->order(), 5616U);
}
