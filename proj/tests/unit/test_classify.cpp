#include <gtest/gtest.h>

#include <random>

#include "centra/action.hpp"
#include "centra/catalog.hpp"
#include "centra/classify.hpp"
#include "centra/constructors.hpp"
#include "centra/groupspec.hpp"
#include "centra/lattice.hpp"
#include "centra/number_theory.hpp"
#include "centra/verifier.hpp"
#include "helpers.hpp"

using namespace centra;

namespace {
  std::vector<GroupPtr> tiny_groups() {
    std::vector<GroupPtr> out;
    for (auto const& e : corpus()) {
      if (e.order <= 16) {
        out.push_back(build_group(e.spec));
      }
    }
    return out;
  }
}  // namespace

TEST(SelfCentralizing, Examples) {
  auto S3 = symmetric(3);
  EXPECT_TRUE(is_self_centralizing(*S3, whole_group(*S3)));
  EXPECT_TRUE(is_self_centralizing(*S3, sylow_subgroup(*S3, 3)));
  auto D8 = dihedral(8);
  EXPECT_FALSE(is_self_centralizing(*D8, center(*D8)));
}

TEST(ClassX, Examples) {
  EXPECT_TRUE(in_class_X(*symmetric(3)).member);
  EXPECT_FALSE(in_class_X(*direct_product(*cyclic(6), *cyclic(2))).member);
  EXPECT_FALSE(in_class_X(*dihedral(12)).member);
  EXPECT_TRUE(in_class_X(*dihedral(8)).member);
  EXPECT_TRUE(in_class_X(*alternating(5)).member);
  EXPECT_TRUE(in_class_X(*extraspecial_p3(3, Exponent::p)).member);
  EXPECT_TRUE(in_class_X(*extraspecial_p3(3, Exponent::p_squared)).member);
  EXPECT_FALSE(in_class_X(*direct_product(*dihedral(8), *cyclic(2))).member);
  EXPECT_EQ(in_class_X(*symmetric(3)).method, Method::pair_reduced);
}

TEST(ClassX, BruteforceExamples) {
  EXPECT_TRUE(in_class_X_bruteforce(*trivial_group()).member);
  EXPECT_TRUE(in_class_X_bruteforce(*cyclic(30)).member);
  EXPECT_TRUE(in_class_X_bruteforce(*abelian({5, 5})).member);
  auto v = in_class_X_bruteforce(*abelian({3, 9}));
  EXPECT_FALSE(v.member);
  EXPECT_EQ(v.method, Method::all_subgroups);
  ASSERT_TRUE(v.witness);
  EXPECT_TRUE(verify_witness(*v.group, *v.witness, ClassTag::X));
}

TEST(ClassC, Examples) {
  EXPECT_TRUE(in_class_C(*cyclic(5)).member);
  EXPECT_TRUE(in_class_C(*symmetric(3)).member);
  auto v = in_class_C(*cyclic(4));
  EXPECT_FALSE(v.member);
  ASSERT_TRUE(v.witness);
  EXPECT_TRUE(verify_witness(*v.group, *v.witness, ClassTag::C));
  EXPECT_EQ(v.method, Method::cyclic_reduced);
}

TEST(ClassXProperty, MatchesLiteralDefinitionOnTinyGroups) {
  for (auto const& G : tiny_groups()) {
    auto subs = test::subgroups_by_subsets(*G);
    ASSERT_EQ(in_class_X(*G).member, test::naive_in_x(*G, subs)) << describe(*G);
    ASSERT_EQ(in_class_X_bruteforce(*G).member, test::naive_in_x(*G, subs)) << describe(*G);
  }
}

TEST(ClassXProperty, OracleEquivalenceOnCorpusPrefix) {
  for (auto const& e : corpus()) {
    if (e.order > 100) {
      continue;
    }
    auto G = build_group(e.spec);
    EXPECT_EQ(in_class_X(*G).member, in_class_X_bruteforce(*G).member) << e.spec;
  }
}

TEST(ClassXProperty, WitnessesReverify) {
  for (auto const& e : corpus()) {
    if (e.order > 200) {
      continue;
    }
    auto G = build_group(e.spec);
    for (auto const& v : {in_class_X(*G), in_class_C(*G)}) {
      if (v.member) {
        EXPECT_FALSE(v.witness.has_value());
        continue;
      }
      ASSERT_TRUE(v.witness) << e.spec;
      auto const& w = *v.witness;
      ASSERT_TRUE(verify_witness(*G, w, v.cls)) << e.spec;
      // independent recheck
      auto K = generated_subgroup(*G, w.generators);
      EXPECT_FALSE(K.contains(w.z));
      for (Elem g : w.generators) {
        EXPECT_TRUE(G->commute(g, w.z));
      }
      if (v.cls == ClassTag::X) {
        EXPECT_FALSE(is_cyclic(K));
      } else {
        EXPECT_GT(K.order(), 1U);
      }
    }
  }
}

TEST(ClassXProperty, SubgroupClosed) {
  for (auto const& G : {alternating(5), dihedral(32), generalized_quaternion(16), psl2(gf(7))}) {
    ASSERT_TRUE(in_class_X(*G).member);
    for (auto const& S : all_subgroups(*G)) {
      ASSERT_TRUE(in_class_X(*as_group(S)).member) << describe(*as_group(S));
    }
  }
}

TEST(ClassXProperty, RelabelInvariant) {
  std::mt19937 rng(9);
  for (auto const& e : corpus()) {
    if (e.order > 120) {
      continue;
    }
    auto G = build_group(e.spec);
    auto H = test::relabel(*G, rng);
    EXPECT_EQ(in_class_X(*G).member, in_class_X(*H).member) << e.spec;
    EXPECT_EQ(in_class_C(*G).member, in_class_C(*H).member) << e.spec;
    EXPECT_EQ(describe(*G), describe(*H)) << e.spec;
  }
}

TEST(ClassXProperty, ClassCInsideXAndCentersOfMembers) {
  for (auto const& e : corpus()) {
    if (e.order > 200) {
      continue;
    }
    auto G = build_group(e.spec);
    bool x = in_class_X(*G).member;
    if (in_class_C(*G).member) {
      EXPECT_TRUE(x) << e.spec;
    }
    if (x && !G->is_abelian()) {
      EXPECT_TRUE(is_cyclic(center(*G))) << e.spec;
    }
    if (G->is_abelian()) {
      // abelian members: cyclic or C_p x C_p
      auto inv = abelian_invariants(*G);
      bool predicted = inv.size() <= 1 || (inv.size() == 2 && inv[0] == inv[1] &&
                                           factorize(inv[0]).size() == 1 && factorize(inv[0])[0].second == 1);
      EXPECT_EQ(x, predicted) << e.spec;
    }
  }
}

TEST(Structure, Examples) {
  auto d = structure(*dihedral(16));
  EXPECT_EQ(d.two_group_family, TwoGroupFamily::dihedral);
  EXPECT_EQ(d.nilpotency_class, 3U);
  EXPECT_EQ(d.center_order, 2U);
  EXPECT_EQ(structure(*semidihedral(32)).two_group_family, TwoGroupFamily::semidihedral);
  EXPECT_EQ(structure(*generalized_quaternion(8)).two_group_family, TwoGroupFamily::quaternion);
  EXPECT_EQ(structure(*abelian({2, 4})).two_group_family, TwoGroupFamily::other);
  EXPECT_FALSE(structure(*symmetric(3)).two_group_family.has_value());

  EXPECT_EQ(structure(*alternating(4)).is_supersolvable, false);
  EXPECT_EQ(structure(*symmetric(3)).is_supersolvable, true);
  EXPECT_EQ(structure(*abelian({2, 2})).invariant_factors, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(abelian_invariants(*abelian({6, 2})), (std::vector<std::size_t>{2, 6}));
  EXPECT_EQ(abelian_invariants(*abelian({4, 6, 9})), (std::vector<std::size_t>{6, 36}));
}

TEST(StructureProperty, FieldsConsistent) {
  for (auto const& e : corpus()) {
    if (e.order > 200) {
      continue;
    }
    auto G = build_group(e.spec);
    auto d = structure(*G);
    EXPECT_EQ(d.order, G->order());
    EXPECT_EQ(d.is_abelian, e.abelian) << e.spec;
    if (d.is_abelian) {
      EXPECT_LE(d.nilpotency_class.value_or(99), 1U);
      EXPECT_EQ(d.center_order, d.order);
      std::size_t prod = 1;
      for (std::size_t i = 0; i < d.invariant_factors.size(); ++i) {
        prod *= d.invariant_factors[i];
        if (i > 0) {
          EXPECT_EQ(d.invariant_factors[i] % d.invariant_factors[i - 1], 0U);
        }
      }
      EXPECT_EQ(prod, d.order);
      EXPECT_EQ(d.invariant_factors.size() <= 1, e.cyclic) << e.spec;
    } else {
      EXPECT_TRUE(d.invariant_factors.empty());
    }
    if (d.two_group_family && *d.two_group_family != TwoGroupFamily::other) {
      EXPECT_TRUE(is_power_of_two(d.order));
      EXPECT_EQ(d.nilpotency_class, std::size_t(std::countr_zero(d.order)) - 1);
    }
    if (d.nilpotency_class) {
      EXPECT_EQ(d.is_supersolvable, true);
    }
  }
}

TEST(Describe, Labels) {
  EXPECT_EQ(describe(*cyclic(6)), "cyclic:6");
  EXPECT_EQ(describe(*abelian({2, 6})), "abelian:2,6");
  EXPECT_EQ(describe(*dihedral(12)), "dihedral:12");
  EXPECT_EQ(describe(*semidihedral(16)), "sd:16");
  EXPECT_EQ(describe(*generalized_quaternion(8)), "q:8");
  EXPECT_EQ(describe(*alternating(4)), "order:12");
  EXPECT_EQ(describe(*symmetric(3)), "dihedral:6");
}

TEST(FixedPointFree, Examples) {
  auto C3 = cyclic(3);
  std::int64_t const minus_one[] = {-1};
  EXPECT_TRUE(acts_fixed_point_freely(ActionSpec(cyclic(2), C3, {power_automorphism(*C3, minus_one)})));
  ElemMap id{0, 1, 2};
  EXPECT_FALSE(acts_fixed_point_freely(ActionSpec(cyclic(2), C3, {id})));
  EXPECT_FALSE(acts_fixed_point_freely(ActionSpec(cyclic(4), C3, {power_automorphism(*C3, minus_one)})));
}

TEST(Certificate, PrintedWitnesses) {
  for (auto const& w : {a7_witness(), m11_witness(), psl3_witness(7)}) {
    auto v = certify_non_membership(w.ambient, w.generators);
    EXPECT_TRUE(v.conclusive) << w.name;
    EXPECT_FALSE(v.member) << w.name;
    EXPECT_EQ(v.method, Method::witness);
    EXPECT_EQ(v.ambient, w.ambient);
    EXPECT_EQ(describe(*v.group), w.expected) << w.name;
    ASSERT_TRUE(v.witness);
    EXPECT_TRUE(verify_witness(*v.group, *v.witness, ClassTag::X));
  }
  EXPECT_EQ(a7_witness().expected, "abelian:2,6");
  EXPECT_EQ(m11_witness().expected, "dihedral:12");
  EXPECT_EQ(psl3_witness(7).expected, "dihedral:12");
  EXPECT_EQ(psl3_witness(11).expected, "dihedral:20");
}

TEST(Certificate, InconclusiveWhenSubgroupIsMember) {
  auto v = certify_non_membership("sym:4", {Perm::from_cycles("(1,2,3)", 4), Perm::from_cycles("(1,2)", 4)});
  EXPECT_FALSE(v.conclusive);
  EXPECT_FALSE(v.witness.has_value());
  // the psl3 pair gives C2 x C2 for p = 3 and D8 for p = 5, both in X
  for (std::uint32_t p : {3U, 5U}) {
    auto w = psl3_witness(p);
    EXPECT_FALSE(certify_non_membership(w.ambient, w.generators).conclusive) << p;
  }
  EXPECT_EQ(describe(*certify_non_membership("PSL3(5)", psl3_witness(5).generators).group), "dihedral:8");
  EXPECT_TRUE(certify_non_membership("PSL3(13)", psl3_witness(13).generators).conclusive);
}

TEST(Simple, Examples) {
  EXPECT_TRUE(is_simple(*alternating(5)));
  EXPECT_FALSE(is_simple(*symmetric(3)));
  EXPECT_TRUE(is_simple(*psl2(gf(7))));
  EXPECT_TRUE(is_simple(*cyclic(7)));
  EXPECT_FALSE(is_simple(*trivial_group()));
  EXPECT_FALSE(is_simple(*cyclic(6)));
}

TEST(LemmaFamily, CenterContainment) {
  EXPECT_TRUE(noncyclic_subgroups_contain_center(*dihedral(16)));
  EXPECT_FALSE(noncyclic_subgroups_contain_center(*dihedral(12)));
  EXPECT_TRUE(noncyclic_subgroups_contain_center(*alternating(5)));
}
