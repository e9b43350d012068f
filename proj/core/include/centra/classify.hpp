#ifndef CENTRA_CLASSIFY_HPP_
#define CENTRA_CLASSIFY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "centra/action.hpp"
#include "centra/group.hpp"
#include "centra/lattice.hpp"

namespace centra {

  enum class ClassTag { X, C };

  enum class Method {
    all_subgroups,   // literal scan over every non-cyclic subgroup
    pair_reduced,    // 2-generated subgroups from class representatives
    cyclic_reduced,  // cyclic subgroups from class representatives (class C)
    witness          // verdict inherited from a subgroup
  };

  std::string_view to_string(ClassTag c) noexcept;
  std::string_view to_string(Method m) noexcept;

  //! A violation: z centralizes ⟨generators⟩ without lying in it. For class
  //! X the generated subgroup is non-cyclic, for class C it is non-trivial.
  struct Witness {
    std::vector<Elem> generators;
    Elem              z = 0;
  };

  struct MembershipVerdict {
    ClassTag cls        = ClassTag::X;
    bool     member     = true;
    //! false only for a failed certificate: neither membership nor
    //! non-membership was established.
    bool     conclusive = true;
    Method   method     = Method::pair_reduced;
    //! The group the witness elements belong to.
    GroupPtr               group;
    std::optional<Witness> witness;
    //! For certificates, the ambient group the verdict speaks about.
    std::string ambient;
  };

  //! Recomputes everything a witness claims, from scratch.
  bool verify_witness(FiniteGroup const& G, Witness const& w, ClassTag cls);

  bool is_self_centralizing(FiniteGroup const& G, SubgroupRef const& S);

  //! Class X by the pair reduction. A counterexample H (non-cyclic, with
  //! z in C(H) outside H) contains a non-cyclic K = ⟨a,b⟩, since a finite
  //! group all of whose 2-generated subgroups are cyclic is cyclic; then
  //! z lies in C(K) and outside K. Conjugating moves a to its class
  //! representative. Pairs with C(a) ∩ C(b) inside ⟨a⟩ or ⟨b⟩ cannot
  //! violate and are skipped without closing ⟨a,b⟩.
  MembershipVerdict in_class_X(FiniteGroup const& G);

  //! Class X straight from the definition, over all_subgroups.
  MembershipVerdict in_class_X_bruteforce(FiniteGroup const& G, LatticeOptions const& opts = {});

  //! Class C: every non-trivial subgroup H contains some ⟨a⟩ with a ≠ 1, and
  //! C(H) ⊆ C(a), so it suffices that C(a) ⊆ ⟨a⟩ for each class representative.
  MembershipVerdict in_class_C(FiniteGroup const& G);

  enum class TwoGroupFamily { dihedral, semidihedral, quaternion, other };
  std::string_view to_string(TwoGroupFamily f) noexcept;

  struct StructureDescriptor {
    std::size_t order      = 1;
    bool        is_abelian = true;
    //! Ascending divisibility chain, e.g. {2, 6}; empty unless abelian.
    std::vector<std::size_t>   invariant_factors;
    std::optional<std::size_t> nilpotency_class;
    //! Unknown when the maximal-subgroup scan would exceed the lattice cap.
    std::optional<bool> is_supersolvable;
    //! Set only for 2-groups.
    std::optional<TwoGroupFamily> two_group_family;
    std::size_t                   center_order = 1;
  };

  StructureDescriptor structure(FiniteGroup const& G, LatticeOptions const& opts = {});

  //! Invariant factors of an abelian group, from counts of elements of
  //! each prime-power order. Throws UsageError if G is not abelian.
  std::vector<std::size_t> abelian_invariants(FiniteGroup const& G);

  //! Every maximal subgroup has prime index. nullopt above the lattice cap
  //! unless a shortcut (nilpotent, or perfect) decides it.
  std::optional<bool> is_supersolvable(FiniteGroup const& G, LatticeOptions const& opts = {});

  //! |G| = 2n with y of order n and an involution x outside ⟨y⟩ inverting y.
  bool is_dihedral(FiniteGroup const& G);

  //! A short family label such as "cyclic:6", "abelian:2,6", "dihedral:12",
  //! "sd:16", "q:8", falling back to "order:N".
  std::string describe(FiniteGroup const& G);

  bool acts_fixed_point_freely(ActionSpec const& spec);

  //! Builds K = ⟨gens⟩ and tests it for class X. Non-membership of K
  //! certifies non-membership of any group containing it, since class X is
  //! subgroup closed. If K is in X the result is inconclusive.
  MembershipVerdict certify_non_membership(std::string_view      ambient_label,
                                           std::vector<Perm>     gens,
                                           ClosureOptions const& opts = {});

  bool is_simple(FiniteGroup const& G);

  //! Every non-cyclic subgroup of G contains Z(G).
  bool noncyclic_subgroups_contain_center(FiniteGroup const& G, LatticeOptions const& opts = {});

}  // namespace centra

#endif  // CENTRA_CLASSIFY_HPP_
