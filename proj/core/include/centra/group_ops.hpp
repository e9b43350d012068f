#ifndef CENTRA_GROUP_OPS_HPP_
#define CENTRA_GROUP_OPS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "centra/group.hpp"

namespace centra {

  //! Members of ⟨gens⟩ inside G.
  ElementSet closure_of(FiniteGroup const& G, std::span<Elem const> gens);

  SubgroupRef generated_subgroup(FiniteGroup const& G, std::span<Elem const> gens);

  SubgroupRef whole_group(FiniteGroup const& G);
  SubgroupRef trivial_subgroup(FiniteGroup const& G);

  //! A short generating list for a subgroup, chosen greedily in increasing
  //! element order (so the result is deterministic).
  std::vector<Elem> generating_set(FiniteGroup const& G, ElementSet const& members);
  std::vector<Elem> generating_set(SubgroupRef const& S);

  //! {g in G : g s == s g for all s in S}. Testing against S itself (or any
  //! generating set of ⟨S⟩) is enough.
  SubgroupRef centralizer(FiniteGroup const& G, std::span<Elem const> S);
  SubgroupRef centralizer(FiniteGroup const& G, SubgroupRef const& S);

  //! Z(G), cached on the group.
  SubgroupRef center(FiniteGroup const& G);

  //! Smallest normal subgroup containing S.
  SubgroupRef normal_closure(FiniteGroup const& G, std::span<Elem const> S);

  //! [A, B] for normal subgroups A and B of G.
  SubgroupRef commutator_subgroup(FiniteGroup const& G,
                                  SubgroupRef const& A,
                                  SubgroupRef const& B);

  SubgroupRef derived_subgroup(FiniteGroup const& G);

  //! G = γ1 ≥ γ2 ≥ ... until the series stabilises; the stable term appears
  //! once, at the end.
  std::vector<SubgroupRef> lower_central_series(FiniteGroup const& G);

  //! Class c when γ_{c+1} = 1, nullopt for non-nilpotent groups.
  std::optional<std::size_t> nilpotency_class(FiniteGroup const& G);

  //! The subgroup as a group in its own right, on the same points.
  GroupPtr as_group(SubgroupRef const& S);

  //! Number of involutions (elements of order 2).
  std::size_t involution_count(FiniteGroup const& G);

}  // namespace centra

#endif  // CENTRA_GROUP_OPS_HPP_
