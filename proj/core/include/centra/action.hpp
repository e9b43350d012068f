#ifndef CENTRA_ACTION_HPP_
#define CENTRA_ACTION_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "centra/group.hpp"

namespace centra {

  //! An element-index permutation of a group, used for automorphisms.
  using ElemMap = std::vector<Elem>;

  //! Extends images of the generators of \p src to a homomorphism
  //! src -> dst. Throws UsageError if the assignment is not well defined.
  ElemMap extend_homomorphism(FiniteGroup const&     src,
                              FiniteGroup const&     dst,
                              std::span<Elem const> generator_images);

  //! Automorphism of N given by generator images; throws UsageError unless
  //! the images define a bijective homomorphism N -> N.
  ElemMap automorphism_from_generators(FiniteGroup const& N, std::span<Elem const> images);

  //! The automorphism sending the i-th generator of N to its e_i-th power.
  ElemMap power_automorphism(FiniteGroup const& N, std::span<std::int64_t const> exponents);

  //! Checks that \p map preserves products on all of N and is a bijection.
  bool is_automorphism(FiniteGroup const& N, ElemMap const& map);

  //! An action of H on N by automorphisms, given on H's generators.
  //!
  //! Construction validates both invariants: each generator image is an
  //! automorphism of N, and the assignment extends to a homomorphism
  //! H -> Aut(N). The extension is kept for every element of H.
  class ActionSpec {
   public:
    ActionSpec(GroupPtr acting, GroupPtr target, std::vector<ElemMap> generator_images);

    GroupPtr const& acting() const noexcept {
      return _acting;
    }
    GroupPtr const& target() const noexcept {
      return _target;
    }
    std::vector<ElemMap> const& generator_images() const noexcept {
      return _gen_images;
    }

    //! φ(h) as a map on N's element indices.
    std::span<Elem const> automorphism(Elem h) const noexcept {
      return {_phi.data() + std::size_t(h) * _target->order(), _target->order()};
    }
    Elem apply(Elem h, Elem n) const noexcept {
      return _phi[std::size_t(h) * _target->order() + n];
    }

   private:
    GroupPtr             _acting;
    GroupPtr             _target;
    std::vector<ElemMap> _gen_images;
    std::vector<Elem>    _phi;
  };

  //! N ⋊ H with (n1, h1)(n2, h2) = (n1 φ(h1)(n2), h1 h2), realised on the
  //! |N| |H| pairs by left multiplication. Pair (n, h) is point n |H| + h.
  GroupPtr semidirect(ActionSpec const& spec, ClosureOptions const& opts = {});

}  // namespace centra

#endif  // CENTRA_ACTION_HPP_
