#ifndef CENTRA_LATTICE_HPP_
#define CENTRA_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "centra/group.hpp"

namespace centra {

  //! Deduplicated subgroups of one parent, sorted by (order, member set).
  class SubgroupList {
   public:
    SubgroupList() = default;
    SubgroupList(GroupPtr parent, std::vector<SubgroupRef> items);

    GroupPtr const& parent() const noexcept {
      return _parent;
    }
    std::vector<SubgroupRef> const& items() const noexcept {
      return _items;
    }
    std::size_t size() const noexcept {
      return _items.size();
    }
    SubgroupRef const& operator[](std::size_t i) const {
      return _items[i];
    }
    auto begin() const noexcept {
      return _items.begin();
    }
    auto end() const noexcept {
      return _items.end();
    }

   private:
    GroupPtr                 _parent;
    std::vector<SubgroupRef> _items;
  };

  struct LatticeOptions {
    //! all_subgroups refuses groups larger than this.
    std::size_t max_order = 2000;
  };

  //! Every subgroup of G: start from the cyclic subgroups and repeatedly
  //! join each known subgroup with one more cyclic subgroup until nothing
  //! new appears. Throws CapExceeded above LatticeOptions::max_order.
  SubgroupList all_subgroups(FiniteGroup const& G, LatticeOptions const& opts = {});

  //! ⟨x⟩ for every x, deduplicated.
  SubgroupList cyclic_subgroups(FiniteGroup const& G);

  //! True iff some member generates S.
  bool is_cyclic(SubgroupRef const& S);

  SubgroupList maximal_subgroups(FiniteGroup const& G, LatticeOptions const& opts = {});

  //! {g : g^-1 S g = S}, by an elementwise scan.
  SubgroupRef normalizer(FiniteGroup const& G, SubgroupRef const& S);

  //! A Sylow p-subgroup: a p-subgroup is grown inside successive normalizers
  //! until its order is the full p-part of |G|; among all Sylow
  //! p-subgroups, the one with the least member set is returned. Returns the
  //! trivial subgroup when p does not divide |G|.
  SubgroupRef sylow_subgroup(FiniteGroup const& G, std::uint64_t p);

  //! Minimal normal subgroups, found among normal closures of single
  //! conjugacy classes.
  SubgroupList minimal_normal_subgroups(FiniteGroup const& G);

}  // namespace centra

#endif  // CENTRA_LATTICE_HPP_
