#ifndef CENTRA_GROUP_HPP_
#define CENTRA_GROUP_HPP_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "centra/element_set.hpp"
#include "centra/perm.hpp"

namespace centra {

  //! Index of an element in a FiniteGroup's canonical element list.
  using Elem = std::uint32_t;

  class FiniteGroup;
  using GroupPtr = std::shared_ptr<FiniteGroup const>;

  struct ClosureOptions {
    //! Enumeration stops with CapExceeded once this many elements exist.
    std::size_t max_order = 200'000;
    //! Upper bound on order * degree (stored image entries).
    std::size_t max_storage = std::size_t(1) << 27;
    //! Groups up to this order get a full multiplication table.
    std::size_t table_limit = 2'600;
  };

  //! A fully enumerated permutation group.
  //!
  //! Elements are sorted lexicographically by image array, so the identity
  //! is always element 0 and two constructions of the same group have the
  //! same element indexing. Instances are immutable once built; the lazily
  //! filled caches are guarded by std::call_once and safe to read from
  //! several threads. Always held through a GroupPtr.
  class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
    struct Token {};

   public:
    //! ⟨gens⟩ by breadth-first closure. Throws UsageError for an empty or
    //! mixed-degree generator list and CapExceeded past the order cap.
    static GroupPtr close(std::vector<Perm> gens, ClosureOptions const& opts = {});

    FiniteGroup(Token, std::size_t degree, std::vector<Perm> gens,
                std::vector<Point> images, std::size_t order,
                ClosureOptions const& opts);

    FiniteGroup(FiniteGroup const&)            = delete;
    FiniteGroup& operator=(FiniteGroup const&) = delete;

    std::size_t degree() const noexcept {
      return _degree;
    }
    std::size_t order() const noexcept {
      return _order;
    }
    std::vector<Perm> const& generators() const noexcept {
      return _gens;
    }
    std::vector<Elem> const& generator_elements() const noexcept {
      return _gen_elems;
    }
    ClosureOptions const& options() const noexcept {
      return _opts;
    }

    static constexpr Elem identity() noexcept {
      return 0;
    }

    std::span<Point const> images(Elem e) const noexcept {
      return {_images.data() + std::size_t(e) * _degree, _degree};
    }
    Perm element(Elem e) const;

    std::optional<Elem> find(Perm const& p) const;
    //! Like find, but throws UsageError for non-members.
    Elem index_of(Perm const& p) const;
    bool contains(Perm const& p) const {
      return find(p).has_value();
    }

    Elem mul(Elem a, Elem b) const noexcept {
      if (_has_table) {
        return _table[std::size_t(a) * _order + b];
      }
      return mul_slow(a, b);
    }
    Elem inv(Elem a) const noexcept {
      return _inverse[a];
    }
    Elem pow(Elem a, std::int64_t k) const;
    //! g^-1 a g
    Elem conj(Elem a, Elem g) const noexcept {
      return mul(mul(inv(g), a), g);
    }
    //! a^-1 b^-1 a b
    Elem comm(Elem a, Elem b) const noexcept {
      return mul(mul(inv(a), inv(b)), mul(a, b));
    }
    bool commute(Elem a, Elem b) const noexcept {
      return mul(a, b) == mul(b, a);
    }

    std::uint32_t element_order(Elem e) const;
    std::vector<std::uint32_t> const& element_orders() const;
    bool is_abelian() const;

    ElementSet all() const;
    ElementSet trivial() const;

    //! {g : g e == e g}; served from a per-element cache on small groups.
    ElementSet centralizer_of(Elem e) const;
    //! Members of ⟨e⟩.
    ElementSet cyclic_of(Elem e) const;

    //! Orbits under conjugation, each sorted, ordered by least member.
    std::vector<std::vector<Elem>> const& conjugacy_classes() const;
    std::vector<Elem> const&              class_representatives() const;
    std::size_t                           class_index(Elem e) const;

    ElementSet const& center_set() const;

    std::shared_ptr<FiniteGroup const> ptr() const {
      return shared_from_this();
    }

   private:
    Elem mul_slow(Elem a, Elem b) const noexcept;
    std::optional<Elem> lookup_key(Point const* key) const noexcept;
    void build_index();
    void build_table();
    bool small_enough_for_caches() const noexcept;

    std::size_t        _degree;
    std::size_t        _order;
    std::vector<Perm>  _gens;
    std::vector<Elem>  _gen_elems;
    std::vector<Point> _images;
    ClosureOptions     _opts;

    std::vector<Point> _base;
    std::vector<Elem>  _slots;
    std::size_t        _slot_mask = 0;
    std::vector<Elem>  _inverse;
    std::vector<Elem>  _table;
    bool               _has_table = false;

    mutable std::once_flag              _orders_once;
    mutable std::vector<std::uint32_t>  _orders;
    mutable std::once_flag              _classes_once;
    mutable std::vector<std::vector<Elem>> _classes;
    mutable std::vector<Elem>           _class_reps;
    mutable std::vector<std::uint32_t>  _class_of;
    mutable std::once_flag              _center_once;
    mutable ElementSet                  _center;
    mutable std::once_flag              _centralizers_once;
    mutable std::vector<ElementSet>     _centralizers;
    mutable std::once_flag              _cyclics_once;
    mutable std::vector<ElementSet>     _cyclics;
    mutable std::once_flag              _abelian_once;
    mutable bool                        _abelian = false;
  };

  //! A subgroup of a FiniteGroup, as a member bit-set over the parent's
  //! element indices. Holds a reference-counted pointer to the parent.
  class SubgroupRef {
   public:
    SubgroupRef() = default;
    SubgroupRef(GroupPtr parent, ElementSet members);

    FiniteGroup const& parent() const noexcept {
      return *_parent;
    }
    GroupPtr const& parent_ptr() const noexcept {
      return _parent;
    }
    ElementSet const& members() const noexcept {
      return _members;
    }
    std::size_t order() const noexcept {
      return _members.count();
    }
    bool contains(Elem e) const noexcept {
      return _members.test(e);
    }
    bool is_subgroup_of(SubgroupRef const& other) const noexcept {
      return _members.is_subset_of(other._members);
    }
    std::vector<Elem> elements() const {
      return _members.to_vector();
    }

    friend bool operator==(SubgroupRef const& a, SubgroupRef const& b) {
      return a._parent == b._parent && a._members == b._members;
    }

   private:
    GroupPtr   _parent;
    ElementSet _members;
  };

  //! close_generators in the operation list: the enumerated group ⟨gens⟩.
  inline GroupPtr close_generators(std::vector<Perm> gens,
                                   ClosureOptions const& opts = {}) {
    return FiniteGroup::close(std::move(gens), opts);
  }

  //! The trivial group acting on one point.
  GroupPtr trivial_group();

}  // namespace centra

#endif  // CENTRA_GROUP_HPP_
