#include "centra/group_ops.hpp"

#include <algorithm>

namespace centra {

  namespace {
    // Breadth-first closure that can absorb extra generators later on.
    class Closure {
     public:
      explicit Closure(FiniteGroup const& G) : _G(G), _set(G.order()) {
        _set.set(FiniteGroup::identity());
        _list.push_back(FiniteGroup::identity());
      }

      bool add(Elem x) {
        if (_set.test(x)) {
          return false;
        }
        _gens.push_back(x);
        std::size_t const old = _list.size();
        for (std::size_t i = 0; i < old; ++i) {
          push(_G.mul(_list[i], x));
        }
        for (std::size_t i = old; i < _list.size(); ++i) {
          for (Elem g : _gens) {
            push(_G.mul(_list[i], g));
          }
        }
        return true;
      }

      ElementSet const& set() const noexcept {
        return _set;
      }
      std::vector<Elem> const& gens() const noexcept {
        return _gens;
      }

     private:
      void push(Elem y) {
        if (!_set.test(y)) {
          _set.set(y);
          _list.push_back(y);
        }
      }

      FiniteGroup const& _G;
      ElementSet         _set;
      std::vector<Elem>  _list;
      std::vector<Elem>  _gens;
    };
  }  // namespace

  ElementSet closure_of(FiniteGroup const& G, std::span<Elem const> gens) {
    Closure c(G);
    for (Elem g : gens) {
      c.add(g);
    }
    return c.set();
  }

  SubgroupRef generated_subgroup(FiniteGroup const& G, std::span<Elem const> gens) {
    return SubgroupRef(G.ptr(), closure_of(G, gens));
  }

  SubgroupRef whole_group(FiniteGroup const& G) {
    return SubgroupRef(G.ptr(), G.all());
  }

  SubgroupRef trivial_subgroup(FiniteGroup const& G) {
    return SubgroupRef(G.ptr(), G.trivial());
  }

  std::vector<Elem> generating_set(FiniteGroup const& G, ElementSet const& members) {
    // Prefer elements of large order: fewer generators on average.
    auto const& orders = G.element_orders();
    auto        elems  = members.to_vector();
    std::stable_sort(elems.begin(), elems.end(),
                     [&](Elem a, Elem b) { return orders[a] > orders[b]; });
    Closure c(G);
    for (Elem x : elems) {
      if (c.set() == members) {
        break;
      }
      c.add(x);
    }
    return c.gens();
  }

  std::vector<Elem> generating_set(SubgroupRef const& S) {
    return generating_set(S.parent(), S.members());
  }

  SubgroupRef centralizer(FiniteGroup const& G, std::span<Elem const> S) {
    ElementSet c = G.all();
    for (Elem s : S) {
      c &= G.centralizer_of(s);
    }
    return SubgroupRef(G.ptr(), std::move(c));
  }

  SubgroupRef centralizer(FiniteGroup const& G, SubgroupRef const& S) {
    auto gens = generating_set(S);
    return centralizer(G, gens);
  }

  SubgroupRef center(FiniteGroup const& G) {
    return SubgroupRef(G.ptr(), G.center_set());
  }

  SubgroupRef normal_closure(FiniteGroup const& G, std::span<Elem const> S) {
    Closure c(G);
    for (Elem s : S) {
      c.add(s);
    }
    // Conjugates of the generating list by G's generators must stay inside.
    for (std::size_t i = 0; i < c.gens().size(); ++i) {
      Elem h = c.gens()[i];
      for (Elem g : G.generator_elements()) {
        c.add(G.conj(h, g));
      }
    }
    return SubgroupRef(G.ptr(), c.set());
  }

  SubgroupRef commutator_subgroup(FiniteGroup const& G,
                                  SubgroupRef const& A,
                                  SubgroupRef const& B) {
    auto              ga = generating_set(A);
    auto              gb = generating_set(B);
    std::vector<Elem> comms;
    for (Elem a : ga) {
      for (Elem b : gb) {
        comms.push_back(G.comm(a, b));
      }
    }
    return normal_closure(G, comms);
  }

  SubgroupRef derived_subgroup(FiniteGroup const& G) {
    auto const&       gens = G.generator_elements();
    std::vector<Elem> comms;
    for (Elem a : gens) {
      for (Elem b : gens) {
        comms.push_back(G.comm(a, b));
      }
    }
    return normal_closure(G, comms);
  }

  std::vector<SubgroupRef> lower_central_series(FiniteGroup const& G) {
    std::vector<SubgroupRef> series{whole_group(G)};
    SubgroupRef const        full = series.front();
    while (true) {
      auto next = commutator_subgroup(G, series.back(), full);
      if (next.members() == series.back().members()) {
        break;
      }
      series.push_back(std::move(next));
    }
    return series;
  }

  std::optional<std::size_t> nilpotency_class(FiniteGroup const& G) {
    auto series = lower_central_series(G);
    if (series.back().order() != 1) {
      return std::nullopt;
    }
    return series.size() - 1;
  }

  GroupPtr as_group(SubgroupRef const& S) {
    auto const&       G    = S.parent();
    auto              gens = generating_set(S);
    std::vector<Perm> perms;
    for (Elem g : gens) {
      perms.push_back(G.element(g));
    }
    if (perms.empty()) {
      perms.push_back(Perm::identity(G.degree()));
    }
    return FiniteGroup::close(std::move(perms), G.options());
  }

  std::size_t involution_count(FiniteGroup const& G) {
    auto const& orders = G.element_orders();
    return static_cast<std::size_t>(std::count(orders.begin(), orders.end(), 2U));
  }

}  // namespace centra
