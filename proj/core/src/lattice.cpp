#include "centra/lattice.hpp"

#include <algorithm>
#include <unordered_map>

#include "centra/error.hpp"
#include "centra/group_ops.hpp"
#include "centra/number_theory.hpp"

namespace centra {

  namespace {
    void sort_canonically(std::vector<SubgroupRef>& items) {
      std::sort(items.begin(), items.end(), [](SubgroupRef const& a, SubgroupRef const& b) {
        if (a.order() != b.order()) {
          return a.order() < b.order();
        }
        return a.members() < b.members();
      });
    }
  }  // namespace

  SubgroupList::SubgroupList(GroupPtr parent, std::vector<SubgroupRef> items)
      : _parent(std::move(parent)), _items(std::move(items)) {
    sort_canonically(_items);
  }

  SubgroupList cyclic_subgroups(FiniteGroup const& G) {
    std::unordered_map<ElementSet, Elem, ElementSetHash> seen;
    std::vector<SubgroupRef>                             items;
    for (Elem x = 0; x < G.order(); ++x) {
      auto c = G.cyclic_of(x);
      if (seen.emplace(c, x).second) {
        items.emplace_back(G.ptr(), std::move(c));
      }
    }
    return SubgroupList(G.ptr(), std::move(items));
  }

  SubgroupList all_subgroups(FiniteGroup const& G, LatticeOptions const& opts) {
    if (G.order() > opts.max_order) {
      throw CapExceeded("all_subgroups: group of order " + std::to_string(G.order())
                            + " exceeds the brute-force cap of "
                            + std::to_string(opts.max_order)
                            + "; use the pair-reduced membership test instead",
                        opts.max_order,
                        G.order());
    }
    // One generator per cyclic subgroup.
    std::vector<Elem> cyclic_gens;
    {
      std::unordered_map<ElementSet, Elem, ElementSetHash> seen;
      for (Elem x = 0; x < G.order(); ++x) {
        if (seen.emplace(G.cyclic_of(x), x).second) {
          cyclic_gens.push_back(x);
        }
      }
    }

    struct Known {
      ElementSet        members;
      std::vector<Elem> gens;
    };
    std::vector<Known>                                          known;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
    auto add = [&](ElementSet members, std::vector<Elem> gens) {
      if (index.contains(members)) {
        return false;
      }
      index.emplace(members, known.size());
      known.push_back({std::move(members), std::move(gens)});
      return true;
    };

    for (Elem c : cyclic_gens) {
      add(G.cyclic_of(c), c == FiniteGroup::identity() ? std::vector<Elem>{}
                                                      : std::vector<Elem>{c});
    }
    std::size_t layer_begin = 0;
    while (layer_begin < known.size()) {
      std::size_t const layer_end = known.size();
      for (std::size_t i = layer_begin; i < layer_end; ++i) {
        for (Elem c : cyclic_gens) {
          if (known[i].members.test(c)) {
            continue;
          }
          auto gens = known[i].gens;
          gens.push_back(c);
          auto members = closure_of(G, gens);
          add(std::move(members), std::move(gens));
        }
      }
      layer_begin = layer_end;
    }

    std::vector<SubgroupRef> items;
    items.reserve(known.size());
    for (auto& k : known) {
      items.emplace_back(G.ptr(), std::move(k.members));
    }
    return SubgroupList(G.ptr(), std::move(items));
  }

  bool is_cyclic(SubgroupRef const& S) {
    auto const&       orders = S.parent().element_orders();
    std::size_t const n      = S.order();
    bool              found  = false;
    S.members().for_each([&](Elem x) {
      if (orders[x] == n) {
        found = true;
      }
    });
    return found;
  }

  SubgroupList maximal_subgroups(FiniteGroup const& G, LatticeOptions const& opts) {
    auto                     all = all_subgroups(G, opts);
    std::vector<SubgroupRef> proper;
    for (auto const& S : all) {
      if (S.order() < G.order()) {
        proper.push_back(S);
      }
    }
    std::vector<SubgroupRef> maximal;
    for (std::size_t i = 0; i < proper.size(); ++i) {
      bool is_max = true;
      for (std::size_t j = 0; j < proper.size() && is_max; ++j) {
        if (proper[j].order() > proper[i].order() && proper[i].is_subgroup_of(proper[j])) {
          is_max = false;
        }
      }
      if (is_max) {
        maximal.push_back(proper[i]);
      }
    }
    return SubgroupList(G.ptr(), std::move(maximal));
  }

  SubgroupRef normalizer(FiniteGroup const& G, SubgroupRef const& S) {
    auto       gens = generating_set(S);
    ElementSet result(G.order());
    for (Elem g = 0; g < G.order(); ++g) {
      bool normalizes = true;
      for (Elem s : gens) {
        if (!S.contains(G.conj(s, g))) {
          normalizes = false;
          break;
        }
      }
      if (normalizes) {
        result.set(g);
      }
    }
    return SubgroupRef(G.ptr(), std::move(result));
  }

  SubgroupRef sylow_subgroup(FiniteGroup const& G, std::uint64_t p) {
    if (!is_prime(p)) {
      throw UsageError("sylow_subgroup: " + std::to_string(p) + " is not prime");
    }
    std::size_t target = 1;
    for (std::size_t n = G.order(); n % p == 0; n /= p) {
      target *= p;
    }
    auto P = trivial_subgroup(G);
    if (target == 1) {
      return P;
    }
    auto const& orders = G.element_orders();
    auto is_p_power    = [p](std::uint64_t n) {
      while (n % p == 0) {
        n /= p;
      }
      return n == 1;
    };

    while (P.order() < target) {
      // p divides |N(P) : P| while P is not Sylow, so N(P) \ P holds an
      // element of p-power order; adjoining it keeps P a p-group.
      auto N     = normalizer(G, P);
      Elem chosen = FiniteGroup::identity();
      N.members().for_each([&](Elem x) {
        if (chosen == FiniteGroup::identity() && !P.contains(x) && is_p_power(orders[x])) {
          chosen = x;
        }
      });
      if (chosen == FiniteGroup::identity()) {
        throw std::logic_error("sylow_subgroup: normalizer growth stalled");
      }
      auto gens = generating_set(P);
      gens.push_back(chosen);
      P = generated_subgroup(G, gens);
    }

    // Sylow subgroups are conjugate; scan the conjugates for the least.
    ElementSet best = P.members();
    auto const N = normalizer(G, P);
    ElementSet covered(G.order());  // union of cosets N g already handled
    for (Elem g = 0; g < G.order(); ++g) {
      if (covered.test(g)) {
        continue;
      }
      // conjugation by every element of N g gives the same subgroup
      N.members().for_each([&](Elem n) { covered.set(G.mul(n, g)); });
      ElementSet conj(G.order());
      P.members().for_each([&](Elem x) { conj.set(G.conj(x, g)); });
      if (conj < best) {
        best = conj;
      }
    }
    return SubgroupRef(G.ptr(), std::move(best));
  }

  SubgroupList minimal_normal_subgroups(FiniteGroup const& G) {
    std::vector<ElementSet> closures;
    for (Elem r : G.class_representatives()) {
      if (r == FiniteGroup::identity()) {
        continue;
      }
      Elem one[] = {r};
      auto ncl   = normal_closure(G, one).members();
      if (std::find(closures.begin(), closures.end(), ncl) == closures.end()) {
        closures.push_back(std::move(ncl));
      }
    }
    std::vector<SubgroupRef> minimal;
    for (std::size_t i = 0; i < closures.size(); ++i) {
      bool is_min = true;
      for (std::size_t j = 0; j < closures.size() && is_min; ++j) {
        if (i != j && closures[j].is_subset_of(closures[i]) && closures[j] != closures[i]) {
          is_min = false;
        }
      }
      if (is_min) {
        minimal.emplace_back(G.ptr(), closures[i]);
      }
    }
    return SubgroupList(G.ptr(), std::move(minimal));
  }

}  // namespace centra
