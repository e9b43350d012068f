#ifndef CENTRA_TEST_HELPERS_HPP_
#define CENTRA_TEST_HELPERS_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "centra/group.hpp"
#include "centra/group_ops.hpp"
#include "centra/perm.hpp"

namespace centra::test {

  inline Perm random_perm(std::size_t n, std::mt19937& rng) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), 0U);
    std::shuffle(images.begin(), images.end(), rng);
    return Perm(std::move(images));
  }

  //! The same abstract group on relabelled points: generators conjugated by
  //! a random permutation.
  inline GroupPtr relabel(FiniteGroup const& G, std::mt19937& rng) {
    auto const        s = random_perm(G.degree(), rng);
    auto const        t = s.inverse();
    std::vector<Perm> gens;
    for (auto const& g : G.generators()) {
      gens.push_back(t * g * s);
    }
    return close_generators(std::move(gens));
  }

  //! Closure of an element subset under multiplication, by brute force.
  inline bool closed_under_mul(FiniteGroup const& G, std::vector<Elem> const& S) {
    ElementSet in(G.order());
    for (Elem x : S) {
      in.set(x);
    }
    for (Elem a : S) {
      for (Elem b : S) {
        if (!in.test(G.mul(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  //! Every subgroup as a member set, by testing all subsets containing the
  //! identity. Only for tiny groups.
  inline std::vector<ElementSet> subgroups_by_subsets(FiniteGroup const& G) {
    std::size_t const       n = G.order();
    std::vector<ElementSet> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << (n - 1)); ++mask) {
      std::vector<Elem> S{0};
      for (std::size_t i = 1; i < n; ++i) {
        if (mask >> (i - 1) & 1U) {
          S.push_back(static_cast<Elem>(i));
        }
      }
      if (n % S.size() != 0 || !closed_under_mul(G, S)) {
        continue;
      }
      ElementSet e(n);
      for (Elem x : S) {
        e.set(x);
      }
      out.push_back(std::move(e));
    }
    return out;
  }

  //! Centralizer straight from the definition.
  inline ElementSet naive_centralizer(FiniteGroup const& G, ElementSet const& S) {
    ElementSet out(G.order());
    for (Elem g = 0; g < G.order(); ++g) {
      bool all = true;
      S.for_each([&](Elem s) {
        all = all && G.mul(g, s) == G.mul(s, g);
      });
      if (all) {
        out.set(g);
      }
    }
    return out;
  }

  //! Literal class-X check over brute-force subgroups of a tiny group.
  inline bool naive_in_x(FiniteGroup const& G, std::vector<ElementSet> const& subgroups) {
    auto const& orders = G.element_orders();
    for (auto const& S : subgroups) {
      bool cyclic = false;
      S.for_each([&](Elem x) { cyclic = cyclic || orders[x] == S.count(); });
      if (!cyclic && !naive_centralizer(G, S).is_subset_of(S)) {
        return false;
      }
    }
    return true;
  }

}  // namespace centra::test

#endif  // CENTRA_TEST_HELPERS_HPP_
