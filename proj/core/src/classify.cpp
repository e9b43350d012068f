#include "centra/classify.hpp"

#include <algorithm>
#include <map>

#include "centra/error.hpp"
#include "centra/group_ops.hpp"
#include "centra/number_theory.hpp"

namespace centra {

  std::string_view to_string(ClassTag c) noexcept {
    return c == ClassTag::X ? "X" : "C";
  }

  std::string_view to_string(Method m) noexcept {
    switch (m) {
      case Method::all_subgroups:
        return "all-subgroups";
      case Method::pair_reduced:
        return "pair-reduced";
      case Method::cyclic_reduced:
        return "cyclic-reduced";
      case Method::witness:
        return "witness";
    }
    return "unknown";
  }

  std::string_view to_string(TwoGroupFamily f) noexcept {
    switch (f) {
      case TwoGroupFamily::dihedral:
        return "dihedral";
      case TwoGroupFamily::semidihedral:
        return "semidihedral";
      case TwoGroupFamily::quaternion:
        return "quaternion";
      case TwoGroupFamily::other:
        return "other";
    }
    return "other";
  }

  bool verify_witness(FiniteGroup const& G, Witness const& w, ClassTag cls) {
    for (Elem g : w.generators) {
      if (g >= G.order()) {
        return false;
      }
    }
    if (w.z >= G.order()) {
      return false;
    }
    auto K = generated_subgroup(G, w.generators);
    if (cls == ClassTag::X ? is_cyclic(K) : K.order() == 1) {
      return false;
    }
    for (Elem g : w.generators) {
      if (!G.commute(g, w.z)) {
        return false;
      }
    }
    return !K.contains(w.z);
  }

  bool is_self_centralizing(FiniteGroup const& G, SubgroupRef const& S) {
    return centralizer(G, S).is_subgroup_of(S);
  }

  MembershipVerdict in_class_X(FiniteGroup const& G) {
    MembershipVerdict v;
    v.cls    = ClassTag::X;
    v.method = Method::pair_reduced;
    v.group  = G.ptr();
    for (Elem a : G.class_representatives()) {
      if (a == FiniteGroup::identity()) {
        continue;
      }
      auto const cyc_a  = G.cyclic_of(a);
      auto const cent_a = G.centralizer_of(a);
      for (Elem b = 1; b < G.order(); ++b) {
        if (cyc_a.test(b)) {
          continue;
        }
        auto cab = cent_a & G.centralizer_of(b);
        if (cab.is_subset_of(cyc_a) || cab.is_subset_of(G.cyclic_of(b))) {
          continue;
        }
        Elem const pair[] = {a, b};
        auto       K      = generated_subgroup(G, pair);
        if (cab.is_subset_of(K.members()) || is_cyclic(K)) {
          continue;
        }
        v.member  = false;
        v.witness = Witness{{a, b}, static_cast<Elem>(cab.first_not_in(K.members()))};
        return v;
      }
    }
    return v;
  }

  MembershipVerdict in_class_X_bruteforce(FiniteGroup const& G, LatticeOptions const& opts) {
    MembershipVerdict v;
    v.cls    = ClassTag::X;
    v.method = Method::all_subgroups;
    v.group  = G.ptr();
    for (auto const& S : all_subgroups(G, opts)) {
      if (is_cyclic(S)) {
        continue;
      }
      auto C = centralizer(G, S);
      if (!C.is_subgroup_of(S)) {
        v.member  = false;
        v.witness = Witness{generating_set(S),
                            static_cast<Elem>(C.members().first_not_in(S.members()))};
        return v;
      }
    }
    return v;
  }

  MembershipVerdict in_class_C(FiniteGroup const& G) {
    MembershipVerdict v;
    v.cls    = ClassTag::C;
    v.method = Method::cyclic_reduced;
    v.group  = G.ptr();
    for (Elem a : G.class_representatives()) {
      if (a == FiniteGroup::identity()) {
        continue;
      }
      auto const cyc  = G.cyclic_of(a);
      auto const cent = G.centralizer_of(a);
      if (!cent.is_subset_of(cyc)) {
        v.member  = false;
        v.witness = Witness{{a}, static_cast<Elem>(cent.first_not_in(cyc))};
        return v;
      }
    }
    return v;
  }

  std::vector<std::size_t> abelian_invariants(FiniteGroup const& G) {
    if (!G.is_abelian()) {
      throw UsageError("abelian_invariants: group is not abelian");
    }
    auto const& orders = G.element_orders();
    // prime-power exponents of the cyclic factors, largest first, per prime
    std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> per_prime;
    for (auto [p, e] : factorize(G.order())) {
      // omega[j] = log_p #{x : x^(p^j) = 1}
      std::vector<unsigned> omega(e + 1, 0);
      std::uint64_t         pj = 1;
      for (unsigned j = 1; j <= e; ++j) {
        pj *= p;
        std::size_t n = 0;
        for (auto o : orders) {
          n += (pj % o == 0);
        }
        while (n > 1) {
          n /= p;
          ++omega[j];
        }
      }
      // omega[j] - omega[j-1] counts the factors of exponent >= j
      std::vector<unsigned> exps;
      for (unsigned j = 1; j <= e; ++j) {
        unsigned const at_least   = omega[j] - omega[j - 1];
        unsigned const above      = j < e ? omega[j + 1] - omega[j] : 0;
        exps.insert(exps.end(), at_least - above, j);
      }
      std::sort(exps.begin(), exps.end(), std::greater<>());
      per_prime.emplace_back(p, std::move(exps));
    }
    std::size_t width = 0;
    for (auto const& [p, exps] : per_prime) {
      width = std::max(width, exps.size());
    }
    std::vector<std::size_t> factors(width, 1);
    for (auto const& [p, exps] : per_prime) {
      for (std::size_t i = 0; i < exps.size(); ++i) {
        for (unsigned k = 0; k < exps[i]; ++k) {
          factors[i] *= p;
        }
      }
    }
    std::sort(factors.begin(), factors.end());
    return factors;
  }

  std::optional<bool> is_supersolvable(FiniteGroup const& G, LatticeOptions const& opts) {
    if (G.order() == 1 || nilpotency_class(G).has_value()) {
      return true;
    }
    if (derived_subgroup(G).order() == G.order()) {
      return false;
    }
    if (G.order() > opts.max_order) {
      return std::nullopt;
    }
    for (auto const& M : maximal_subgroups(G, opts)) {
      if (!is_prime(G.order() / M.order())) {
        return false;
      }
    }
    return true;
  }

  StructureDescriptor structure(FiniteGroup const& G, LatticeOptions const& opts) {
    StructureDescriptor d;
    d.order      = G.order();
    d.is_abelian = G.is_abelian();
    if (d.is_abelian) {
      d.invariant_factors = abelian_invariants(G);
    }
    d.nilpotency_class = nilpotency_class(G);
    d.is_supersolvable = is_supersolvable(G, opts);
    d.center_order     = G.center_set().count();
    if (is_power_of_two(G.order()) && G.order() > 1) {
      unsigned n = 0;
      while ((std::size_t(1) << n) < G.order()) {
        ++n;
      }
      d.two_group_family = TwoGroupFamily::other;
      if (n >= 3 && d.nilpotency_class == n - 1) {
        std::size_t const inv = involution_count(G);
        if (inv == (std::size_t(1) << (n - 1)) + 1) {
          d.two_group_family = TwoGroupFamily::dihedral;
        } else if (n >= 4 && inv == (std::size_t(1) << (n - 2)) + 1) {
          d.two_group_family = TwoGroupFamily::semidihedral;
        } else if (inv == 1) {
          d.two_group_family = TwoGroupFamily::quaternion;
        }
      }
    }
    return d;
  }

  bool is_dihedral(FiniteGroup const& G) {
    if (G.order() % 2 != 0) {
      return false;
    }
    std::size_t const n      = G.order() / 2;
    auto const&       orders = G.element_orders();
    std::vector<Elem> involutions;
    for (Elem x = 0; x < G.order(); ++x) {
      if (orders[x] == 2) {
        involutions.push_back(x);
      }
    }
    ElementSet tried(G.order());
    for (Elem y = 0; y < G.order(); ++y) {
      if (orders[y] != n || tried.test(y)) {
        continue;
      }
      auto const cyc = G.cyclic_of(y);
      tried |= cyc;
      for (Elem x : involutions) {
        if (!cyc.test(x) && G.conj(y, x) == G.inv(y)) {
          return true;
        }
      }
    }
    return false;
  }

  std::string describe(FiniteGroup const& G) {
    std::size_t const n = G.order();
    if (G.is_abelian()) {
      auto f = abelian_invariants(G);
      if (f.size() <= 1) {
        return "cyclic:" + std::to_string(n);
      }
      std::string s = "abelian:";
      for (std::size_t i = 0; i < f.size(); ++i) {
        s += (i ? "," : "") + std::to_string(f[i]);
      }
      return s;
    }
    if (is_dihedral(G)) {
      return "dihedral:" + std::to_string(n);
    }
    if (is_power_of_two(n)) {
      auto d = structure(G);
      if (d.two_group_family == TwoGroupFamily::semidihedral) {
        return "sd:" + std::to_string(n);
      }
      if (d.two_group_family == TwoGroupFamily::quaternion) {
        return "q:" + std::to_string(n);
      }
    }
    return "order:" + std::to_string(n);
  }

  bool acts_fixed_point_freely(ActionSpec const& spec) {
    auto const& H = *spec.acting();
    auto const& N = *spec.target();
    for (Elem h = 1; h < H.order(); ++h) {
      for (Elem n = 1; n < N.order(); ++n) {
        if (spec.apply(h, n) == n) {
          return false;
        }
      }
    }
    return true;
  }

  MembershipVerdict certify_non_membership(std::string_view      ambient_label,
                                           std::vector<Perm>     gens,
                                           ClosureOptions const& opts) {
    auto K          = close_generators(std::move(gens), opts);
    auto v          = in_class_X(*K);
    v.method        = Method::witness;
    v.ambient       = std::string(ambient_label);
    v.conclusive    = !v.member;
    if (v.member) {
      v.member = false;
    }
    return v;
  }

  bool is_simple(FiniteGroup const& G) {
    if (G.order() == 1) {
      return false;
    }
    for (Elem r : G.class_representatives()) {
      if (r == FiniteGroup::identity()) {
        continue;
      }
      Elem const one[] = {r};
      if (normal_closure(G, one).order() != G.order()) {
        return false;
      }
    }
    return true;
  }

  bool noncyclic_subgroups_contain_center(FiniteGroup const& G, LatticeOptions const& opts) {
    auto const& Z = G.center_set();
    for (auto const& S : all_subgroups(G, opts)) {
      if (!is_cyclic(S) && !Z.is_subset_of(S.members())) {
        return false;
      }
    }
    return true;
  }

}  // namespace centra
