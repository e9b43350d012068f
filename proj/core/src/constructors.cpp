#include "centra/constructors.hpp"

#include <algorithm>
#include <numeric>

#include "centra/error.hpp"
#include "centra/group_ops.hpp"
#include "centra/number_theory.hpp"

namespace centra {

  namespace {
    Perm cycle_on(std::size_t degree, std::size_t offset, std::size_t length) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point(0));
      for (std::size_t i = 0; i < length; ++i) {
        images[offset + i] = static_cast<Point>(offset + (i + 1) % length);
      }
      return Perm(std::move(images));
    }

    // i -> a i + b on Z/n
    Perm affine(std::size_t n, std::size_t a, std::size_t b) {
      std::vector<Point> images(n);
      for (std::size_t i = 0; i < n; ++i) {
        images[i] = static_cast<Point>((a * i + b) % n);
      }
      return Perm(std::move(images));
    }
  }  // namespace

  GroupPtr cyclic(std::size_t n, ClosureOptions const& opts) {
    if (n == 0) {
      throw UsageError("cyclic: order must be at least 1");
    }
    return FiniteGroup::close({cycle_on(n, 0, n)}, opts);
  }

  GroupPtr abelian(std::vector<std::size_t> const& factors, ClosureOptions const& opts) {
    if (factors.empty()) {
      throw UsageError("abelian: empty list of invariant factors");
    }
    std::size_t degree = 0;
    for (auto f : factors) {
      if (f < 2) {
        throw UsageError("abelian: every factor must be at least 2");
      }
      degree += f;
    }
    std::vector<Perm> gens;
    std::size_t       offset = 0;
    for (auto f : factors) {
      gens.push_back(cycle_on(degree, offset, f));
      offset += f;
    }
    return FiniteGroup::close(std::move(gens), opts);
  }

  GroupPtr symmetric(std::size_t n, ClosureOptions const& opts) {
    if (n == 0) {
      throw UsageError("symmetric: degree must be at least 1");
    }
    if (n == 1) {
      return FiniteGroup::close({Perm::identity(1)}, opts);
    }
    std::vector<Perm> gens{cycle_on(n, 0, 2)};
    if (n > 2) {
      gens.push_back(cycle_on(n, 0, n));
    }
    return FiniteGroup::close(std::move(gens), opts);
  }

  GroupPtr alternating(std::size_t n, ClosureOptions const& opts) {
    if (n == 0) {
      throw UsageError("alternating: degree must be at least 1");
    }
    if (n < 3) {
      return FiniteGroup::close({Perm::identity(n)}, opts);
    }
    std::vector<Perm> gens;
    for (std::size_t k = 2; k < n; ++k) {
      // (0, 1, k)
      std::vector<Point> images(n);
      std::iota(images.begin(), images.end(), Point(0));
      images[0] = 1;
      images[1] = static_cast<Point>(k);
      images[k] = 0;
      gens.emplace_back(std::move(images));
    }
    return FiniteGroup::close(std::move(gens), opts);
  }

  GroupPtr direct_product(FiniteGroup const& A, FiniteGroup const& B) {
    std::size_t const degree = A.degree() + B.degree();
    std::vector<Perm> gens;
    for (auto const& g : A.generators()) {
      gens.push_back(extend_degree(g, degree));
    }
    for (auto const& g : B.generators()) {
      gens.push_back(shift(g, A.degree(), degree));
    }
    ClosureOptions opts = A.options();
    opts.max_order      = std::max(A.options().max_order, B.options().max_order);
    return FiniteGroup::close(std::move(gens), opts);
  }

  GroupPtr dihedral(std::size_t two_n, ClosureOptions const& opts) {
    if (two_n < 2 || two_n % 2 != 0) {
      throw UsageError("dihedral: order must be even and at least 2");
    }
    std::size_t const n = two_n / 2;
    if (n == 1) {
      return FiniteGroup::close({cycle_on(2, 0, 2)}, opts);
    }
    if (n == 2) {
      return FiniteGroup::close({cycle_on(4, 0, 2), cycle_on(4, 2, 2)}, opts);
    }
    // reflection x first, rotation y second
    return FiniteGroup::close({affine(n, n - 1, 0), affine(n, 1, 1)}, opts);
  }

  GroupPtr semidihedral(std::size_t order, ClosureOptions const& opts) {
    if (!is_power_of_two(order) || order < 16) {
      throw UsageError("semidihedral: order must be 2^n with n >= 4");
    }
    std::size_t const m = order / 2;
    return FiniteGroup::close({affine(m, m / 2 - 1, 0), affine(m, 1, 1)}, opts);
  }

  GroupPtr generalized_quaternion(std::size_t order, ClosureOptions const& opts) {
    if (!is_power_of_two(order) || order < 8) {
      throw UsageError("generalized_quaternion: order must be 2^n with n >= 3");
    }
    std::size_t const m = order / 2;  // order of a
    TableGroup        T;
    T.order = order;
    T.table.resize(order * order);
    // element a^i b^j has index i + m j
    for (std::size_t x = 0; x < order; ++x) {
      std::size_t const i = x % m, j = x / m;
      for (std::size_t y = 0; y < order; ++y) {
        std::size_t const k = y % m, l = y / m;
        std::size_t       ri, rj;
        if (j == 0) {
          ri = (i + k) % m;
          rj = l;
        } else if (l == 0) {
          ri = (i + m - k) % m;  // b a^k = a^-k b
          rj = 1;
        } else {
          ri = (i + m - k + m / 2) % m;  // b^2 = a^(m/2)
          rj = 0;
        }
        T.table[x * order + y] = static_cast<std::uint32_t>(ri + m * rj);
      }
    }
    return regular_representation(T, {1, static_cast<std::uint32_t>(m)}, opts);
  }

  GroupPtr extraspecial_p3(std::uint32_t p, Exponent exp, ClosureOptions const& opts) {
    if (p == 2) {
      throw UsageError("extraspecial_p3: p = 2 gives the dihedral and quaternion groups of "
                       "order 8; use dihedral:8 or q:8");
    }
    if (!is_prime(p)) {
      throw UsageError("extraspecial_p3: " + std::to_string(p) + " is not prime");
    }
    if (exp == Exponent::p) {
      std::size_t const  n = std::size_t(p) * p;
      std::vector<Point> a(n), b(n);
      for (std::size_t y = 0; y < p; ++y) {
        for (std::size_t x = 0; x < p; ++x) {
          a[x + p * y] = static_cast<Point>((x + y) % p + p * y);
          b[x + p * y] = static_cast<Point>(x + p * ((y + 1) % p));
        }
      }
      return FiniteGroup::close({Perm(std::move(a)), Perm(std::move(b))}, opts);
    }
    std::size_t const n = std::size_t(p) * p;
    return FiniteGroup::close({affine(n, 1, 1), affine(n, 1 + p, 0)}, opts);
  }

  Perm projective_line_perm(FieldSpec const& F, Matrix2 const& m) {
    std::uint32_t const q   = F.size();
    std::uint32_t const inf = q;
    auto const [a, b, c, d] = m;
    if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) {
      throw UsageError("projective_line_perm: singular matrix");
    }
    std::vector<Point> images(q + 1);
    for (std::uint32_t s = 0; s < q; ++s) {
      auto num = F.add(F.mul(a, s), b);
      auto den = F.add(F.mul(c, s), d);
      images[s] = (den == 0) ? inf : F.mul(num, F.inv(den));
    }
    images[inf] = (c == 0) ? inf : F.mul(a, F.inv(c));
    return Perm(std::move(images));
  }

  GroupPtr psl2(FieldSpec const& F, ClosureOptions const& opts) {
    auto const        one = F.from_int(1);
    std::vector<Perm> gens{projective_line_perm(F, {one, one, 0, one}),
                           projective_line_perm(F, {0, F.neg(one), one, 0})};
    if (F.degree() > 1) {
      // The first two matrices only reach PSL(2, p) over the prime field.
      auto w = F.primitive_element();
      gens.push_back(projective_line_perm(F, {w, 0, 0, F.inv(w)}));
    }
    return FiniteGroup::close(std::move(gens), opts);
  }

  std::size_t projective_plane_size(std::uint32_t p) {
    return std::size_t(p) * p + p + 1;
  }

  namespace {
    // Normalised so that the first non-zero coordinate is 1.
    std::size_t plane_index(std::uint32_t p, std::array<std::uint32_t, 3> v) {
      std::uint32_t lead = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : v[2]);
      std::uint32_t inv  = 1;
      for (std::uint32_t k = 1; k < p; ++k) {
        if (std::uint64_t(lead) * k % p == 1) {
          inv = k;
          break;
        }
      }
      for (auto& x : v) {
        x = static_cast<std::uint32_t>(std::uint64_t(x) * inv % p);
      }
      if (v[0] == 1) {
        return v[1] + std::size_t(p) * v[2];
      }
      if (v[1] == 1) {
        return std::size_t(p) * p + v[2];
      }
      return std::size_t(p) * p + p;
    }

    std::array<std::uint32_t, 3> plane_point(std::uint32_t p, std::size_t idx) {
      std::size_t const pp = std::size_t(p) * p;
      if (idx < pp) {
        return {1, static_cast<std::uint32_t>(idx % p), static_cast<std::uint32_t>(idx / p)};
      }
      if (idx < pp + p) {
        return {0, 1, static_cast<std::uint32_t>(idx - pp)};
      }
      return {0, 0, 1};
    }
  }  // namespace

  Perm projective_plane_perm(std::uint32_t p, Matrix3 const& m) {
    if (!is_prime(p)) {
      throw UsageError("projective_plane_perm: " + std::to_string(p) + " is not prime");
    }
    std::size_t const  n = projective_plane_size(p);
    std::vector<Point> images(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
      auto                         v = plane_point(p, idx);
      std::array<std::uint32_t, 3> w{};
      for (std::size_t r = 0; r < 3; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < 3; ++c) {
          acc += std::uint64_t(m[3 * r + c] % p) * v[c];
        }
        w[r] = static_cast<std::uint32_t>(acc % p);
      }
      if (w[0] == 0 && w[1] == 0 && w[2] == 0) {
        throw UsageError("projective_plane_perm: singular matrix");
      }
      images[idx] = static_cast<Point>(plane_index(p, w));
    }
    return Perm(std::move(images));
  }

  GroupPtr psl3(std::uint32_t p, ClosureOptions const& opts) {
    std::vector<Perm> gens;
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        if (r == c) {
          continue;
        }
        Matrix3 m{1, 0, 0, 0, 1, 0, 0, 0, 1};
        m[3 * r + c] = 1;
        gens.push_back(projective_plane_perm(p, m));
      }
    }
    return FiniteGroup::close(std::move(gens), opts);
  }

  GroupPtr regular_representation(TableGroup const&          T,
                                   std::vector<std::uint32_t> gens,
                                   ClosureOptions const&      opts) {
    std::size_t const n = T.order;
    if (n == 0 || T.table.size() != n * n) {
      throw UsageError("regular_representation: table has the wrong size");
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (T.mul(0, x) != x || T.mul(x, 0) != x) {
        throw UsageError("regular_representation: element 0 is not the identity");
      }
    }
    std::vector<bool> seen(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), false);
      for (std::size_t b = 0; b < n; ++b) {
        auto c = T.mul(a, b);
        if (c >= n || seen[c]) {
          throw UsageError("regular_representation: table rows are not permutations");
        }
        seen[c] = true;
      }
    }
    if (n <= 128) {
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
          for (std::uint32_t c = 0; c < n; ++c) {
            if (T.mul(T.mul(a, b), c) != T.mul(a, T.mul(b, c))) {
              throw UsageError("regular_representation: table is not associative");
            }
          }
        }
      }
    }

    if (gens.empty()) {
      // greedy: add the least element outside the current closure
      std::vector<bool> in(n, false);
      in[0] = true;
      for (std::uint32_t x = 1; x < n; ++x) {
        if (in[x]) {
          continue;
        }
        gens.push_back(x);
        std::fill(in.begin(), in.end(), false);
        std::vector<std::uint32_t> members{0};
        in[0] = true;
        for (std::size_t i = 0; i < members.size(); ++i) {
          for (auto g : gens) {
            auto y = T.mul(members[i], g);
            if (!in[y]) {
              in[y] = true;
              members.push_back(y);
            }
          }
        }
      }
    }
    if (gens.empty()) {
      gens.push_back(0);
    }

    std::vector<Perm> perms;
    for (auto g : gens) {
      if (g >= n) {
        throw UsageError("regular_representation: generator index out of range");
      }
      std::vector<Point> images(n);
      for (std::uint32_t y = 0; y < n; ++y) {
        images[y] = T.mul(g, y);
      }
      perms.emplace_back(std::move(images));
    }
    auto G = FiniteGroup::close(std::move(perms), opts);
    if (G->order() != n) {
      throw UsageError("regular_representation: generators do not generate the table "
                       "group (or the table is not a group)");
    }
    return G;
  }

  TableGroup cayley_table(FiniteGroup const& G) {
    TableGroup T;
    T.order = G.order();
    T.table.resize(T.order * T.order);
    for (Elem a = 0; a < T.order; ++a) {
      for (Elem b = 0; b < T.order; ++b) {
        T.table[std::size_t(a) * T.order + b] = G.mul(a, b);
      }
    }
    return T;
  }

}  // namespace centra
