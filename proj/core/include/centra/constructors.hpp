#ifndef CENTRA_CONSTRUCTORS_HPP_
#define CENTRA_CONSTRUCTORS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "centra/field.hpp"
#include "centra/group.hpp"

namespace centra {

  // Natural permutation realisations of the standard families. Every
  // constructor throws UsageError on invalid parameters and CapExceeded if
  // the group does not fit the closure options.

  //! Generated by an n-cycle; cyclic(1) is the trivial group on one point.
  GroupPtr cyclic(std::size_t n, ClosureOptions const& opts = {});

  //! Disjoint cycles of the given lengths (each >= 2).
  GroupPtr abelian(std::vector<std::size_t> const& factors, ClosureOptions const& opts = {});

  GroupPtr symmetric(std::size_t n, ClosureOptions const& opts = {});
  GroupPtr alternating(std::size_t n, ClosureOptions const& opts = {});

  //! A acting on the first points, B on the following ones.
  GroupPtr direct_product(FiniteGroup const& A, FiniteGroup const& B);

  //! Symmetries of a regular n-gon, order two_n = 2n. The degenerate cases
  //! n = 1 and n = 2 are C2 and C2 x C2 on 2 and 4 points.
  GroupPtr dihedral(std::size_t two_n, ClosureOptions const& opts = {});

  //! SD of the given order 2^n (n >= 4), as the affine maps i -> i + 1 and
  //! i -> (2^(n-2) - 1) i on Z / 2^(n-1).
  GroupPtr semidihedral(std::size_t order, ClosureOptions const& opts = {});

  //! Q of the given order 2^n (n >= 3), through the regular representation
  //! of the normal form a^i b^j with b^2 = a^(2^(n-2)) and a^b = a^-1.
  //! Generators are [a, b] in that order.
  GroupPtr generalized_quaternion(std::size_t order, ClosureOptions const& opts = {});

  enum class Exponent { p, p_squared };

  //! Non-abelian group of order p^3 for odd p. Exponent p: unitriangular
  //! 3x3 matrices over GF(p) acting affinely on GF(p)^2, generators [A, B]
  //! with A:(x,y)->(x+y,y) and B:(x,y)->(x,y+1). Exponent p^2: the affine
  //! maps a: i -> i + 1 and b: i -> (1 + p) i on Z / p^2, generators [a, b].
  GroupPtr extraspecial_p3(std::uint32_t p, Exponent exp, ClosureOptions const& opts = {});

  //! 2x2 matrix over a field, row-major.
  using Matrix2 = std::array<FieldSpec::value_type, 4>;

  //! Möbius action of a unimodular matrix on the projective line; field
  //! elements are points 0 .. q-1 and infinity is point q.
  Perm projective_line_perm(FieldSpec const& F, Matrix2 const& m);

  //! PSL(2, q) acting on the q + 1 points of the projective line, generated
  //! by [[1,1],[0,1]] and [[0,-1],[1,0]], plus diag(w, w^-1) for a
  //! primitive w when q is not prime.
  GroupPtr psl2(FieldSpec const& F, ClosureOptions const& opts = {});

  //! 3x3 matrix over GF(p), row-major.
  using Matrix3 = std::array<std::uint32_t, 9>;

  //! Number of points of the projective plane over GF(p).
  std::size_t projective_plane_size(std::uint32_t p);

  //! Action of an invertible matrix on the projective plane over GF(p)
  //! (column vectors, v -> M v).
  Perm projective_plane_perm(std::uint32_t p, Matrix3 const& m);

  //! PSL(3, p) on the p^2 + p + 1 points of the projective plane, generated
  //! by the elementary transvections.
  GroupPtr psl3(std::uint32_t p, ClosureOptions const& opts = {});

  //! A group given by its Cayley table; element 0 must be the identity.
  struct TableGroup {
    std::size_t                order = 0;
    std::vector<std::uint32_t> table;  // row-major: table[a * order + b] = a b

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
      return table[std::size_t(a) * order + b];
    }
  };

  //! Faithful action of a table group on its own elements, g : y -> g y.
  //! \p gens selects the generating elements; by default a short generating
  //! set is chosen. Throws UsageError if the table is not a group.
  GroupPtr regular_representation(TableGroup const&           T,
                                   std::vector<std::uint32_t> gens = {},
                                   ClosureOptions const&       opts = {});

  //! Cayley table of an enumerated group, in its canonical element order.
  TableGroup cayley_table(FiniteGroup const& G);

}  // namespace centra

#endif  // CENTRA_CONSTRUCTORS_HPP_
