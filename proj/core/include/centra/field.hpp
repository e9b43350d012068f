#ifndef CENTRA_FIELD_HPP_
#define CENTRA_FIELD_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace centra {

  //! GF(p^m) with elements encoded as integers 0 .. q-1: the base-p digits
  //! of an element are its polynomial coefficients, constant term first.
  //! Multiplication runs through exp/log tables for a primitive element.
  class FieldSpec {
   public:
    using value_type = std::uint32_t;

    //! Throws UsageError unless p is prime, m >= 1 and p^m <= 4096.
    FieldSpec(std::uint32_t p, std::uint32_t m);

    std::uint32_t characteristic() const noexcept {
      return _p;
    }
    std::uint32_t degree() const noexcept {
      return _m;
    }
    std::uint32_t size() const noexcept {
      return _q;
    }
    //! Monic modulus, constant term first; length m + 1.
    std::vector<std::uint32_t> const& irreducible() const noexcept {
      return _poly;
    }
    value_type primitive_element() const noexcept {
      return _exp[1 % (_q - 1)];
    }

    value_type add(value_type a, value_type b) const noexcept;
    value_type neg(value_type a) const noexcept;
    value_type sub(value_type a, value_type b) const noexcept {
      return add(a, neg(b));
    }
    value_type mul(value_type a, value_type b) const noexcept {
      if (a == 0 || b == 0) {
        return 0;
      }
      return _exp[(_log[a] + _log[b]) % (_q - 1)];
    }
    //! Throws UsageError for zero.
    value_type inv(value_type a) const;
    value_type pow(value_type a, std::int64_t k) const;
    //! Embeds an integer via its residue mod p.
    value_type from_int(std::int64_t k) const noexcept;

    //! Multiplication straight from the polynomial representation; used to
    //! build the tables and as an independent check on them.
    value_type mul_poly(value_type a, value_type b) const;

   private:
    std::uint32_t              _p;
    std::uint32_t              _m;
    std::uint32_t              _q;
    std::vector<std::uint32_t> _poly;
    std::vector<value_type>    _exp;
    std::vector<std::uint32_t> _log;
  };

  inline FieldSpec gf(std::uint32_t p, std::uint32_t m = 1) {
    return FieldSpec(p, m);
  }

  //! True iff the monic polynomial (constant term first) has no monic factor
  //! of degree 1 .. deg/2 over GF(p).
  bool is_irreducible(std::vector<std::uint32_t> const& poly, std::uint32_t p);

}  // namespace centra

#endif  // CENTRA_FIELD_HPP_
