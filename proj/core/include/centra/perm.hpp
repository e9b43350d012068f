#ifndef CENTRA_PERM_HPP_
#define CENTRA_PERM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace centra {

  using Point = std::uint32_t;

  //! A permutation of {0, ..., degree - 1}, stored as its image array.
  //!
  //! Products follow the "right acts first" convention throughout the
  //! library: (p * q)[i] == p[q[i]], i.e. q is applied before p. Cycle text
  //! is read with the same convention, so "(1,2)(2,3)" is (1,2) * (2,3).
  class Perm {
   public:
    Perm() = default;

    //! Throws UsageError unless \p images is a bijection on its index set.
    explicit Perm(std::vector<Point> images);

    static Perm identity(std::size_t degree);

    //! Parses 1-based cycle notation such as "(1,2)(3,4)(5,6,7)". Points may
    //! be separated by commas or blanks; "()" is the identity. The degree is
    //! the larger of \p degree and the largest point mentioned.
    static Perm from_cycles(std::string_view text, std::size_t degree = 0);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    Point operator[](std::size_t i) const noexcept {
      return _images[i];
    }

    std::span<Point const> images() const noexcept {
      return _images;
    }

    Perm inverse() const;
    bool is_identity() const noexcept;

    //! Least k >= 1 with p^k == identity (lcm of the cycle lengths).
    std::size_t order() const;

    //! 1-based cycle notation, fixed points omitted; "()" for the identity.
    std::string to_cycles() const;

    friend bool operator==(Perm const&, Perm const&) = default;
    friend auto operator<=>(Perm const&, Perm const&) = default;

   private:
    std::vector<Point> _images;
  };

  //! Returns p * q, mapping i to p[q[i]]. Throws UsageError on a degree
  //! mismatch.
  Perm compose(Perm const& p, Perm const& q);

  inline Perm operator*(Perm const& p, Perm const& q) {
    return compose(p, q);
  }

  //! Moves \p p onto a larger point set; new points are fixed.
  Perm extend_degree(Perm const& p, std::size_t degree);

  //! Shifts the support of \p p up by \p offset points inside a permutation
  //! of degree \p degree.
  Perm shift(Perm const& p, std::size_t offset, std::size_t degree);

}  // namespace centra

#endif  // CENTRA_PERM_HPP_
