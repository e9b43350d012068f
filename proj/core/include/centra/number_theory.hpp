#ifndef CENTRA_NUMBER_THEORY_HPP_
#define CENTRA_NUMBER_THEORY_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace centra {

  //! Trial division; fine for the desk-scale values used here.
  constexpr bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  //! (prime, exponent) pairs in increasing prime order.
  inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        unsigned e = 0;
        while (n % d == 0) {
          n /= d;
          ++e;
        }
        out.emplace_back(d, e);
      }
    }
    if (n > 1) {
      out.emplace_back(n, 1);
    }
    return out;
  }

  constexpr bool is_power_of_two(std::uint64_t n) noexcept {
    return n != 0 && (n & (n - 1)) == 0;
  }

  //! n = p^k for a prime p and k >= 1; returns p, or 0 otherwise.
  inline std::uint64_t prime_power_base(std::uint64_t n) {
    auto f = factorize(n);
    return f.size() == 1 ? f.front().first : 0;
  }

  //! A prime of the form 2^k + 1 with k a power of two (3, 5, 17, 257, ...).
  constexpr bool is_fermat_prime(std::uint64_t n) noexcept {
    if (n < 3 || !is_prime(n)) {
      return false;
    }
    std::uint64_t const k = n - 1;
    if (!is_power_of_two(k)) {
      return false;
    }
    unsigned e = 0;
    for (std::uint64_t t = k; t > 1; t >>= 1) {
      ++e;
    }
    return is_power_of_two(e);
  }

  //! A prime of the form 2^k - 1 (3, 7, 31, 127, ...).
  constexpr bool is_mersenne_prime(std::uint64_t n) noexcept {
    return n >= 3 && is_prime(n) && is_power_of_two(n + 1);
  }

  //! Least generator of the multiplicative group mod a prime p.
  inline std::uint64_t least_primitive_root(std::uint64_t p) {
    if (p == 2) {
      return 1;
    }
    auto const factors = factorize(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
      bool ok = true;
      for (auto [q, e] : factors) {
        std::uint64_t x = 1;
        std::uint64_t b = g;
        for (std::uint64_t k = (p - 1) / q; k > 0; k >>= 1) {
          if (k & 1) {
            x = x * b % p;
          }
          b = b * b % p;
        }
        if (x == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        return g;
      }
    }
    return 0;
  }

}  // namespace centra

#endif  // CENTRA_NUMBER_THEORY_HPP_
