#include "centra/field.hpp"

#include <algorithm>

#include "centra/error.hpp"
#include "centra/number_theory.hpp"

namespace centra {

  namespace {
    using Poly = std::vector<std::uint32_t>;

    void trim(Poly& a) {
      while (!a.empty() && a.back() == 0) {
        a.pop_back();
      }
    }

    std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
      // p is prime: a^(p-2)
      std::uint64_t r = 1, b = a % p;
      for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) {
          r = r * b % p;
        }
        b = b * b % p;
      }
      return static_cast<std::uint32_t>(r);
    }

    // Remainder of a modulo the monic-or-not, non-zero f.
    Poly poly_mod(Poly a, Poly const& f, std::uint32_t p) {
      trim(a);
      std::size_t const df   = f.size() - 1;
      std::uint32_t const lc = inv_mod(f.back(), p);
      while (a.size() > df && !a.empty()) {
        std::uint64_t const c     = std::uint64_t(a.back()) * lc % p;
        std::size_t const   shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
          a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * f[i] % p) % p);
        }
        trim(a);
      }
      return a;
    }

    Poly decode(std::uint32_t v, std::uint32_t p, std::uint32_t m) {
      Poly a(m, 0);
      for (std::uint32_t i = 0; i < m; ++i) {
        a[i] = v % p;
        v /= p;
      }
      return a;
    }

    std::uint32_t encode(Poly const& a, std::uint32_t p) {
      std::uint32_t v = 0;
      for (std::size_t i = a.size(); i-- > 0;) {
        v = v * p + a[i];
      }
      return v;
    }

    Poly bundled_modulus(std::uint32_t p, std::uint32_t m) {
      if (p == 2 && m == 2) {
        return {1, 1, 1};  // x^2 + x + 1
      }
      if (p == 2 && m == 3) {
        return {1, 1, 0, 1};  // x^3 + x + 1
      }
      if (p == 3 && m == 2) {
        return {1, 0, 1};  // x^2 + 1
      }
      return {};
    }
  }  // namespace

  bool is_irreducible(std::vector<std::uint32_t> const& poly, std::uint32_t p) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) {
      return false;
    }
    std::size_t const deg = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
      // every monic polynomial of degree d
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < d; ++i) {
        count *= p;
      }
      for (std::uint64_t k = 0; k < count; ++k) {
        Poly g = decode(static_cast<std::uint32_t>(k), p, static_cast<std::uint32_t>(d));
        g.push_back(1);
        if (poly_mod(f, g, p).empty()) {
          return false;
        }
      }
    }
    return true;
  }

  FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t m) : _p(p), _m(m), _q(1) {
    if (!is_prime(p)) {
      throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
    }
    if (m == 0) {
      throw UsageError("field extension degree must be at least 1");
    }
    for (std::uint32_t i = 0; i < m; ++i) {
      _q *= p;
      if (_q > 4096) {
        throw UsageError("field too large: only p^m <= 4096 is supported");
      }
    }

    _poly = bundled_modulus(p, m);
    if (_poly.empty()) {
      if (m == 1) {
        _poly = {0, 1};  // x
      } else {
        // least monic irreducible in the encoding order of the lower terms
        for (std::uint32_t low = 0; low < _q; ++low) {
          Poly cand = decode(low, p, m);
          cand.push_back(1);
          if (is_irreducible(cand, p)) {
            _poly = cand;
            break;
          }
        }
      }
    }
    if (!is_irreducible(_poly, p)) {
      throw UsageError("field modulus is reducible");
    }

    // Primitive element: least non-zero element of multiplicative order q - 1.
    auto const                 factors = factorize(_q - 1);
    std::vector<std::uint32_t> powers;
    value_type                 gen = 0;
    for (value_type c = 1; c < _q && gen == 0; ++c) {
      bool primitive = true;
      for (auto [r, e] : factors) {
        (void) e;
        // c^((q-1)/r) != 1 for every prime r | q - 1
        value_type    acc = 1;
        std::uint64_t k   = (_q - 1) / r;
        value_type    b   = c;
        for (; k > 0; k >>= 1) {
          if (k & 1) {
            acc = mul_poly(acc, b);
          }
          b = mul_poly(b, b);
        }
        if (acc == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen = c;
      }
    }
    if (_q == 2) {
      gen = 1;
    }

    _exp.assign(_q - 1, 0);
    _log.assign(_q, 0);
    value_type x = 1;
    for (std::uint32_t k = 0; k + 1 < _q; ++k) {
      _exp[k] = x;
      _log[x] = k;
      x       = mul_poly(x, gen);
    }
  }

  FieldSpec::value_type FieldSpec::mul_poly(value_type a, value_type b) const {
    Poly pa = decode(a, _p, _m);
    Poly pb = decode(b, _p, _m);
    Poly prod(2 * _m, 0);
    for (std::uint32_t i = 0; i < _m; ++i) {
      for (std::uint32_t j = 0; j < _m; ++j) {
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(pa[i]) * pb[j]) % _p);
      }
    }
    Poly r = (_m == 1) ? Poly{static_cast<std::uint32_t>(prod[0] % _p)}
                       : poly_mod(prod, _poly, _p);
    if (_m == 1) {
      trim(r);
    }
    return encode(r, _p);
  }

  FieldSpec::value_type FieldSpec::add(value_type a, value_type b) const noexcept {
    if (_m == 1) {
      return (a + b) % _p;
    }
    value_type result = 0, scale = 1;
    for (std::uint32_t i = 0; i < _m; ++i) {
      result += ((a % _p + b % _p) % _p) * scale;
      a /= _p;
      b /= _p;
      scale *= _p;
    }
    return result;
  }

  FieldSpec::value_type FieldSpec::neg(value_type a) const noexcept {
    value_type result = 0, scale = 1;
    for (std::uint32_t i = 0; i < _m; ++i) {
      result += ((_p - a % _p) % _p) * scale;
      a /= _p;
      scale *= _p;
    }
    return result;
  }

  FieldSpec::value_type FieldSpec::inv(value_type a) const {
    if (a == 0) {
      throw UsageError("division by zero in GF(" + std::to_string(_q) + ")");
    }
    return _exp[(_q - 1 - _log[a]) % (_q - 1)];
  }

  FieldSpec::value_type FieldSpec::pow(value_type a, std::int64_t k) const {
    if (a == 0) {
      return k == 0 ? 1 : 0;
    }
    std::int64_t const n = _q - 1;
    std::int64_t       e = (static_cast<std::int64_t>(_log[a]) * (k % n)) % n;
    if (e < 0) {
      e += n;
    }
    return _exp[static_cast<std::size_t>(e)];
  }

  FieldSpec::value_type FieldSpec::from_int(std::int64_t k) const noexcept {
    std::int64_t r = k % static_cast<std::int64_t>(_p);
    if (r < 0) {
      r += _p;
    }
    return static_cast<value_type>(r);
  }

}  // namespace centra
