#ifndef CENTRA_ELEMENT_SET_HPP_
#define CENTRA_ELEMENT_SET_HPP_

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace centra {

  //! Fixed-universe bit-set over the element indices of one FiniteGroup.
  //!
  //! Sets are totally ordered by comparing their ascending index lists
  //! lexicographically; this is the order used for canonical subgroup lists
  //! and tie-breaking.
  class ElementSet {
    using word_type = std::uint64_t;
    static constexpr std::size_t kBits = 64;

   public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    ElementSet() = default;
    explicit ElementSet(std::size_t universe)
        : _universe(universe), _words((universe + kBits - 1) / kBits, 0) {}

    std::size_t universe() const noexcept {
      return _universe;
    }

    bool test(std::size_t i) const noexcept {
      assert(i < _universe);
      return (_words[i / kBits] >> (i % kBits)) & 1U;
    }

    void set(std::size_t i) noexcept {
      assert(i < _universe);
      _words[i / kBits] |= word_type(1) << (i % kBits);
    }

    void reset(std::size_t i) noexcept {
      assert(i < _universe);
      _words[i / kBits] &= ~(word_type(1) << (i % kBits));
    }

    void fill() noexcept {
      for (auto& w : _words) {
        w = ~word_type(0);
      }
      trim();
    }

    std::size_t count() const noexcept {
      std::size_t n = 0;
      for (auto w : _words) {
        n += static_cast<std::size_t>(std::popcount(w));
      }
      return n;
    }

    bool empty() const noexcept {
      for (auto w : _words) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    bool is_subset_of(ElementSet const& other) const noexcept {
      assert(_universe == other._universe);
      for (std::size_t k = 0; k < _words.size(); ++k) {
        if ((_words[k] & ~other._words[k]) != 0) {
          return false;
        }
      }
      return true;
    }

    //! Least index in *this but not in \p other, or npos.
    std::size_t first_not_in(ElementSet const& other) const noexcept {
      for (std::size_t k = 0; k < _words.size(); ++k) {
        word_type w = _words[k] & ~other._words[k];
        if (w != 0) {
          return k * kBits + static_cast<std::size_t>(std::countr_zero(w));
        }
      }
      return npos;
    }

    std::size_t first() const noexcept {
      return next(npos);
    }

    //! Least member strictly greater than \p i (npos means "from the start").
    std::size_t next(std::size_t i) const noexcept {
      std::size_t start = (i == npos) ? 0 : i + 1;
      if (start >= _universe) {
        return npos;
      }
      std::size_t k = start / kBits;
      word_type w = _words[k] & (~word_type(0) << (start % kBits));
      while (true) {
        if (w != 0) {
          return k * kBits + static_cast<std::size_t>(std::countr_zero(w));
        }
        if (++k == _words.size()) {
          return npos;
        }
        w = _words[k];
      }
    }

    template <typename Func>
    void for_each(Func&& f) const {
      for (std::size_t k = 0; k < _words.size(); ++k) {
        word_type w = _words[k];
        while (w != 0) {
          f(static_cast<std::uint32_t>(k * kBits + std::countr_zero(w)));
          w &= w - 1;
        }
      }
    }

    std::vector<std::uint32_t> to_vector() const {
      std::vector<std::uint32_t> out;
      out.reserve(count());
      for_each([&out](std::uint32_t x) { out.push_back(x); });
      return out;
    }

    ElementSet& operator&=(ElementSet const& other) noexcept {
      assert(_universe == other._universe);
      for (std::size_t k = 0; k < _words.size(); ++k) {
        _words[k] &= other._words[k];
      }
      return *this;
    }

    ElementSet& operator|=(ElementSet const& other) noexcept {
      assert(_universe == other._universe);
      for (std::size_t k = 0; k < _words.size(); ++k) {
        _words[k] |= other._words[k];
      }
      return *this;
    }

    friend ElementSet operator&(ElementSet lhs, ElementSet const& rhs) {
      lhs &= rhs;
      return lhs;
    }

    friend ElementSet operator|(ElementSet lhs, ElementSet const& rhs) {
      lhs |= rhs;
      return lhs;
    }

    friend bool operator==(ElementSet const&, ElementSet const&) = default;

    //! Lexicographic comparison of the ascending member lists.
    friend bool operator<(ElementSet const& a, ElementSet const& b) noexcept {
      assert(a._universe == b._universe);
      for (std::size_t k = 0; k < a._words.size(); ++k) {
        word_type diff = a._words[k] ^ b._words[k];
        if (diff == 0) {
          continue;
        }
        std::size_t d = k * kBits + static_cast<std::size_t>(std::countr_zero(diff));
        // The set holding d has the smaller entry at this position, unless
        // the other list has already run out (it is then a proper prefix).
        ElementSet const& holder = a.test(d) ? a : b;
        ElementSet const& other  = a.test(d) ? b : a;
        bool other_continues     = other.next(d) != npos;
        bool holder_smaller      = other_continues;
        return (&holder == &a) ? holder_smaller : !holder_smaller;
      }
      return false;
    }

    std::size_t hash() const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (auto w : _words) {
        h ^= static_cast<std::size_t>(w);
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
      }
      return h;
    }

   private:
    void trim() noexcept {
      if (_universe % kBits != 0 && !_words.empty()) {
        _words.back() &= (word_type(1) << (_universe % kBits)) - 1;
      }
    }

    std::size_t            _universe = 0;
    std::vector<word_type> _words;
  };

  struct ElementSetHash {
    std::size_t operator()(ElementSet const& s) const noexcept {
      return s.hash();
    }
  };

}  // namespace centra

#endif  // CENTRA_ELEMENT_SET_HPP_
