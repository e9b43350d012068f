#ifndef CENTRA_TODD_COXETER_HPP_
#define CENTRA_TODD_COXETER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "centra/group.hpp"
#include "centra/presentation.hpp"

namespace centra {

  //! Column 2g is generator g, column 2g+1 its inverse.
  class CosetTable {
   public:
    static constexpr std::uint32_t undefined = 0xffffffffU;

    CosetTable() = default;
    CosetTable(std::size_t generators, std::vector<std::uint32_t> entries);

    std::size_t generators() const noexcept {
      return _gens;
    }
    std::size_t columns() const noexcept {
      return 2 * _gens;
    }
    std::size_t cosets() const noexcept {
      return _gens == 0 ? 1 : _entries.size() / columns();
    }
    std::uint32_t operator()(std::size_t coset, std::size_t column) const noexcept {
      return _entries[coset * columns() + column];
    }
    //! Coset reached from c by reading w left to right.
    std::uint32_t trace(std::uint32_t c, Word const& w) const noexcept;
    //! Every entry defined and every relator returns each coset to itself.
    bool is_closed(std::vector<Word> const& relators) const;

    //! The action of each generator on cosets, as c -> c.g^-1 so that the
    //! map from generators to permutations is a homomorphism under
    //! right-acts-first composition.
    std::vector<Perm> generator_perms() const;

   private:
    std::size_t                _gens = 0;
    std::vector<std::uint32_t> _entries;
  };

  struct ToddCoxeterOptions {
    //! Total cosets ever defined, dead ones included.
    std::size_t max_cosets = 1'000'000;
  };

  struct Enumeration {
    //! false means the coset limit was hit: inconclusive, not infinite.
    bool        complete = false;
    std::size_t defined  = 0;
    //! Live cosets renumbered in order of first definition; coset 0 is the
    //! subgroup itself. Empty when incomplete.
    CosetTable table;
  };

  //! HLT enumeration over the trivial subgroup with a coincidence queue and
  //! union-find merging.
  Enumeration todd_coxeter(Presentation const&       P,
                           Convention                c,
                           ToddCoxeterOptions const& opts = {});

  enum class ConventionChoice { A, B, automatic };

  struct Realization {
    GroupPtr   group;
    Convention convention = Convention::A;
    //! Order under each convention that was run; nullopt when not run or
    //! inconclusive.
    std::optional<std::size_t> order_a;
    std::optional<std::size_t> order_b;
  };

  //! With ConventionChoice::automatic both conventions run; the one whose
  //! order equals the hint wins, otherwise the larger order (A on ties).
  //! Throws CapExceeded if every convention tried is inconclusive.
  Realization realize(Presentation const&        P,
                      ConventionChoice           choice,
                      std::optional<std::size_t> order_hint = std::nullopt,
                      ToddCoxeterOptions const&  opts       = {});

}  // namespace centra

#endif  // CENTRA_TODD_COXETER_HPP_
