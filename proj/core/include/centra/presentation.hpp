#ifndef CENTRA_PRESENTATION_HPP_
#define CENTRA_PRESENTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace centra {

  //! Generator i is the letter i+1, its inverse -(i+1).
  using Letter = std::int32_t;
  using Word   = std::vector<Letter>;

  //! A: [x,y] = x y x^-1 y^-1.  B: [x,y] = x^-1 y^-1 x y.
  enum class Convention { A, B };

  std::string_view to_string(Convention c) noexcept;

  Word inverse(Word const& w);
  //! Cancels adjacent inverse pairs until none remain.
  Word free_reduce(Word w);

  //! Parsed word syntax, kept unexpanded so the commutator convention can be
  //! chosen late.
  struct WordExpr {
    enum class Kind { identity, generator, product, power, commutator };
    Kind                  kind      = Kind::identity;
    std::size_t           generator = 0;
    std::int64_t          exponent  = 1;
    std::vector<WordExpr> children;

    static WordExpr gen(std::size_t g, std::int64_t e = 1);
    static WordExpr product(std::vector<WordExpr> factors);
    static WordExpr power(WordExpr base, std::int64_t e);
    static WordExpr commutator(WordExpr x, WordExpr y);
  };

  Word expand(WordExpr const& e, Convention c);

  //! w1 = w2 = ... = wk; each wi (i < k) contributes the relator wi wk^-1.
  struct Relation {
    std::vector<WordExpr> sides;
    std::size_t           line = 0;
  };

  class Presentation {
   public:
    Presentation() = default;
    Presentation(std::vector<std::string> generators, std::vector<Relation> relations);
    //! Each word becomes a relation "w = 1".
    static Presentation from_relators(std::vector<std::string> generators,
                                      std::vector<Word> const& relators);

    std::vector<std::string> const& generators() const noexcept {
      return _generators;
    }
    std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }
    //! Freely reduced, empty relators dropped.
    std::vector<Word> relators(Convention c) const;
    bool              has_commutators() const;

   private:
    std::vector<std::string> _generators;
    std::vector<Relation>    _relations;
  };

  //! Grammar:
  //!   gens: a b c        (names separated by spaces or commas)
  //!   a^2 = b^3 = 1, [b,a] = b^2
  //! Relations are separated by newlines or top-level commas. Words are
  //! juxtapositions of generators, "1", parenthesized words and [u,v]
  //! commutators, each optionally raised to ^k or ^-k. '#' starts a comment.
  //! Generator names are matched longest first, so "bc^2" reads as b c^2.
  //! Throws ParseError with the 1-based line and column.
  Presentation parse_presentation(std::string_view text);

  std::string format_word(Word const& w, std::vector<std::string> const& names);

}  // namespace centra

#endif  // CENTRA_PRESENTATION_HPP_
