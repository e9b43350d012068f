#include "centra/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "centra/error.hpp"

namespace centra {

  std::string_view to_string(Convention c) noexcept {
    return c == Convention::A ? "A" : "B";
  }

  Word inverse(Word const& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& x : out) {
      x = -x;
    }
    return out;
  }

  Word free_reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (Letter x : w) {
      if (!out.empty() && out.back() == -x) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  WordExpr WordExpr::gen(std::size_t g, std::int64_t e) {
    WordExpr w;
    w.kind      = Kind::generator;
    w.generator = g;
    w.exponent  = e;
    return w;
  }

  WordExpr WordExpr::product(std::vector<WordExpr> factors) {
    WordExpr w;
    w.kind     = Kind::product;
    w.children = std::move(factors);
    return w;
  }

  WordExpr WordExpr::power(WordExpr base, std::int64_t e) {
    WordExpr w;
    w.kind     = Kind::power;
    w.exponent = e;
    w.children.push_back(std::move(base));
    return w;
  }

  WordExpr WordExpr::commutator(WordExpr x, WordExpr y) {
    WordExpr w;
    w.kind = Kind::commutator;
    w.children.push_back(std::move(x));
    w.children.push_back(std::move(y));
    return w;
  }

  namespace {
    Word power_of(Word const& base, std::int64_t e) {
      Word const unit = e < 0 ? inverse(base) : base;
      Word       out;
      for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) {
        out.insert(out.end(), unit.begin(), unit.end());
      }
      return out;
    }

    void append(Word& dst, Word const& src) {
      dst.insert(dst.end(), src.begin(), src.end());
    }
  }  // namespace

  Word expand(WordExpr const& e, Convention c) {
    using Kind = WordExpr::Kind;
    Word out;
    switch (e.kind) {
      case Kind::identity:
        break;
      case Kind::generator:
        out = power_of({static_cast<Letter>(e.generator + 1)}, e.exponent);
        break;
      case Kind::product:
        for (auto const& f : e.children) {
          append(out, expand(f, c));
        }
        break;
      case Kind::power:
        out = power_of(expand(e.children.at(0), c), e.exponent);
        break;
      case Kind::commutator: {
        Word const x = expand(e.children.at(0), c);
        Word const y = expand(e.children.at(1), c);
        if (c == Convention::A) {
          append(out, x);
          append(out, y);
          append(out, inverse(x));
          append(out, inverse(y));
        } else {
          append(out, inverse(x));
          append(out, inverse(y));
          append(out, x);
          append(out, y);
        }
        break;
      }
    }
    return free_reduce(std::move(out));
  }

  Presentation::Presentation(std::vector<std::string> generators, std::vector<Relation> relations)
      : _generators(std::move(generators)), _relations(std::move(relations)) {}

  Presentation Presentation::from_relators(std::vector<std::string> generators,
                                           std::vector<Word> const& relators) {
    std::vector<Relation> rels;
    for (auto const& w : relators) {
      std::vector<WordExpr> factors;
      for (Letter x : w) {
        if (x == 0 || static_cast<std::size_t>(x < 0 ? -x : x) > generators.size()) {
          throw UsageError("relator letter out of range");
        }
        factors.push_back(WordExpr::gen(static_cast<std::size_t>((x < 0 ? -x : x) - 1), x < 0 ? -1 : 1));
      }
      rels.push_back({{WordExpr::product(std::move(factors)), WordExpr{}}, 0});
    }
    return Presentation(std::move(generators), std::move(rels));
  }

  std::vector<Word> Presentation::relators(Convention c) const {
    std::vector<Word> out;
    for (auto const& r : _relations) {
      if (r.sides.size() < 2) {
        if (r.sides.size() == 1) {
          auto w = expand(r.sides[0], c);
          if (!w.empty()) {
            out.push_back(std::move(w));
          }
        }
        continue;
      }
      Word const last_inv = inverse(expand(r.sides.back(), c));
      for (std::size_t i = 0; i + 1 < r.sides.size(); ++i) {
        Word w = expand(r.sides[i], c);
        append(w, last_inv);
        w = free_reduce(std::move(w));
        if (!w.empty()) {
          out.push_back(std::move(w));
        }
      }
    }
    return out;
  }

  namespace {
    bool has_commutator(WordExpr const& e) {
      if (e.kind == WordExpr::Kind::commutator) {
        return true;
      }
      return std::any_of(e.children.begin(), e.children.end(), has_commutator);
    }
  }  // namespace

  bool Presentation::has_commutators() const {
    for (auto const& r : _relations) {
      if (std::any_of(r.sides.begin(), r.sides.end(), has_commutator)) {
        return true;
      }
    }
    return false;
  }

  namespace {
    class Parser {
     public:
      explicit Parser(std::string_view text) : _text(text) {}

      Presentation run() {
        skip_blank_lines();
        parse_header();
        std::vector<Relation> relations;
        while (true) {
          skip_separators();
          if (at_end()) {
            break;
          }
          relations.push_back(parse_relation());
          skip_spaces();
          if (!at_end() && peek() != '\n' && peek() != ',') {
            fail(std::string("unexpected '") + peek() + "'");
          }
        }
        return Presentation(_names, std::move(relations));
      }

     private:
      bool at_end() const {
        return _pos >= _text.size();
      }
      char peek() const {
        return at_end() ? '\0' : _text[_pos];
      }
      void advance() {
        if (_text[_pos] == '\n') {
          ++_line;
          _col = 1;
        } else {
          ++_col;
        }
        ++_pos;
      }
      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, _line, _col);
      }

      void skip_comment() {
        if (peek() == '#') {
          while (!at_end() && peek() != '\n') {
            advance();
          }
        }
      }
      void skip_spaces() {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) {
          advance();
        }
        skip_comment();
      }
      void skip_blank_lines() {
        while (true) {
          skip_spaces();
          if (peek() != '\n') {
            return;
          }
          advance();
        }
      }
      void skip_separators() {
        while (true) {
          skip_spaces();
          if (peek() != '\n' && peek() != ',') {
            return;
          }
          advance();
        }
      }

      static bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
      }
      static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      }

      void parse_header() {
        std::string_view const rest = _text.substr(_pos);
        std::string_view       key;
        for (std::string_view k : {"generators:", "gens:"}) {
          if (rest.starts_with(k)) {
            key = k;
            break;
          }
        }
        if (key.empty()) {
          fail("expected 'gens:' header");
        }
        for (std::size_t i = 0; i < key.size(); ++i) {
          advance();
        }
        while (true) {
          skip_spaces();
          if (peek() == ',') {
            advance();
            continue;
          }
          if (at_end() || peek() == '\n') {
            break;
          }
          if (!ident_start(peek())) {
            fail("bad generator name");
          }
          std::string name;
          while (!at_end() && ident_char(peek())) {
            name += peek();
            advance();
          }
          if (std::find(_names.begin(), _names.end(), name) != _names.end()) {
            fail("duplicate generator '" + name + "'");
          }
          _names.push_back(std::move(name));
        }
        _by_length.resize(_names.size());
        for (std::size_t i = 0; i < _names.size(); ++i) {
          _by_length[i] = i;
        }
        std::stable_sort(_by_length.begin(), _by_length.end(), [this](std::size_t a, std::size_t b) {
          return _names[a].size() > _names[b].size();
        });
      }

      Relation parse_relation() {
        Relation r;
        r.line = _line;
        r.sides.push_back(parse_word());
        while (true) {
          skip_spaces();
          if (peek() != '=') {
            break;
          }
          advance();
          r.sides.push_back(parse_word());
        }
        return r;
      }

      bool word_ends(char c) const {
        return at_end() || c == '=' || c == ',' || c == ']' || c == ')' || c == '\n';
      }

      WordExpr parse_word() {
        std::vector<WordExpr> factors;
        while (true) {
          skip_spaces();
          if (word_ends(peek())) {
            break;
          }
          factors.push_back(parse_factor());
        }
        if (factors.empty()) {
          fail("empty word");
        }
        return factors.size() == 1 ? std::move(factors.front())
                                   : WordExpr::product(std::move(factors));
      }

      WordExpr parse_factor() {
        WordExpr atom = parse_atom();
        skip_spaces();
        if (peek() != '^') {
          return atom;
        }
        advance();
        skip_spaces();
        std::int64_t const e = parse_exponent();
        if (atom.kind == WordExpr::Kind::generator && atom.exponent == 1) {
          atom.exponent = e;
          return atom;
        }
        return WordExpr::power(std::move(atom), e);
      }

      std::int64_t parse_exponent() {
        bool const paren = peek() == '(';
        if (paren) {
          advance();
          skip_spaces();
        }
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
          negative = peek() == '-';
          advance();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected integer exponent");
        }
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          v = v * 10 + (peek() - '0');
          if (v > 1'000'000) {
            fail("exponent too large");
          }
          advance();
        }
        if (paren) {
          skip_spaces();
          if (peek() != ')') {
            fail("expected ')'");
          }
          advance();
        }
        return negative ? -v : v;
      }

      void expect(char c) {
        skip_spaces();
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        advance();
      }

      WordExpr parse_atom() {
        char const c = peek();
        if (c == '(') {
          advance();
          WordExpr inner = parse_word();
          expect(')');
          return inner;
        }
        if (c == '[') {
          advance();
          WordExpr x = parse_word();
          expect(',');
          WordExpr y = parse_word();
          expect(']');
          return WordExpr::commutator(std::move(x), std::move(y));
        }
        if (c == '1' && !(_pos + 1 < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos + 1])))) {
          advance();
          return WordExpr{};
        }
        if (ident_start(c)) {
          std::string_view const rest = _text.substr(_pos);
          for (std::size_t g : _by_length) {
            if (rest.starts_with(_names[g])) {
              for (std::size_t i = 0; i < _names[g].size(); ++i) {
                advance();
              }
              return WordExpr::gen(g);
            }
          }
          std::string name;
          for (std::size_t i = 0; i < rest.size() && ident_char(rest[i]); ++i) {
            name += rest[i];
          }
          fail("unknown generator '" + name + "'");
        }
        fail(std::string("unexpected '") + c + "'");
      }

      std::string_view         _text;
      std::size_t              _pos  = 0;
      std::size_t              _line = 1;
      std::size_t              _col  = 1;
      std::vector<std::string> _names;
      std::vector<std::size_t> _by_length;
    };
  }  // namespace

  Presentation parse_presentation(std::string_view text) {
    return Parser(text).run();
  }

  std::string format_word(Word const& w, std::vector<std::string> const& names) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      std::size_t const g = static_cast<std::size_t>((w[i] < 0 ? -w[i] : w[i]) - 1);
      std::int64_t      e = static_cast<std::int64_t>(j - i);
      if (w[i] < 0) {
        e = -e;
      }
      out += g < names.size() ? names[g] : "g" + std::to_string(g);
      if (e != 1) {
        out += "^" + std::to_string(e);
      }
      i = j;
    }
    return out;
  }

}  // namespace centra
