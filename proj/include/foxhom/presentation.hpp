// foxhom - knot group invariants via Fox calculus and homomorphism counting
//
// Finitely presented groups with named marker words, their text format, the
// two-meridian family F_m and integer abelianization.
//
// Text format:
//
//   < x, y, a | y*x*y*x^-1*y^-1*x^-1, x^-1*a*x*a^-1*x^-1*y*a*y^-1 >
//   meridian meridian_B: x
//   meridian meridian_G: a
//
// Whitespace is insignificant inside `< >`; each marker sits on its own line;
// `#` starts a comment. `1` denotes the empty word.

#ifndef FOXHOM_PRESENTATION_HPP_
#define FOXHOM_PRESENTATION_HPP_

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "smith.hpp"
#include "word.hpp"

namespace foxhom {

  //! Generator and marker names: a letter or `_`, then letters, digits, `_`,
  //! `'` or `.`.
  [[nodiscard]] inline bool is_valid_name(std::string_view name) noexcept {
    if (name.empty()) {
      return false;
    }
    auto head = static_cast<unsigned char>(name[0]);
    if (!std::isalpha(head) && head != '_') {
      return false;
    }
    for (char c : name) {
      auto u = static_cast<unsigned char>(c);
      if (!std::isalnum(u) && c != '_' && c != '\'' && c != '.') {
        return false;
      }
    }
    return true;
  }

  class Presentation {
   public:
    Presentation() = default;

    Presentation(std::vector<std::string> generators, std::vector<Word> relators,
                 std::map<std::string, Word> markers = {})
        : _generators(std::move(generators)),
          _relators(std::move(relators)),
          _markers(std::move(markers)) {
      std::set<std::string_view> seen;
      for (auto const& g : _generators) {
        if (!is_valid_name(g)) {
          throw Error(ErrorKind::invalid_parameter, "invalid generator name `" + g + "`");
        }
        if (!seen.insert(g).second) {
          throw Error(ErrorKind::duplicate_generator, g);
        }
      }
      auto check = [&](Word const& w, std::string const& what) {
        if (w.generator_bound() > _generators.size()) {
          throw Error(ErrorKind::unknown_generator,
                      "generator id " + std::to_string(w.generator_bound() - 1) + " in "
                          + what);
        }
      };
      for (std::size_t i = 0; i < _relators.size(); ++i) {
        check(_relators[i], "relator " + std::to_string(i + 1));
      }
      for (auto const& [name, w] : _markers) {
        if (!is_valid_name(name)) {
          throw Error(ErrorKind::invalid_parameter, "invalid marker name `" + name + "`");
        }
        check(w, "marker " + name);
      }
    }

    [[nodiscard]] std::vector<std::string> const& generators() const noexcept {
      return _generators;
    }
    [[nodiscard]] std::size_t generator_count() const noexcept { return _generators.size(); }
    [[nodiscard]] std::vector<Word> const& relators() const noexcept { return _relators; }
    [[nodiscard]] std::map<std::string, Word> const& markers() const noexcept {
      return _markers;
    }

    [[nodiscard]] std::optional<GeneratorId> find_generator(std::string_view name) const {
      for (std::size_t i = 0; i < _generators.size(); ++i) {
        if (_generators[i] == name) {
          return static_cast<GeneratorId>(i);
        }
      }
      return std::nullopt;
    }

    //! Throws UnknownGenerator.
    [[nodiscard]] GeneratorId generator_id(std::string_view name) const {
      auto id = find_generator(name);
      if (!id) {
        throw Error(ErrorKind::unknown_generator, std::string(name));
      }
      return *id;
    }

    //! Throws UnknownMarker.
    [[nodiscard]] Word const& marker(std::string_view name) const {
      auto it = _markers.find(std::string(name));
      if (it == _markers.end()) {
        throw Error(ErrorKind::unknown_marker, std::string(name));
      }
      return it->second;
    }

    [[nodiscard]] std::string word_to_string(Word const& w) const {
      return to_string(w, _generators);
    }

    bool operator==(Presentation const&) const = default;

   private:
    std::vector<std::string>    _generators;
    std::vector<Word>           _relators;
    std::map<std::string, Word> _markers;
  };

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    class PresentationLexer {
     public:
      enum class Kind { name, integer, punct, end };

      struct Token {
        Kind             kind = Kind::end;
        std::string_view text;
        std::size_t      line = 1, column = 1;
      };

      explicit PresentationLexer(std::string_view src) : _src(src) { advance(); }

      [[nodiscard]] Token const& peek() const noexcept { return _tok; }

      Token next() {
        Token t = _tok;
        advance();
        return t;
      }

      [[noreturn]] void fail(Token const& t, std::string const& msg) const {
        throw SyntaxError(t.line, t.column, msg);
      }

      bool accept(char c) {
        if (_tok.kind == Kind::punct && _tok.text[0] == c) {
          advance();
          return true;
        }
        return false;
      }

      Token expect(char c) {
        if (_tok.kind != Kind::punct || _tok.text[0] != c) {
          fail(_tok, std::string("expected `") + c + "`, found " + describe(_tok));
        }
        return next();
      }

      Token expect_name() {
        if (_tok.kind != Kind::name) {
          fail(_tok, "expected a name, found " + describe(_tok));
        }
        return next();
      }

      [[nodiscard]] static std::string describe(Token const& t) {
        return t.kind == Kind::end ? std::string("end of input")
                                   : "`" + std::string(t.text) + "`";
      }

     private:
      void advance() {
        // Skip whitespace and comments.
        while (_pos < _src.size()) {
          char c = _src[_pos];
          if (c == '#') {
            while (_pos < _src.size() && _src[_pos] != '\n') {
              bump();
            }
          } else if (std::isspace(static_cast<unsigned char>(c))) {
            bump();
          } else {
            break;
          }
        }
        _tok.line   = _line;
        _tok.column = _column;
        if (_pos == _src.size()) {
          _tok.kind = Kind::end;
          _tok.text = {};
          return;
        }
        auto const start = _pos;
        auto const c     = static_cast<unsigned char>(_src[_pos]);
        if (std::isalpha(c) || c == '_') {
          while (_pos < _src.size()) {
            auto d = static_cast<unsigned char>(_src[_pos]);
            if (!std::isalnum(d) && d != '_' && d != '\'' && d != '.') {
              break;
            }
            bump();
          }
          _tok.kind = Kind::name;
        } else if (std::isdigit(c)) {
          while (_pos < _src.size() && std::isdigit(static_cast<unsigned char>(_src[_pos]))) {
            bump();
          }
          _tok.kind = Kind::integer;
        } else if (std::string_view("<>|,*^():-+").find(static_cast<char>(c))
                   != std::string_view::npos) {
          bump();
          _tok.kind = Kind::punct;
        } else {
          throw SyntaxError(_line, _column,
                            "unexpected character `" + std::string(1, static_cast<char>(c))
                                + "`");
        }
        _tok.text = _src.substr(start, _pos - start);
      }

      void bump() {
        if (_src[_pos] == '\n') {
          ++_line;
          _column = 1;
        } else {
          ++_column;
        }
        ++_pos;
      }

      std::string_view _src;
      std::size_t      _pos = 0, _line = 1, _column = 1;
      Token            _tok;
    };

    class WordParser {
     public:
      using Lexer = PresentationLexer;

      WordParser(Lexer& lex, std::vector<std::string> const& names)
          : _lex(lex), _names(names) {}

      Word word() {
        Word w = factor();
        while (_lex.accept('*')) {
          w *= factor();
        }
        return w;
      }

     private:
      Word factor() {
        Word base;
        auto tok = _lex.peek();
        if (_lex.accept('(')) {
          base = word();
          _lex.expect(')');
        } else if (tok.kind == Lexer::Kind::integer && tok.text == "1") {
          _lex.next();
        } else {
          tok = _lex.expect_name();
          base = Word::letter(lookup(tok));
        }
        if (_lex.accept('^')) {
          base = power(base, exponent());
        }
        return base;
      }

      std::int64_t exponent() {
        std::int64_t sign = 1;
        if (_lex.accept('-')) {
          sign = -1;
        } else {
          _lex.accept('+');
        }
        auto tok = _lex.peek();
        if (tok.kind != Lexer::Kind::integer) {
          _lex.fail(tok, "expected an integer exponent, found " + Lexer::describe(tok));
        }
        _lex.next();
        std::int64_t value = 0;
        for (char c : tok.text) {
          if (__builtin_mul_overflow(value, 10, &value)
              || __builtin_add_overflow(value, c - '0', &value)) {
            _lex.fail(tok, "exponent out of range");
          }
        }
        return sign * value;
      }

      GeneratorId lookup(Lexer::Token const& tok) {
        for (std::size_t i = 0; i < _names.size(); ++i) {
          if (_names[i] == tok.text) {
            return static_cast<GeneratorId>(i);
          }
        }
        throw Error(ErrorKind::unknown_generator,
                    std::string(tok.text) + " at " + std::to_string(tok.line) + ":"
                        + std::to_string(tok.column));
      }

      Lexer&                          _lex;
      std::vector<std::string> const& _names;
    };

  }  // namespace detail

  //! Parses a word such as `(y*x)^-3` over the given generator names.
  [[nodiscard]] inline Word parse_word(std::string_view text,
                                       std::vector<std::string> const& names) {
    detail::PresentationLexer lex(text);
    detail::WordParser        parser(lex, names);
    auto                      w = parser.word();
    if (lex.peek().kind != detail::PresentationLexer::Kind::end) {
      lex.fail(lex.peek(), "trailing input " + detail::PresentationLexer::describe(lex.peek()));
    }
    return w;
  }

  [[nodiscard]] inline Presentation parse_presentation(std::string_view text) {
    using Lexer = detail::PresentationLexer;
    Lexer lex(text);
    lex.expect('<');

    std::vector<std::string> names;
    do {
      auto tok = lex.expect_name();
      for (auto const& n : names) {
        if (n == tok.text) {
          throw Error(ErrorKind::duplicate_generator,
                      std::string(tok.text) + " at " + std::to_string(tok.line) + ":"
                          + std::to_string(tok.column));
        }
      }
      names.emplace_back(tok.text);
    } while (lex.accept(','));
    lex.expect('|');

    detail::WordParser words(lex, names);
    std::vector<Word>  relators;
    if (lex.peek().kind != Lexer::Kind::punct || lex.peek().text != ">") {
      do {
        relators.push_back(words.word());
      } while (lex.accept(','));
    }
    std::size_t last_line = lex.expect('>').line;

    std::map<std::string, Word> markers;
    while (lex.peek().kind != Lexer::Kind::end) {
      auto kw = lex.peek();
      if (kw.kind != Lexer::Kind::name || kw.text != "meridian") {
        lex.fail(kw, "expected `meridian` marker line, found " + Lexer::describe(kw));
      }
      if (kw.line == last_line) {
        lex.fail(kw, "each marker must be on its own line");
      }
      lex.next();
      auto name = lex.expect_name();
      lex.expect(':');
      auto w = words.word();
      if (!markers.emplace(std::string(name.text), std::move(w)).second) {
        lex.fail(name, "duplicate marker `" + std::string(name.text) + "`");
      }
      last_line = kw.line;
    }
    return Presentation(std::move(names), std::move(relators), std::move(markers));
  }

  //! Canonical text; parse_presentation(render(p)) == p.
  [[nodiscard]] inline std::string render(Presentation const& p) {
    std::string out = "< ";
    for (std::size_t i = 0; i < p.generator_count(); ++i) {
      out += (i == 0 ? "" : ", ") + p.generators()[i];
    }
    out += " |";
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      out += (i == 0 ? " " : ", ") + p.word_to_string(p.relators()[i]);
    }
    out += " >\n";
    for (auto const& [name, w] : p.markers()) {
      out += "meridian " + name + ": " + p.word_to_string(w) + "\n";
    }
    return out;
  }

  //! < x, y, a | (yx)^m y (yx)^-m x^-1, x^-1 a x a^-1 x^-1 y a y^-1 > with
  //! markers meridian_B = x and meridian_G = a.
  [[nodiscard]] inline Presentation family_Fm(std::int64_t m) {
    if (m < 1) {
      throw Error(ErrorKind::invalid_parameter,
                  "family parameter m must be >= 1, got " + std::to_string(m));
    }
    GeneratorId const x = 0, y = 1, a = 2;
    Word const        yx{{y, 1}, {x, 1}};
    Word r1 = power(yx, m) * Word::letter(y) * power(yx, -m) * Word::letter(x, -1);
    Word r2{{x, -1}, {a, 1}, {x, 1}, {a, -1}, {x, -1}, {y, 1}, {a, 1}, {y, -1}};
    return Presentation({"x", "y", "a"}, {std::move(r1), std::move(r2)},
                        {{"meridian_B", Word::letter(x)}, {"meridian_G", Word::letter(a)}});
  }

  ////////////////////////////////////////////////////////////////////////
  // Abelianization
  ////////////////////////////////////////////////////////////////////////

  struct AbelianizationReport {
    //! Torsion coefficients, each > 1, each dividing the next.
    std::vector<std::int64_t> invariant_factors;
    std::size_t               free_rank = 0;
    //! Image of each generator in Z, present iff the abelianization is Z.
    //! The first nonzero weight is positive.
    std::optional<std::vector<std::int64_t>> weights;

    [[nodiscard]] bool is_infinite_cyclic() const noexcept {
      return free_rank == 1 && invariant_factors.empty();
    }
  };

  //! Exponent-sum matrix: one row per relator, one column per generator.
  [[nodiscard]] inline IntMatrix relation_matrix(Presentation const& p) {
    IntMatrix m;
    for (auto const& r : p.relators()) {
      std::vector<std::int64_t> row(p.generator_count(), 0);
      for (auto const& s : r.syllables()) {
        row[s.generator] = checked::add(row[s.generator], s.exponent);
      }
      m.push_back(std::move(row));
    }
    return m;
  }

  [[nodiscard]] inline AbelianizationReport abelianize(Presentation const& p) {
    auto const g   = p.generator_count();
    auto       snf = smith_normal_form(relation_matrix(p), g);

    AbelianizationReport report;
    for (std::size_t i = 0; i < snf.rank; ++i) {
      if (snf.diagonal[i][i] > 1) {
        report.invariant_factors.push_back(snf.diagonal[i][i]);
      }
    }
    report.free_rank = g - snf.rank;
    if (report.is_infinite_cyclic()) {
      // Generator i maps to coordinate `rank` of e_i * right.
      std::vector<std::int64_t> w(g);
      for (std::size_t i = 0; i < g; ++i) {
        w[i] = snf.right[i][snf.rank];
      }
      for (auto c : w) {
        if (c != 0) {
          if (c < 0) {
            for (auto& d : w) {
              d = checked::neg(d);
            }
          }
          break;
        }
      }
      report.weights = std::move(w);
    }
    return report;
  }

}  // namespace foxhom

#endif  // FOXHOM_PRESENTATION_HPP_
