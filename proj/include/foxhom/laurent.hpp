// foxhom - knot group invariants via Fox calculus and homomorphism counting
//
// Exact arithmetic in Z[t, t^-1] with overflow-checked 64-bit coefficients.

#ifndef FOXHOM_LAURENT_HPP_
#define FOXHOM_LAURENT_HPP_

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "checked_int.hpp"
#include "error.hpp"

namespace foxhom {

  class LaurentPoly {
   public:
    using exponent_type    = std::int64_t;
    using coefficient_type = std::int64_t;

    //! The zero polynomial.
    LaurentPoly() = default;

    //! The constant c.
    LaurentPoly(coefficient_type c) {  // NOLINT(google-explicit-constructor)
      if (c != 0) {
        _terms.emplace(0, c);
      }
    }

    [[nodiscard]] static LaurentPoly monomial(coefficient_type c, exponent_type e) {
      LaurentPoly p;
      if (c != 0) {
        p._terms.emplace(e, c);
      }
      return p;
    }

    //! t^e
    [[nodiscard]] static LaurentPoly t(exponent_type e = 1) { return monomial(1, e); }

    [[nodiscard]] bool is_zero() const noexcept { return _terms.empty(); }

    //! Nonzero coefficients keyed by exponent.
    [[nodiscard]] std::map<exponent_type, coefficient_type> const& terms() const noexcept {
      return _terms;
    }

    [[nodiscard]] coefficient_type coefficient(exponent_type e) const {
      auto it = _terms.find(e);
      return it == _terms.end() ? 0 : it->second;
    }

    [[nodiscard]] exponent_type min_exponent() const {
      require_nonzero();
      return _terms.begin()->first;
    }
    [[nodiscard]] exponent_type max_exponent() const {
      require_nonzero();
      return _terms.rbegin()->first;
    }

    //! Adds c*t^e in place.
    LaurentPoly& add_term(coefficient_type c, exponent_type e) {
      if (c == 0) {
        return *this;
      }
      auto [it, inserted] = _terms.try_emplace(e, c);
      if (!inserted) {
        it->second = checked::add(it->second, c);
        if (it->second == 0) {
          _terms.erase(it);
        }
      }
      return *this;
    }

    LaurentPoly& operator+=(LaurentPoly const& q) {
      for (auto const& [e, c] : q._terms) {
        add_term(c, e);
      }
      return *this;
    }

    LaurentPoly& operator-=(LaurentPoly const& q) {
      for (auto const& [e, c] : q._terms) {
        add_term(checked::neg(c), e);
      }
      return *this;
    }

    [[nodiscard]] friend LaurentPoly operator+(LaurentPoly p, LaurentPoly const& q) {
      return p += q;
    }
    [[nodiscard]] friend LaurentPoly operator-(LaurentPoly p, LaurentPoly const& q) {
      return p -= q;
    }
    [[nodiscard]] friend LaurentPoly operator-(LaurentPoly const& p) {
      LaurentPoly r;
      for (auto const& [e, c] : p._terms) {
        r._terms.emplace(e, checked::neg(c));
      }
      return r;
    }
    [[nodiscard]] friend LaurentPoly operator*(LaurentPoly const& p, LaurentPoly const& q) {
      LaurentPoly r;
      for (auto const& [ep, cp] : p._terms) {
        for (auto const& [eq, cq] : q._terms) {
          r.add_term(checked::mul(cp, cq), checked::add(ep, eq));
        }
      }
      return r;
    }

    //! Multiplies by t^k.
    [[nodiscard]] LaurentPoly shifted(exponent_type k) const {
      LaurentPoly r;
      for (auto const& [e, c] : _terms) {
        r._terms.emplace_hint(r._terms.end(), checked::add(e, k), c);
      }
      return r;
    }

    bool operator==(LaurentPoly const&) const = default;

   private:
    void require_nonzero() const {
      if (_terms.empty()) {
        throw Error(ErrorKind::zero_polynomial, "operation undefined for 0");
      }
    }

    std::map<exponent_type, coefficient_type> _terms;
  };

  [[nodiscard]] inline LaurentPoly add(LaurentPoly const& p, LaurentPoly const& q) {
    return p + q;
  }
  [[nodiscard]] inline LaurentPoly negate(LaurentPoly const& p) { return -p; }
  [[nodiscard]] inline LaurentPoly multiply(LaurentPoly const& p, LaurentPoly const& q) {
    return p * q;
  }

  //! Highest minus lowest exponent. Throws ZeroPolynomial for 0.
  [[nodiscard]] inline std::int64_t breadth(LaurentPoly const& p) {
    return checked::sub(p.max_exponent(), p.min_exponent());
  }

  //! The representative of p's class modulo units +-t^k whose lowest exponent
  //! is 0 and whose lowest coefficient is positive.
  [[nodiscard]] inline LaurentPoly normalize_up_to_units(LaurentPoly const& p) {
    if (p.is_zero()) {
      return p;
    }
    auto shifted = p.shifted(checked::neg(p.min_exponent()));
    return shifted.coefficient(0) < 0 ? -shifted : shifted;
  }

  [[nodiscard]] inline bool are_associate(LaurentPoly const& p, LaurentPoly const& q) {
    return normalize_up_to_units(p) == normalize_up_to_units(q);
  }

  namespace detail {
    // Dense polynomials in Z[t], index = degree, no trailing zeros.
    using Dense = std::vector<std::int64_t>;

    inline Dense to_dense(LaurentPoly const& p) {
      Dense d;
      if (p.is_zero()) {
        return d;
      }
      auto lo = p.min_exponent();
      d.assign(static_cast<std::size_t>(checked::sub(p.max_exponent(), lo)) + 1, 0);
      for (auto const& [e, c] : p.terms()) {
        d[static_cast<std::size_t>(e - lo)] = c;
      }
      return d;
    }

    inline LaurentPoly from_dense(Dense const& d) {
      LaurentPoly p;
      for (std::size_t i = 0; i < d.size(); ++i) {
        p.add_term(d[i], static_cast<std::int64_t>(i));
      }
      return p;
    }

    inline void trim(Dense& d) {
      while (!d.empty() && d.back() == 0) {
        d.pop_back();
      }
    }

    inline std::int64_t content(Dense const& d) {
      std::int64_t g = 0;
      for (auto c : d) {
        g = checked::gcd(g, c);
      }
      return g;
    }

    inline Dense primitive_part(Dense d) {
      auto g = content(d);
      if (g > 1) {
        for (auto& c : d) {
          c /= g;
        }
      }
      return d;
    }

    // Some nonzero integer multiple of a mod b, reduced to primitive form.
    inline Dense primitive_remainder(Dense r, Dense const& b) {
      auto const lb = b.back();
      while (!r.empty() && r.size() >= b.size()) {
        auto const lr    = r.back();
        auto const shift = r.size() - b.size();
        for (auto& c : r) {
          c = checked::mul(c, lb);
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
          r[i + shift] = checked::sub(r[i + shift], checked::mul(lr, b[i]));
        }
        trim(r);
        r = primitive_part(std::move(r));
      }
      return r;
    }
  }  // namespace detail

  //! A greatest common divisor in Z[t, t^-1], normalized up to units.
  //! Contents and primitive parts are handled separately (Gauss's lemma);
  //! the primitive parts go through a primitive remainder sequence.
  [[nodiscard]] inline LaurentPoly gcd(LaurentPoly const& p, LaurentPoly const& q) {
    if (p.is_zero()) {
      return normalize_up_to_units(q);
    }
    if (q.is_zero()) {
      return normalize_up_to_units(p);
    }
    auto a = detail::to_dense(p);
    auto b = detail::to_dense(q);
    auto c = checked::gcd(detail::content(a), detail::content(b));
    a      = detail::primitive_part(std::move(a));
    b      = detail::primitive_part(std::move(b));
    if (a.size() < b.size()) {
      std::swap(a, b);
    }
    while (!b.empty()) {
      auto r = detail::primitive_remainder(a, b);
      a      = std::move(b);
      b      = std::move(r);
    }
    auto g = detail::from_dense(a);
    return normalize_up_to_units(g * LaurentPoly(c));
  }

  //! p / q when q divides p exactly in Z[t, t^-1], otherwise nullopt.
  //! Throws ZeroPolynomial when q is 0.
  [[nodiscard]] inline std::optional<LaurentPoly> exact_divide(LaurentPoly const& p,
                                                               LaurentPoly const& q) {
    if (q.is_zero()) {
      throw Error(ErrorKind::zero_polynomial, "division by 0");
    }
    if (p.is_zero()) {
      return LaurentPoly();
    }
    // Both dense forms have nonzero constant terms, so divisibility in the
    // Laurent ring coincides with divisibility in Z[t].
    auto r = detail::to_dense(p);
    auto d = detail::to_dense(q);
    if (r.size() < d.size()) {
      return std::nullopt;
    }
    detail::Dense quotient(r.size() - d.size() + 1, 0);
    while (r.size() >= d.size()) {
      if (r.back() % d.back() != 0) {
        return std::nullopt;
      }
      auto const k     = r.back() / d.back();
      auto const shift = r.size() - d.size();
      quotient[shift]  = k;
      for (std::size_t i = 0; i < d.size(); ++i) {
        r[i + shift] = checked::sub(r[i + shift], checked::mul(k, d[i]));
      }
      detail::trim(r);
      if (r.empty()) {
        break;
      }
    }
    if (!r.empty()) {
      return std::nullopt;
    }
    return detail::from_dense(quotient).shifted(
        checked::sub(p.min_exponent(), q.min_exponent()));
  }

  //! Terms by ascending exponent, e.g. `t^-2 - t^-1 + 1`, `1 - 2*t`.
  [[nodiscard]] inline std::string to_string(LaurentPoly const& p) {
    if (p.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [e, c] : p.terms()) {
      bool const negative  = c < 0;
      auto const magnitude = negative ? -static_cast<unsigned long long>(c)
                                      : static_cast<unsigned long long>(c);
      if (first) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (e == 0) {
        out += std::to_string(magnitude);
        continue;
      }
      if (magnitude != 1) {
        out += std::to_string(magnitude) + "*";
      }
      out += "t";
      if (e != 1) {
        out += "^" + std::to_string(e);
      }
    }
    return out;
  }

  //! Inverse of to_string; also accepts `2t`, `t^+3` and free whitespace.
  [[nodiscard]] inline LaurentPoly parse_laurent(std::string_view text) {
    std::size_t pos  = 0;
    auto        fail = [&](std::string const& msg) {
      throw SyntaxError(1, pos + 1, msg + " in polynomial `" + std::string(text) + "`");
    };
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    auto read_digits = [&](std::int64_t& value) -> bool {
      auto         start = pos;
      std::int64_t v     = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = checked::add(checked::mul(v, 10), text[pos] - '0');
        ++pos;
      }
      if (pos == start) {
        return false;
      }
      value = v;
      return true;
    };
    LaurentPoly result;
    skip_ws();
    if (pos == text.size()) {
      fail("empty polynomial");
    }
    bool first = true;
    while (true) {
      skip_ws();
      if (pos == text.size()) {
        break;
      }
      std::int64_t sign = 1;
      if (text[pos] == '+' || text[pos] == '-') {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
        skip_ws();
      } else if (!first) {
        fail("expected `+` or `-`");
      }
      first = false;
      std::int64_t coef     = 1;
      bool const   has_coef = read_digits(coef);
      skip_ws();
      if (has_coef && pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
        if (pos == text.size() || text[pos] != 't') {
          fail("expected `t` after `*`");
        }
      }
      std::int64_t exponent = 0;
      if (pos < text.size() && text[pos] == 't') {
        ++pos;
        exponent = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          std::int64_t esign = 1;
          if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            esign = text[pos] == '-' ? -1 : 1;
            ++pos;
          }
          if (!read_digits(exponent)) {
            fail("expected an exponent");
          }
          exponent *= esign;
        }
      } else if (!has_coef) {
        fail("expected a term");
      }
      result.add_term(checked::mul(sign, coef), exponent);
    }
    return result;
  }

}  // namespace foxhom

#endif  // FOXHOM_LAURENT_HPP_
