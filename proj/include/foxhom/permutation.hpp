// foxhom - knot group invariants via Fox calculus and homomorphism counting
//
// Permutations of {0, ..., degree-1}, written 1-based in cycle notation.
//
// Product convention: compose(p, q) applies p first, then q, i.e.
// compose(p, q)(i) = q(p(i)). This is the convention of GAP and Sage
// (points act on the right, i^(pq) = (i^p)^q), so an assignment of
// permutations to generators is a homomorphism here exactly when GAP's
// GroupHomomorphismByImages accepts it.

#ifndef FOXHOM_PERMUTATION_HPP_
#define FOXHOM_PERMUTATION_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "checked_int.hpp"
#include "error.hpp"

namespace foxhom {

  class Permutation {
   public:
    using point_type = std::uint32_t;

    Permutation() = default;

    //! Identity of the given degree.
    explicit Permutation(std::size_t degree) : _images(degree) {
      std::iota(_images.begin(), _images.end(), point_type{0});
    }

    //! 0-based image array; throws InvalidParameter unless it is a bijection.
    explicit Permutation(std::vector<point_type> images) : _images(std::move(images)) {
      std::vector<bool> seen(_images.size(), false);
      for (auto v : _images) {
        if (v >= _images.size() || seen[v]) {
          throw Error(ErrorKind::invalid_parameter, "image array is not a bijection");
        }
        seen[v] = true;
      }
    }

    [[nodiscard]] std::size_t degree() const noexcept { return _images.size(); }
    [[nodiscard]] point_type  operator[](std::size_t i) const { return _images[i]; }
    [[nodiscard]] std::vector<point_type> const& images() const noexcept {
      return _images;
    }

    [[nodiscard]] bool is_identity() const noexcept {
      for (std::size_t i = 0; i < _images.size(); ++i) {
        if (_images[i] != i) {
          return false;
        }
      }
      return true;
    }

    auto operator<=>(const Permutation&) const = default;

   private:
    std::vector<point_type> _images;
  };

  struct PermutationHash {
    std::size_t operator()(Permutation const& p) const noexcept {
      std::uint64_t h = 1469598103934665603ULL;
      for (auto v : p.images()) {
        h ^= v;
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };

  //! Apply p first, then q.
  [[nodiscard]] inline Permutation compose(Permutation const& p, Permutation const& q) {
    if (p.degree() != q.degree()) {
      throw Error(ErrorKind::degree_mismatch,
                  "degrees " + std::to_string(p.degree()) + " and "
                      + std::to_string(q.degree()));
    }
    std::vector<Permutation::point_type> out(p.degree());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = q[p[i]];
    }
    return Permutation(std::move(out));
  }

  [[nodiscard]] inline Permutation inverse(Permutation const& p) {
    std::vector<Permutation::point_type> out(p.degree());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[p[i]] = static_cast<Permutation::point_type>(i);
    }
    return Permutation(std::move(out));
  }

  //! Disjoint cycles of length >= 2, each starting at its smallest point.
  [[nodiscard]] inline std::vector<std::vector<std::size_t>> cycles(Permutation const& p) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool>                     seen(p.degree(), false);
    for (std::size_t i = 0; i < p.degree(); ++i) {
      if (seen[i] || p[i] == i) {
        continue;
      }
      std::vector<std::size_t> c;
      for (std::size_t j = i; !seen[j]; j = p[j]) {
        seen[j] = true;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  //! Sorted cycle lengths including fixed points; equal in S_n iff conjugate.
  [[nodiscard]] inline std::vector<std::size_t> cycle_type(Permutation const& p) {
    std::vector<std::size_t> out;
    std::size_t              moved = 0;
    for (auto const& c : cycles(p)) {
      out.push_back(c.size());
      moved += c.size();
    }
    out.insert(out.end(), p.degree() - moved, 1);
    std::sort(out.begin(), out.end());
    return out;
  }

  [[nodiscard]] inline std::int64_t order(Permutation const& p) {
    std::int64_t n = 1;
    for (auto const& c : cycles(p)) {
      auto len = static_cast<std::int64_t>(c.size());
      n        = checked::mul(n / checked::gcd(n, len), len);
    }
    return n;
  }

  [[nodiscard]] inline bool is_even(Permutation const& p) {
    std::size_t transpositions = 0;
    for (auto const& c : cycles(p)) {
      transpositions += c.size() - 1;
    }
    return transpositions % 2 == 0;
  }

  //! 1-based cycle notation, e.g. `(1,5,4,3,2)`; the identity is `()`.
  [[nodiscard]] inline std::string to_string(Permutation const& p) {
    auto cs = cycles(p);
    if (cs.empty()) {
      return "()";
    }
    std::string out;
    for (auto const& c : cs) {
      out += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != 0) {
          out += ',';
        }
        out += std::to_string(c[i] + 1);
      }
      out += ')';
    }
    return out;
  }

  //! Parses a product of 1-based cycles such as `(1,5,4,3,2)` or `(1,2)(3,4)`;
  //! `()` is the identity. Cycles are multiplied left to right under the
  //! convention above. With degree 0 the degree is the largest point named.
  [[nodiscard]] inline Permutation parse_permutation(std::string_view text,
                                                     std::size_t      degree = 0) {
    std::vector<std::vector<std::size_t>> parsed;
    std::size_t                           pos = 0;
    auto fail = [&](std::string const& msg) -> void {
      throw SyntaxError(1, pos + 1, msg + " in permutation `" + std::string(text) + "`");
    };
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    skip_ws();
    if (pos == text.size()) {
      fail("empty permutation literal");
    }
    std::size_t max_point = 0;
    while (true) {
      skip_ws();
      if (pos == text.size()) {
        break;
      }
      if (text[pos] != '(') {
        fail("expected `(`");
      }
      ++pos;
      std::vector<std::size_t> cycle;
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        parsed.push_back({});
        continue;
      }
      while (true) {
        skip_ws();
        std::size_t start = pos;
        std::size_t value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
          if (value > 1'000'000) {
            fail("point too large");
          }
          ++pos;
        }
        if (pos == start) {
          fail("expected a point");
        }
        if (value == 0) {
          fail("points are 1-based");
        }
        if (std::find(cycle.begin(), cycle.end(), value - 1) != cycle.end()) {
          fail("repeated point in cycle");
        }
        cycle.push_back(value - 1);
        max_point = std::max(max_point, value);
        std::size_t const after_point = pos;
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        // Whitespace alone also separates points, as in `(1 5 4 3 2)`.
        if (pos > after_point && pos < text.size()
            && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          continue;
        }
        fail("expected `,` or `)`");
      }
      parsed.push_back(std::move(cycle));
    }
    if (degree == 0) {
      degree = std::max<std::size_t>(max_point, 1);
    } else if (max_point > degree) {
      throw Error(ErrorKind::degree_mismatch,
                  "point " + std::to_string(max_point) + " exceeds degree "
                      + std::to_string(degree));
    }
    Permutation result(degree);
    for (auto const& c : parsed) {
      std::vector<Permutation::point_type> img(degree);
      std::iota(img.begin(), img.end(), Permutation::point_type{0});
      for (std::size_t i = 0; i < c.size(); ++i) {
        img[c[i]] = static_cast<Permutation::point_type>(c[(i + 1) % c.size()]);
      }
      result = compose(result, Permutation(std::move(img)));
    }
    return result;
  }

}  // namespace foxhom

#endif  // FOXHOM_PERMUTATION_HPP_
