// foxhom - knot group invariants via Fox calculus and homomorphism counting
//
// Fox free differential calculus, the Alexander matrix of a presentation,
// and the Alexander polynomial as the gcd of its maximal minors.

#ifndef FOXHOM_FOX_HPP_
#define FOXHOM_FOX_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "checked_int.hpp"
#include "error.hpp"
#include "laurent.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace foxhom {

  //! Finite Z-linear combination of free group words.
  class GroupRingElement {
   public:
    GroupRingElement() = default;

    [[nodiscard]] std::map<Word, std::int64_t> const& terms() const noexcept {
      return _terms;
    }
    [[nodiscard]] bool is_zero() const noexcept { return _terms.empty(); }

    GroupRingElement& add_term(Word const& w, std::int64_t c) {
      if (c == 0) {
        return *this;
      }
      auto [it, inserted] = _terms.try_emplace(w, c);
      if (!inserted) {
        it->second = checked::add(it->second, c);
        if (it->second == 0) {
          _terms.erase(it);
        }
      }
      return *this;
    }

    GroupRingElement& operator+=(GroupRingElement const& rhs) {
      for (auto const& [w, c] : rhs._terms) {
        add_term(w, c);
      }
      return *this;
    }

    //! u * this
    [[nodiscard]] GroupRingElement left_multiplied(Word const& u) const {
      GroupRingElement out;
      for (auto const& [w, c] : _terms) {
        out.add_term(u * w, c);
      }
      return out;
    }

    bool operator==(GroupRingElement const&) const = default;

   private:
    std::map<Word, std::int64_t> _terms;
  };

  [[nodiscard]] inline std::string to_string(GroupRingElement const& e,
                                             std::span<const std::string> names) {
    if (e.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto const& [w, c] : e.terms()) {
      if (!out.empty()) {
        out += c < 0 ? " - " : " + ";
      } else if (c < 0) {
        out += "-";
      }
      auto mag = c < 0 ? checked::neg(c) : c;
      if (mag != 1) {
        out += std::to_string(mag) + "*";
      }
      out += to_string(w, names);
    }
    return out;
  }

  //! d w / d g, walking the syllables with the product rule. A syllable g^k
  //! behind prefix p contributes p(1 + g + ... + g^(k-1)) for k > 0 and
  //! -p(g^-1 + ... + g^k) for k < 0.
  [[nodiscard]] inline GroupRingElement fox_derivative(Word const& w, GeneratorId g) {
    GroupRingElement out;
    Word             prefix;
    for (auto const& s : w.syllables()) {
      if (s.generator == g) {
        if (s.exponent > 0) {
          for (std::int64_t i = 0; i < s.exponent; ++i) {
            out.add_term(prefix * Word::letter(g, i), 1);
          }
        } else {
          for (std::int64_t i = 1; i <= -s.exponent; ++i) {
            out.add_term(prefix * Word::letter(g, -i), -1);
          }
        }
      }
      prefix *= Word::letter(s.generator, s.exponent);
    }
    return out;
  }

  //! Total weight of a word: sum of exponent * weight over its syllables.
  [[nodiscard]] inline std::int64_t word_weight(Word const& w,
                                                std::span<const std::int64_t> weights) {
    std::int64_t total = 0;
    for (auto const& s : w.syllables()) {
      if (s.generator >= weights.size()) {
        throw Error(ErrorKind::missing_weight,
                    "no weight for generator " + std::to_string(s.generator));
      }
      total = checked::add(total, checked::mul(s.exponent, weights[s.generator]));
    }
    return total;
  }

  //! Sends each word w to t^weight(w) and collects coefficients.
  [[nodiscard]] inline LaurentPoly abelianize_ring_element(
      GroupRingElement const& e, std::span<const std::int64_t> weights) {
    LaurentPoly out;
    for (auto const& [w, c] : e.terms()) {
      out.add_term(c, word_weight(w, weights));
    }
    return out;
  }

  using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

  struct AlexanderMatrix {
    std::size_t   rows = 0;
    std::size_t   cols = 0;
    //! entries[i][j] = abelianized d(relator i) / d(generator j)
    LaurentMatrix entries;
  };

  [[nodiscard]] inline AlexanderMatrix alexander_matrix(Presentation const& p) {
    auto ab = abelianize(p);
    if (!ab.weights) {
      throw Error(ErrorKind::not_infinite_cyclic_h1,
                  "abelianization has free rank " + std::to_string(ab.free_rank) + " and "
                      + std::to_string(ab.invariant_factors.size()) + " torsion factors");
    }
    AlexanderMatrix m;
    m.rows = p.relators().size();
    m.cols = p.generator_count();
    for (auto const& r : p.relators()) {
      std::vector<LaurentPoly> row;
      row.reserve(m.cols);
      for (GeneratorId j = 0; j < m.cols; ++j) {
        row.push_back(abelianize_ring_element(fox_derivative(r, j), *ab.weights));
      }
      m.entries.push_back(std::move(row));
    }
    return m;
  }

  //! Cofactor expansion along the first row. The 0x0 determinant is 1.
  [[nodiscard]] inline LaurentPoly determinant(LaurentMatrix const& m) {
    auto const n = m.size();
    if (n == 0) {
      return LaurentPoly(1);
    }
    if (n == 1) {
      return m[0][0];
    }
    LaurentPoly det;
    for (std::size_t j = 0; j < n; ++j) {
      if (m[0][j].is_zero()) {
        continue;
      }
      LaurentMatrix sub;
      sub.reserve(n - 1);
      for (std::size_t i = 1; i < n; ++i) {
        std::vector<LaurentPoly> row;
        row.reserve(n - 1);
        for (std::size_t k = 0; k < n; ++k) {
          if (k != j) {
            row.push_back(m[i][k]);
          }
        }
        sub.push_back(std::move(row));
      }
      auto term = m[0][j] * determinant(sub);
      det += j % 2 == 0 ? term : -term;
    }
    return det;
  }

  namespace detail {
    // All k-subsets of {0..n-1} in lexicographic order.
    inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
      std::vector<std::vector<std::size_t>> out;
      if (k > n) {
        return out;
      }
      std::vector<std::size_t> idx(k);
      for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
      }
      while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) {
          --i;
        }
        if (i == 0) {
          break;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
          idx[j] = idx[j - 1] + 1;
        }
      }
      return out;
    }
  }  // namespace detail

  //! Every minor of the given size, rows and columns in lexicographic order.
  [[nodiscard]] inline std::vector<LaurentPoly> minors(AlexanderMatrix const& m,
                                                       std::size_t           size) {
    std::vector<LaurentPoly> out;
    for (auto const& rows : detail::subsets(m.rows, size)) {
      for (auto const& cols : detail::subsets(m.cols, size)) {
        LaurentMatrix sub;
        for (auto i : rows) {
          std::vector<LaurentPoly> row;
          for (auto j : cols) {
            row.push_back(m.entries[i][j]);
          }
          sub.push_back(std::move(row));
        }
        out.push_back(determinant(sub));
      }
    }
    return out;
  }

  //! Normalized gcd of the (g-1)x(g-1) minors of the Alexander matrix, where
  //! g is the number of generators.
  [[nodiscard]] inline LaurentPoly alexander_polynomial(Presentation const& p) {
    auto const g = p.generator_count();
    if (g >= 1 && p.relators().size() < g - 1) {
      throw Error(ErrorKind::deficiency_too_large,
                  std::to_string(p.relators().size()) + " relators for " + std::to_string(g)
                      + " generators");
    }
    auto const m = alexander_matrix(p);
    LaurentPoly result;
    for (auto const& minor : minors(m, g - 1)) {
      result = gcd(result, minor);
    }
    return normalize_up_to_units(result);
  }

}  // namespace foxhom

#endif  // FOXHOM_FOX_HPP_
