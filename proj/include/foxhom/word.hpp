// foxhom - knot group invariants via Fox calculus and homomorphism counting
//
// Free group words in syllable (run-length) form. A Word is always freely
// reduced: adjacent syllables have distinct generators and no exponent is
// zero. Two words are equal as free group elements iff they compare equal.

#ifndef FOXHOM_WORD_HPP_
#define FOXHOM_WORD_HPP_

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "checked_int.hpp"
#include "error.hpp"

namespace foxhom {

  //! Index of a generator inside the presentation that owns it.
  using GeneratorId = std::uint32_t;

  struct Syllable {
    GeneratorId  generator = 0;
    std::int64_t exponent  = 1;

    auto operator<=>(const Syllable&) const = default;
  };

  class Word {
   public:
    //! The identity word.
    Word() = default;

    //! Freely reduces `raw`.
    explicit Word(std::span<const Syllable> raw) { append(raw); }
    Word(std::initializer_list<Syllable> raw)
        : Word(std::span<const Syllable>(raw.begin(), raw.size())) {}

    [[nodiscard]] static Word letter(GeneratorId g, std::int64_t exponent = 1) {
      return Word({Syllable{g, exponent}});
    }

    [[nodiscard]] std::span<const Syllable> syllables() const noexcept {
      return _syllables;
    }
    [[nodiscard]] bool        is_identity() const noexcept { return _syllables.empty(); }
    [[nodiscard]] std::size_t syllable_count() const noexcept { return _syllables.size(); }

    //! Letter length: the sum of |exponent| over syllables.
    [[nodiscard]] std::int64_t length() const {
      std::int64_t n = 0;
      for (auto const& s : _syllables) {
        n = checked::add(n, checked::abs(s.exponent));
      }
      return n;
    }

    [[nodiscard]] std::int64_t exponent_sum(GeneratorId g) const {
      std::int64_t n = 0;
      for (auto const& s : _syllables) {
        if (s.generator == g) {
          n = checked::add(n, s.exponent);
        }
      }
      return n;
    }

    //! Largest generator id occurring plus one (0 for the identity).
    [[nodiscard]] GeneratorId generator_bound() const noexcept {
      GeneratorId b = 0;
      for (auto const& s : _syllables) {
        b = std::max(b, s.generator + 1);
      }
      return b;
    }

    [[nodiscard]] bool contains(GeneratorId g) const noexcept {
      return std::any_of(_syllables.begin(), _syllables.end(),
                         [g](Syllable const& s) { return s.generator == g; });
    }

    //! Multiplies `raw` onto the right, keeping the word reduced.
    Word& append(std::span<const Syllable> raw) {
      for (auto const& s : raw) {
        push(s);
      }
      return *this;
    }

    Word& operator*=(Word const& rhs) { return append(rhs._syllables); }

    auto operator<=>(const Word&) const = default;

   private:
    void push(Syllable s) {
      if (s.exponent == 0) {
        return;
      }
      if (!_syllables.empty() && _syllables.back().generator == s.generator) {
        auto e = checked::add(_syllables.back().exponent, s.exponent);
        if (e == 0) {
          _syllables.pop_back();
        } else {
          _syllables.back().exponent = e;
        }
        return;
      }
      _syllables.push_back(s);
    }

    std::vector<Syllable> _syllables;
  };

  [[nodiscard]] inline Word reduce(std::span<const Syllable> raw) { return Word(raw); }

  [[nodiscard]] inline Word multiply(Word u, Word const& v) { return u *= v; }

  [[nodiscard]] inline Word operator*(Word u, Word const& v) { return u *= v; }

  [[nodiscard]] inline Word invert(Word const& u) {
    std::vector<Syllable> out;
    auto                  s = u.syllables();
    out.reserve(s.size());
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
      out.push_back({it->generator, checked::neg(it->exponent)});
    }
    return Word(out);
  }

  //! u^k for any integer k. A single-syllable word multiplies its exponent;
  //! otherwise the result has O(|k| * syllables) syllables.
  [[nodiscard]] inline Word power(Word const& u, std::int64_t k) {
    if (k == 0 || u.is_identity()) {
      return Word();
    }
    if (u.syllable_count() == 1) {
      auto s = u.syllables()[0];
      return Word::letter(s.generator, checked::mul(s.exponent, k));
    }
    Word base = k > 0 ? u : invert(u);
    k         = checked::abs(k);
    Word out;
    for (std::int64_t i = 0; i < k; ++i) {
      out *= base;
    }
    return out;
  }

  //! g * u * g^-1
  [[nodiscard]] inline Word conjugate(Word const& u, Word const& g) {
    return g * u * invert(g);
  }

  //! Cyclic reduction: strips matching prefix/suffix pairs and merges the
  //! ends, returning a word whose cyclic rotations are all reduced.
  [[nodiscard]] inline Word cyclically_reduce(Word const& u) {
    std::vector<Syllable> s(u.syllables().begin(), u.syllables().end());
    std::size_t           lo = 0, hi = s.size();
    while (hi - lo >= 2 && s[lo].generator == s[hi - 1].generator) {
      auto e = checked::add(s[lo].exponent, s[hi - 1].exponent);
      if (e != 0) {
        s[lo].exponent = e;
        --hi;
        break;
      }
      ++lo;
      --hi;
    }
    return Word(std::span<const Syllable>(s.data() + lo, hi - lo));
  }

  //! True when u and v are conjugate in the free group, i.e. their cyclic
  //! reductions are rotations of each other.
  [[nodiscard]] inline bool cyclically_equivalent(Word const& u, Word const& v) {
    auto cu = cyclically_reduce(u);
    auto cv = cyclically_reduce(v);
    if (cu.syllable_count() != cv.syllable_count()) {
      return false;
    }
    auto a = cu.syllables();
    auto b = cv.syllables();
    if (a.empty()) {
      return true;
    }
    // Letter-level rotations may split a syllable when a single generator
    // wraps around, but a cyclically reduced word with at least two syllables
    // has distinct first and last generators, so syllable rotations suffice.
    if (a.size() == 1) {
      return a[0] == b[0];
    }
    std::size_t const n = a.size();
    for (std::size_t r = 0; r < n; ++r) {
      bool same = true;
      for (std::size_t i = 0; i < n && same; ++i) {
        same = a[(i + r) % n] == b[i];
      }
      if (same) {
        return true;
      }
    }
    return false;
  }

  //! Renders with generator names, e.g. `x^-1*a*x`. The identity is `1`.
  [[nodiscard]] inline std::string to_string(Word const& u,
                                             std::span<const std::string> names) {
    if (u.is_identity()) {
      return "1";
    }
    std::string out;
    for (auto const& s : u.syllables()) {
      if (!out.empty()) {
        out += '*';
      }
      out += s.generator < names.size() ? names[s.generator]
                                        : "g" + std::to_string(s.generator);
      if (s.exponent != 1) {
        out += '^';
        out += std::to_string(s.exponent);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation in a group
  ////////////////////////////////////////////////////////////////////////

  template <typename G>
  concept GroupLike = requires(G const& grp, typename G::element_type const& a) {
    { grp.identity() } -> std::convertible_to<typename G::element_type>;
    { grp.multiply(a, a) } -> std::convertible_to<typename G::element_type>;
    { grp.inverse(a) } -> std::convertible_to<typename G::element_type>;
  };

  //! a^k by repeated squaring.
  template <GroupLike G>
  [[nodiscard]] typename G::element_type group_power(G const&                       grp,
                                                     typename G::element_type const& a,
                                                     std::int64_t                   k) {
    using E = typename G::element_type;
    E             base = k < 0 ? grp.inverse(a) : a;
    std::uint64_t n    = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                               : static_cast<std::uint64_t>(k);
    E             result = grp.identity();
    while (n != 0) {
      if (n & 1U) {
        result = grp.multiply(result, base);
      }
      n >>= 1U;
      if (n != 0) {
        base = grp.multiply(base, base);
      }
    }
    return result;
  }

  //! Substitutes images[g] for each generator g and multiplies left to right.
  template <GroupLike G>
  [[nodiscard]] typename G::element_type evaluate(
      Word const& u, std::span<const typename G::element_type> images, G const& grp) {
    auto result = grp.identity();
    for (auto const& s : u.syllables()) {
      if (s.generator >= images.size()) {
        throw Error(ErrorKind::missing_image,
                    "no image for generator " + std::to_string(s.generator));
      }
      auto const& img = images[s.generator];
      result          = grp.multiply(result, s.exponent == 1 ? img
                                                    : group_power(grp, img, s.exponent));
    }
    return result;
  }

  template <GroupLike G>
  [[nodiscard]] typename G::element_type evaluate(
      Word const& u, std::map<GeneratorId, typename G::element_type> const& images,
      G const& grp) {
    auto result = grp.identity();
    for (auto const& s : u.syllables()) {
      auto it = images.find(s.generator);
      if (it == images.end()) {
        throw Error(ErrorKind::missing_image,
                    "no image for generator " + std::to_string(s.generator));
      }
      result = grp.multiply(result, group_power(grp, it->second, s.exponent));
    }
    return result;
  }

}  // namespace foxhom

#endif  // FOXHOM_WORD_HPP_
