// foxhom - knot group invariants via Fox calculus and homomorphism counting
//
// Finite permutation groups held as an explicit element list.

#ifndef FOXHOM_FINITE_GROUP_HPP_
#define FOXHOM_FINITE_GROUP_HPP_

#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace foxhom {

  //! Groups up to this order get a precomputed multiplication table.
  inline constexpr std::size_t cayley_table_limit = 2048;

  //! Default cap on the order of groups built by build().
  inline constexpr std::size_t default_group_cap = 1'000'000;

  struct GroupSpec {
    enum class Kind { symmetric, alternating, generated };

    Kind                     kind   = Kind::symmetric;
    std::size_t              degree = 1;
    std::vector<Permutation> generators;

    [[nodiscard]] static GroupSpec symmetric(std::size_t n) {
      return {Kind::symmetric, n, {}};
    }
    [[nodiscard]] static GroupSpec alternating(std::size_t n) {
      return {Kind::alternating, n, {}};
    }
    [[nodiscard]] static GroupSpec generated(std::size_t degree, std::vector<Permutation> gens) {
      return {Kind::generated, degree, std::move(gens)};
    }
  };

  //! Accepts `S4`, `A5` and `gen:5:[(1,2,3),(1,2)]`.
  [[nodiscard]] inline GroupSpec parse_group_spec(std::string_view text) {
    auto fail = [&](std::size_t col, std::string const& msg) {
      throw SyntaxError(1, col + 1, msg + " in group spec `" + std::string(text) + "`");
    };
    auto parse_count = [&](std::string_view digits, std::size_t col) -> std::size_t {
      if (digits.empty() || digits.size() > 6) {
        fail(col, "expected a positive degree");
      }
      std::size_t n = 0;
      for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          fail(col, "expected a positive degree");
        }
        n = n * 10 + static_cast<std::size_t>(c - '0');
      }
      if (n == 0) {
        fail(col, "degree must be positive");
      }
      return n;
    };
    if (text.size() >= 2 && (text[0] == 'S' || text[0] == 'A')) {
      auto n = parse_count(text.substr(1), 1);
      return text[0] == 'S' ? GroupSpec::symmetric(n) : GroupSpec::alternating(n);
    }
    if (text.substr(0, 4) != "gen:") {
      fail(0, "expected `Sn`, `An` or `gen:<degree>:[...]`");
    }
    auto colon = text.find(':', 4);
    if (colon == std::string_view::npos) {
      fail(4, "expected `:` after degree");
    }
    auto degree = parse_count(text.substr(4, colon - 4), 4);
    auto rest   = text.substr(colon + 1);
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') {
      fail(colon + 1, "expected `[...]` generator list");
    }
    rest = rest.substr(1, rest.size() - 2);
    std::vector<Permutation> gens;
    // Generators are separated by commas outside parentheses.
    std::size_t depth = 0, start = 0;
    for (std::size_t i = 0; i <= rest.size(); ++i) {
      if (i == rest.size() || (rest[i] == ',' && depth == 0)) {
        auto piece = rest.substr(start, i - start);
        if (piece.find_first_not_of(" \t") != std::string_view::npos) {
          gens.push_back(parse_permutation(piece, degree));
        }
        start = i + 1;
      } else if (rest[i] == '(') {
        ++depth;
      } else if (rest[i] == ')') {
        if (depth == 0) {
          fail(colon + 2 + i, "unbalanced `)`");
        }
        --depth;
      }
    }
    return GroupSpec::generated(degree, std::move(gens));
  }

  [[nodiscard]] inline std::string to_string(GroupSpec const& spec) {
    switch (spec.kind) {
      case GroupSpec::Kind::symmetric: return "S" + std::to_string(spec.degree);
      case GroupSpec::Kind::alternating: return "A" + std::to_string(spec.degree);
      case GroupSpec::Kind::generated: break;
    }
    std::string out = "gen:" + std::to_string(spec.degree) + ":[";
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
      out += (i == 0 ? "" : ",") + to_string(spec.generators[i]);
    }
    return out + "]";
  }

  class FiniteGroup {
   public:
    using element_type = Permutation;
    using index_type   = std::uint32_t;

    //! Element-index arithmetic, backed by the multiplication table when the
    //! group is small enough. Satisfies GroupLike.
    class IndexView {
     public:
      using element_type = index_type;

      explicit IndexView(FiniteGroup const& g) : _group(&g) {}

      [[nodiscard]] index_type identity() const noexcept { return 0; }
      [[nodiscard]] index_type multiply(index_type a, index_type b) const {
        return _group->multiply_index(a, b);
      }
      [[nodiscard]] index_type inverse(index_type a) const {
        return _group->inverse_index(a);
      }

     private:
      FiniteGroup const* _group;
    };

    //! Closes `generators` under multiplication. Throws TooLarge once more
    //! than `cap` elements are found.
    FiniteGroup(std::size_t degree, std::vector<Permutation> generators,
                std::size_t cap = default_group_cap)
        : _degree(degree), _generators(std::move(generators)) {
      if (degree == 0) {
        throw Error(ErrorKind::invalid_parameter, "degree must be positive");
      }
      for (auto const& g : _generators) {
        if (g.degree() != degree) {
          throw Error(ErrorKind::degree_mismatch,
                      "generator " + to_string(g) + " has degree "
                          + std::to_string(g.degree()) + ", expected "
                          + std::to_string(degree));
        }
      }
      add(Permutation(degree), cap);
      for (std::size_t next = 0; next < _elements.size(); ++next) {
        for (auto const& g : _generators) {
          auto e = compose(_elements[next], g);
          if (!_lookup.contains(e)) {
            add(std::move(e), cap);
          }
        }
      }
      _inverses.resize(_elements.size());
      for (std::size_t i = 0; i < _elements.size(); ++i) {
        _inverses[i] = _lookup.at(foxhom::inverse(_elements[i]));
      }
      if (_elements.size() <= cayley_table_limit) {
        auto n = _elements.size();
        _table.resize(n * n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            _table[i * n + j] = _lookup.at(compose(_elements[i], _elements[j]));
          }
        }
      }
    }

    [[nodiscard]] std::size_t degree() const noexcept { return _degree; }
    [[nodiscard]] std::size_t order() const noexcept { return _elements.size(); }
    [[nodiscard]] std::span<const Permutation> elements() const noexcept {
      return _elements;
    }
    [[nodiscard]] std::span<const Permutation> generators() const noexcept {
      return _generators;
    }
    [[nodiscard]] Permutation const& element(index_type i) const { return _elements.at(i); }

    [[nodiscard]] std::optional<index_type> index_of(Permutation const& p) const {
      auto it = _lookup.find(p);
      if (it == _lookup.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    [[nodiscard]] bool contains(Permutation const& p) const { return _lookup.contains(p); }

    //! Index of p, or NotAMember.
    [[nodiscard]] index_type require_member(Permutation const& p) const {
      if (p.degree() != _degree) {
        throw Error(ErrorKind::degree_mismatch,
                    to_string(p) + " has degree " + std::to_string(p.degree())
                        + ", group has degree " + std::to_string(_degree));
      }
      auto i = index_of(p);
      if (!i) {
        throw Error(ErrorKind::not_a_member, to_string(p) + " is not in the group");
      }
      return *i;
    }

    // GroupLike over Permutation values.
    [[nodiscard]] Permutation identity() const { return Permutation(_degree); }
    [[nodiscard]] Permutation multiply(Permutation const& a, Permutation const& b) const {
      if (a.degree() != _degree || b.degree() != _degree) {
        throw Error(ErrorKind::degree_mismatch, "operand degree differs from group degree");
      }
      return compose(a, b);
    }
    [[nodiscard]] Permutation inverse(Permutation const& a) const { return foxhom::inverse(a); }

    [[nodiscard]] index_type multiply_index(index_type a, index_type b) const {
      if (!_table.empty()) {
        return _table[static_cast<std::size_t>(a) * _elements.size() + b];
      }
      return _lookup.at(compose(_elements[a], _elements[b]));
    }
    [[nodiscard]] index_type inverse_index(index_type a) const { return _inverses[a]; }

    [[nodiscard]] IndexView indices() const { return IndexView(*this); }

   private:
    void add(Permutation p, std::size_t cap) {
      if (_elements.size() >= cap) {
        throw Error(ErrorKind::too_large,
                    "group order exceeds cap of " + std::to_string(cap));
      }
      _lookup.emplace(p, static_cast<index_type>(_elements.size()));
      _elements.push_back(std::move(p));
    }

    std::size_t                                                  _degree;
    std::vector<Permutation>                                     _generators;
    std::vector<Permutation>                                     _elements;
    std::unordered_map<Permutation, index_type, PermutationHash> _lookup;
    std::vector<index_type>                                      _inverses;
    std::vector<index_type>                                      _table;
  };

  namespace detail {
    inline Permutation cycle_of(std::size_t degree, std::vector<std::size_t> const& pts) {
      std::vector<Permutation::point_type> img(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        img[i] = static_cast<Permutation::point_type>(i);
      }
      for (std::size_t i = 0; i < pts.size(); ++i) {
        img[pts[i]] = static_cast<Permutation::point_type>(pts[(i + 1) % pts.size()]);
      }
      return Permutation(std::move(img));
    }

    //! n! (or n!/2), or cap + 1 when that would exceed cap.
    inline std::size_t projected_order(std::size_t n, bool alternating, std::size_t cap) {
      std::size_t r = 1;
      for (std::size_t k = 2; k <= n; ++k) {
        if (__builtin_mul_overflow(r, k, &r)) {
          return cap + 1;
        }
      }
      if (alternating && n >= 2) {
        r /= 2;
      }
      return r > cap ? cap + 1 : r;
    }
  }  // namespace detail

  [[nodiscard]] inline FiniteGroup build(GroupSpec const& spec,
                                         std::size_t      cap = default_group_cap) {
    auto const n = spec.degree;
    if (n == 0) {
      throw Error(ErrorKind::invalid_parameter, "degree must be positive");
    }
    std::vector<Permutation> gens;
    switch (spec.kind) {
      case GroupSpec::Kind::symmetric:
      case GroupSpec::Kind::alternating: {
        bool alt = spec.kind == GroupSpec::Kind::alternating;
        if (detail::projected_order(n, alt, cap) > cap) {
          throw Error(ErrorKind::too_large, to_string(spec) + " exceeds the order cap of "
                                                + std::to_string(cap));
        }
        if (!alt && n >= 2) {
          gens.push_back(detail::cycle_of(n, {0, 1}));
          std::vector<std::size_t> all(n);
          std::iota(all.begin(), all.end(), std::size_t{0});
          gens.push_back(detail::cycle_of(n, all));
        } else if (alt) {
          // 3-cycles (1,2,k) generate A_n.
          for (std::size_t k = 2; k < n; ++k) {
            gens.push_back(detail::cycle_of(n, {0, 1, k}));
          }
        }
        break;
      }
      case GroupSpec::Kind::generated: gens = spec.generators; break;
    }
    return FiniteGroup(n, std::move(gens), cap);
  }

  //! Some k in G with k*g*k^-1 = h, found by exhaustive search over G.
  //! Throws NotAMember unless g and h both lie in G.
  [[nodiscard]] inline std::optional<Permutation> conjugating_element(Permutation const& g,
                                                                      Permutation const& h,
                                                                      FiniteGroup const& grp) {
    auto gi = grp.require_member(g);
    auto hi = grp.require_member(h);
    for (FiniteGroup::index_type k = 0; k < grp.order(); ++k) {
      auto kg = grp.multiply_index(k, gi);
      if (grp.multiply_index(kg, grp.inverse_index(k)) == hi) {
        return grp.element(k);
      }
    }
    return std::nullopt;
  }

  [[nodiscard]] inline bool are_conjugate(Permutation const& g, Permutation const& h,
                                          FiniteGroup const& grp) {
    return conjugating_element(g, h, grp).has_value();
  }

}  // namespace foxhom

#endif  // FOXHOM_FINITE_GROUP_HPP_
