// foxhom - knot group invariants via Fox calculus and homomorphism counting
//
// Seeded generators for random words, presentations and polynomials.

#ifndef FOXHOM_RANDOM_HPP_
#define FOXHOM_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "finite_group.hpp"
#include "laurent.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace foxhom::random {

  using Engine = std::mt19937_64;

  inline std::int64_t uniform(Engine& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }

  //! Unreduced syllable list; exponents in [-max_exp, max_exp], zero allowed.
  inline std::vector<Syllable> raw_syllables(Engine& rng, GeneratorId generators,
                                             std::size_t max_len, std::int64_t max_exp) {
    std::vector<Syllable> out(static_cast<std::size_t>(uniform(rng, 0, std::int64_t(max_len))));
    for (auto& s : out) {
      s.generator = static_cast<GeneratorId>(uniform(rng, 0, generators - 1));
      s.exponent  = uniform(rng, -max_exp, max_exp);
    }
    return out;
  }

  inline Word word(Engine& rng, GeneratorId generators, std::size_t max_len = 8,
                   std::int64_t max_exp = 2) {
    return Word(raw_syllables(rng, generators, max_len, max_exp));
  }

  //! Generators g0, g1, ... and `relators` random relator words.
  inline Presentation presentation(Engine& rng, GeneratorId generators, std::size_t relators,
                                   std::size_t max_len = 8, std::int64_t max_exp = 2) {
    std::vector<std::string> names;
    for (GeneratorId i = 0; i < generators; ++i) {
      names.push_back("g" + std::to_string(i));
    }
    std::vector<Word> rels;
    for (std::size_t i = 0; i < relators; ++i) {
      rels.push_back(word(rng, generators, max_len, max_exp));
    }
    return Presentation(std::move(names), std::move(rels));
  }

  inline Permutation element(Engine& rng, FiniteGroup const& grp) {
    return grp.element(
        static_cast<FiniteGroup::index_type>(uniform(rng, 0, std::int64_t(grp.order()) - 1)));
  }

  inline LaurentPoly laurent(Engine& rng, std::size_t max_terms = 4, std::int64_t max_coef = 3,
                             std::int64_t max_exp = 4) {
    LaurentPoly p;
    auto        n = uniform(rng, 0, std::int64_t(max_terms));
    for (std::int64_t i = 0; i < n; ++i) {
      p.add_term(uniform(rng, -max_coef, max_coef), uniform(rng, -max_exp, max_exp));
    }
    return p;
  }

}  // namespace foxhom::random

#endif  // FOXHOM_RANDOM_HPP_
