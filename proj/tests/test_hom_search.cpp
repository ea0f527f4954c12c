#include <gtest/gtest.h>

#include <foxhom/foxhom.hpp>
#include <foxhom/random.hpp>

#include "oracles.hpp"

using namespace foxhom;

namespace {

  Permutation perm(std::string_view s, std::size_t n) { return parse_permutation(s, n); }
  Permutation sigma() { return perm("(1,5,4,3,2)", 5); }

  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::syntax;
  }

  oracle::HomQuery query(Presentation const& p, Constraint const& c) {
    oracle::HomQuery q;
    q.generators = static_cast<int>(p.generator_count());
    for (auto const& r : p.relators()) {
      q.relators.push_back(oracle::expand(r));
    }
    for (auto const& [g, v] : c.pins) {
      q.pins[g] = oracle::from(v);
    }
    for (auto const& [w, v] : c.word_targets) {
      q.targets.emplace_back(oracle::expand(w), oracle::from(v));
    }
    return q;
  }

  std::vector<oracle::Perm> oracle_elements(FiniteGroup const& g) {
    std::vector<oracle::Perm> out;
    for (auto const& e : g.elements()) {
      out.push_back(oracle::from(e));
    }
    return out;
  }

  SearchOptions mode(SearchMode m, unsigned jobs = 1, bool materialize = false) {
    SearchOptions o;
    o.mode        = m;
    o.jobs        = jobs;
    o.materialize = materialize;
    return o;
  }

  Assignment explicit_phi() {
    return {perm("(1,5,4,3,2)", 5), perm("(1,2,4,5,3)", 5), perm("(2,4,5)", 5)};
  }

}  // namespace

TEST(IsHomomorphism, ExplicitAssignment) {
  auto a5 = build(GroupSpec::alternating(5));
  for (std::int64_t m : {1, 61, 121}) {
    EXPECT_TRUE(is_homomorphism(family_Fm(m), a5, explicit_phi())) << m;
  }
  // m = 2 is not congruent to 1 modulo the order of yx.
  EXPECT_FALSE(is_homomorphism(family_Fm(2), a5, explicit_phi()));
}

TEST(IsHomomorphism, TrivialAndFailing) {
  auto a5 = build(GroupSpec::alternating(5));
  EXPECT_TRUE(is_homomorphism(family_Fm(7), a5, Assignment(3, a5.identity())));
  auto a4 = build(GroupSpec::alternating(4));
  EXPECT_FALSE(is_homomorphism(parse_presentation("< x | x^2 >"), a4,
                               Assignment{perm("(1,2,3)", 4)}));
}

TEST(IsHomomorphism, Errors) {
  auto a5 = build(GroupSpec::alternating(5));
  auto f1 = family_Fm(1);
  EXPECT_EQ(kind_of([&] { (void) is_homomorphism(f1, a5, Assignment(2, a5.identity())); }),
            ErrorKind::missing_image);
  EXPECT_EQ(kind_of([&] { (void) is_homomorphism(f1, a5, Assignment(3, Permutation(4))); }),
            ErrorKind::degree_mismatch);
  EXPECT_EQ(kind_of([&] { (void) is_homomorphism(f1, a5, Assignment(3, perm("(1,2)", 5))); }),
            ErrorKind::not_a_member);
}

TEST(CountHoms, ReferenceCounts) {
  auto a5 = build(GroupSpec::alternating(5));
  auto f1 = family_Fm(1);
  for (auto m : {SearchMode::naive, SearchMode::backtrack}) {
    Constraint cx;
    cx.pins.emplace(0, sigma());
    EXPECT_EQ(count_homs(f1, a5, cx, mode(m)).count, 6U);
    Constraint ca;
    ca.pins.emplace(2, sigma());
    EXPECT_EQ(count_homs(f1, a5, ca, mode(m)).count, 1U);
  }
}

TEST(CountHoms, SmallExamples) {
  auto a5 = build(GroupSpec::alternating(5));
  Constraint c;
  c.pins.emplace(0, sigma());
  EXPECT_EQ(count_homs(parse_presentation("< x | >"), a5, c).count, 1U);
  auto s3 = build(GroupSpec::symmetric(3));
  auto z2 = parse_presentation("< x | x^2 >");
  EXPECT_EQ(count_homs(z2, s3).count, 4U);
  EXPECT_EQ(count_homs(z2, s3, {}, mode(SearchMode::naive)).count, 4U);
  EXPECT_EQ(oracle::count_homs(query(z2, {}), oracle::symmetric(3), 3), 4U);
  // Free group of rank 2 into S3: every pair.
  EXPECT_EQ(count_homs(parse_presentation("< x, y | >"), s3).count, 36U);
  // Trivial relator.
  EXPECT_EQ(count_homs(parse_presentation("< x | 1 >"), s3).count, 6U);
}

TEST(CountHoms, MaterializedAssignmentsAreHomomorphisms) {
  auto a5 = build(GroupSpec::alternating(5));
  auto f1 = family_Fm(1);
  for (auto m : {SearchMode::naive, SearchMode::backtrack}) {
    Constraint c;
    c.pins.emplace(0, sigma());
    auto r = count_homs(f1, a5, c, mode(m, 1, true));
    ASSERT_TRUE(r.assignments);
    EXPECT_EQ(r.assignments->size(), r.count);
    for (auto const& phi : *r.assignments) {
      EXPECT_TRUE(is_homomorphism(f1, a5, phi));
      EXPECT_EQ(phi[0], sigma());
    }
  }
  EXPECT_FALSE(count_homs(f1, a5).assignments);
}

TEST(CountHoms, ConstraintValidation) {
  auto a5 = build(GroupSpec::alternating(5));
  auto f1 = family_Fm(1);
  Constraint bad_gen;
  bad_gen.pins.emplace(7, sigma());
  EXPECT_EQ(kind_of([&] { (void) count_homs(f1, a5, bad_gen); }), ErrorKind::unknown_generator);
  Constraint odd;
  odd.pins.emplace(0, perm("(1,2)", 5));
  EXPECT_EQ(kind_of([&] { (void) count_homs(f1, a5, odd); }), ErrorKind::not_a_member);
  Constraint wrong_degree;
  wrong_degree.pins.emplace(0, Permutation(4));
  EXPECT_EQ(kind_of([&] { (void) count_homs(f1, a5, wrong_degree); }),
            ErrorKind::degree_mismatch);
}

TEST(CountHoms, NaiveTooLargeAndBudget) {
  auto a5 = build(GroupSpec::alternating(5));
  auto f1 = family_Fm(1);
  SearchOptions naive = mode(SearchMode::naive);
  naive.node_budget   = 1000;  // 60^3 > 1000
  EXPECT_EQ(kind_of([&] { (void) count_homs(f1, a5, {}, naive); }), ErrorKind::too_large);
  for (unsigned jobs : {1U, 3U}) {
    SearchOptions bt = mode(SearchMode::backtrack, jobs);
    bt.node_budget   = 500;
    EXPECT_EQ(kind_of([&] { (void) count_homs(f1, a5, {}, bt); }), ErrorKind::budget_exceeded);
  }
}

TEST(MeridianInvariant, FamilyCounts) {
  auto a5 = build(GroupSpec::alternating(5));
  for (std::int64_t m : {1, 61}) {
    auto f = family_Fm(m);
    EXPECT_EQ(meridian_invariant(f, "meridian_B", a5, sigma()), 6U) << m;
    EXPECT_EQ(meridian_invariant(f, "meridian_G", a5, sigma()), 1U) << m;
  }
  EXPECT_EQ(meridian_invariant(parse_presentation("< x | >\nmeridian m: x\n"), "m", a5, a5.identity()),
            1U);
  EXPECT_EQ(kind_of([&] { (void) meridian_invariant(family_Fm(1), "nope", a5, sigma()); }),
            ErrorKind::unknown_marker);
}

TEST(MeridianInvariant, NonGeneratorMarkerIsPostFiltered) {
  auto a5 = build(GroupSpec::alternating(5));
  auto p  = parse_presentation(
      "< x,y,a | y*x*y*x^-1*y^-1*x^-1, x^-1*a*x*a^-1*x^-1*y*a*y^-1 >\n"
      "meridian conj: y^-1*x*y\n"
      "meridian sq: x^2\n");
  auto f1 = family_Fm(1);
  // y^-1 x y is conjugate to x, so the count matches the x pin.
  EXPECT_EQ(meridian_invariant(p, "conj", a5, sigma()), 6U);
  auto c = marker_constraint(p, "sq", sigma());
  EXPECT_TRUE(c.pins.empty());
  ASSERT_EQ(c.word_targets.size(), 1U);
  auto got = count_homs(p, a5, c).count;
  EXPECT_EQ(got, oracle::count_homs(query(p, c), oracle_elements(a5), 5));
  EXPECT_EQ(got, count_homs(p, a5, c, mode(SearchMode::naive)).count);
}

TEST(ImagesConjugate, Examples) {
  auto a5  = build(GroupSpec::alternating(5));
  auto f1  = family_Fm(1);
  auto phi = explicit_phi();
  EXPECT_FALSE(images_conjugate(f1, a5, phi, Word::letter(0), Word::letter(2)));
  EXPECT_TRUE(images_conjugate(f1, a5, phi, Word::letter(0), Word::letter(0)));
  EXPECT_TRUE(images_conjugate(f1, a5, phi, Word::letter(0), Word::letter(1)));
  EXPECT_TRUE(images_conjugate(f1, a5, Assignment(3, a5.identity()), Word::letter(0),
                               Word::letter(2)));
  EXPECT_TRUE(are_conjugate(sigma(), inverse(sigma()), a5));
  // Sending every generator to sigma is a homomorphism since all exponent sums
  // vanish; sending only x to sigma is not.
  EXPECT_TRUE(images_conjugate(f1, a5, Assignment(3, sigma()), Word::letter(0), Word::letter(2)));
  Assignment broken(3, a5.identity());
  broken[0] = sigma();
  EXPECT_EQ(kind_of([&] {
              (void) images_conjugate(f1, a5, broken, Word::letter(0), Word::letter(2));
            }),
            ErrorKind::invalid_parameter);
}

TEST(Properties, NaiveBacktrackAndOracleAgreeOnRandomPresentations) {
  random::Engine rng(71);
  auto           s4 = build(GroupSpec::symmetric(4));
  auto           oe = oracle_elements(s4);
  for (int i = 0; i < 60; ++i) {
    auto       p = random::presentation(rng, 2, 2, 6, 3);
    Constraint c;
    if (i % 3 != 0) {
      c.pins.emplace(static_cast<GeneratorId>(random::uniform(rng, 0, 1)),
                     random::element(rng, s4));
    }
    auto naive = count_homs(p, s4, c, mode(SearchMode::naive)).count;
    auto bt    = count_homs(p, s4, c, mode(SearchMode::backtrack)).count;
    auto orc   = oracle::count_homs(query(p, c), oe, 4);
    ASSERT_EQ(naive, orc) << render(p);
    ASSERT_EQ(bt, orc) << render(p);
  }
}

TEST(Properties, ConjugationInvariance) {
  random::Engine rng(72);
  auto           a5 = build(GroupSpec::alternating(5));
  auto           f1 = family_Fm(1);
  for (int i = 0; i < 8; ++i) {
    auto g     = random::word(rng, 3, 4, 2);
    auto tau   = random::element(rng, a5);
    auto h     = Word::letter(i % 2 == 0 ? 0 : 2);
    auto s     = random::element(rng, a5);
    Constraint base, moved;
    base.word_targets.emplace_back(h, s);
    moved.word_targets.emplace_back(conjugate(h, g), compose(compose(tau, s), inverse(tau)));
    ASSERT_EQ(count_homs(f1, a5, base).count, count_homs(f1, a5, moved).count);
  }

  auto s4 = build(GroupSpec::symmetric(4));
  for (int i = 0; i < 40; ++i) {
    auto p   = random::presentation(rng, 2, 2, 6, 3);
    auto g   = random::word(rng, 2, 4, 2);
    auto tau = random::element(rng, s4);
    auto s   = random::element(rng, s4);
    auto h   = Word::letter(static_cast<GeneratorId>(i % 2));
    Constraint base, moved;
    base.pins.emplace(h.syllables()[0].generator, s);
    moved.word_targets.emplace_back(conjugate(h, g), compose(compose(tau, s), inverse(tau)));
    ASSERT_EQ(count_homs(p, s4, base).count, count_homs(p, s4, moved).count) << render(p);
  }
}

TEST(Properties, PartitionIdentity) {
  for (auto spec : {GroupSpec::alternating(4), GroupSpec::symmetric(3)}) {
    auto grp   = build(spec);
    auto f1    = family_Fm(1);
    auto total = count_homs(f1, grp).count;
    for (auto const* marker : {"meridian_B", "meridian_G"}) {
      std::uint64_t sum = 0;
      for (auto const& s : grp.elements()) {
        sum += meridian_invariant(f1, marker, grp, s);
      }
      EXPECT_EQ(sum, total) << marker;
    }
  }
}

TEST(Properties, DeterministicAcrossJobs) {
  auto a5 = build(GroupSpec::alternating(5));
  auto f2 = family_Fm(2);
  for (bool pinned : {false, true}) {
    Constraint c;
    if (pinned) {
      c.pins.emplace(0, sigma());
    }
    auto one = count_homs(f2, a5, c, mode(SearchMode::backtrack, 1, true));
    for (unsigned jobs : {2U, 4U, 7U}) {
      auto many = count_homs(f2, a5, c, mode(SearchMode::backtrack, jobs, true));
      EXPECT_EQ(many.count, one.count);
      EXPECT_EQ(many.stats, one.stats);
      EXPECT_EQ(many.assignments, one.assignments);
    }
  }
}

TEST(Properties, PeriodicityInM) {
  for (auto spec : {GroupSpec::symmetric(3), GroupSpec::alternating(4)}) {
    auto grp   = build(spec);
    auto order = static_cast<std::int64_t>(grp.order());
    for (std::int64_t m = 1; m <= 2; ++m) {
      for (GeneratorId g = 0; g < 3; ++g) {
        for (auto const& s : grp.elements()) {
          Constraint c;
          c.pins.emplace(g, s);
          ASSERT_EQ(count_homs(family_Fm(m), grp, c).count,
                    count_homs(family_Fm(m + order), grp, c).count);
        }
      }
    }
  }
}
