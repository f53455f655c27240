#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "knotinv/invariants.hpp"
#include "knotinv/poly_text.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace knotinv;

namespace {

OrientedDiagram od_of(const char* pd) { return orient(parse_pd(pd)); }

int oracle_signature(const OrientedDiagram& od) { return oracle::signature(gen::tuples(od.diagram), od.incoming); }

LaurentPoly oracle_bracket(const Diagram& d) {
  LaurentPoly out(Variable::A);
  for (const auto& [e, c] : oracle::bracket(gen::tuples(d))) out.add_term(e, c);
  return out;
}

std::int64_t coefficient_at(const LaurentPoly& p, int e) {
  for (const auto& [x, c] : p.terms())
    if (x == e) return c;
  return 0;
}

}  // namespace

TEST(Traczyk, Examples) {
  // The all-positive trefoil is the mirror of the fixture.
  const OrientedDiagram right = mirror(od_of(fixtures::kTrefoil));
  EXPECT_EQ(s_A(right.diagram), 2);
  EXPECT_EQ(crossing_signs(right).c_plus, 3);
  EXPECT_EQ(traczyk_signature(right), -2);
  EXPECT_EQ(traczyk_signature(od_of(fixtures::kTrefoil)), 2);
  EXPECT_EQ(traczyk_signature(od_of(fixtures::kFigureEight)), 0);
  EXPECT_EQ(traczyk_signature(od_of(fixtures::kHopf)), oracle_signature(od_of(fixtures::kHopf)));
}

TEST(Traczyk, MatchesGoeritzOracle) {
  for (const char* pd : {fixtures::kTrefoil, fixtures::kFigureEight, fixtures::kHopf}) {
    const OrientedDiagram od = od_of(pd);
    EXPECT_EQ(traczyk_signature(od), oracle_signature(od)) << pd;
    EXPECT_EQ(traczyk_signature(mirror(od)), oracle_signature(mirror(od))) << pd;
  }
}

TEST(Traczyk, KinksAreRemoved) {
  const OrientedDiagram kinked = od_of(fixtures::kAlternatingKinkedTrefoil);
  EXPECT_FALSE(is_reduced(kinked.diagram, validate(kinked.diagram)));
  EXPECT_EQ(remove_kinks(kinked).diagram.crossing_count(), 3);
  EXPECT_EQ(traczyk_signature(kinked), traczyk_signature(od_of(fixtures::kTrefoil)));
  EXPECT_EQ(traczyk_signature(kinked), oracle_signature(kinked));
}

TEST(Traczyk, RejectsNonAlternating) {
  EXPECT_THROW(traczyk_signature(od_of(fixtures::kAlmostAlternatingTrefoil)), PreconditionError);
  EXPECT_THROW(traczyk_signature(od_of(fixtures::k12n888Mirror)), PreconditionError);
}

TEST(Traczyk, ReportChecksModFour) {
  const SignatureReport r = traczyk_report(od_of(fixtures::kFigureEight), 5);
  EXPECT_EQ(r.method, SignatureMethod::traczyk);
  EXPECT_EQ(r.exact, 0);
  EXPECT_EQ(r.lower, 0);
  EXPECT_EQ(r.upper, 0);
  EXPECT_TRUE(r.mod4_ok);
}

TEST(Bounds, TwelveCrossingExample) {
  const SignatureReport r = signature_bounds(od_of(fixtures::k12n888Mirror));
  EXPECT_EQ(r.lower, 8);
  EXPECT_EQ(r.upper, 10);
  EXPECT_EQ(r.upper - r.lower, 2 * turaev_genus(parse_pd(fixtures::k12n888Mirror)));
  EXPECT_FALSE(r.exact.has_value());
}

TEST(Bounds, ReportForKnotsChecksRange) {
  const SignatureReport r = bounds_report(od_of(fixtures::k12n888Mirror), 45);
  EXPECT_EQ(r.method, SignatureMethod::bounds);
  EXPECT_TRUE(r.mod4_ok);
}

TEST(GenusOne, TwelveCrossingExample) {
  const OrientedDiagram od = od_of(fixtures::k12n888Mirror);
  EXPECT_EQ(s_A(od.diagram), 9);
  EXPECT_EQ(crossing_signs(od).c_plus, 0);
  const SignatureReport r = genus_one_knot_signature(od);
  EXPECT_EQ(r.det, 45);
  ASSERT_TRUE(r.exact.has_value());
  EXPECT_EQ(*r.exact, 8);
  EXPECT_EQ(*r.exact, oracle_signature(od));
  EXPECT_EQ(r.method, SignatureMethod::genus_one);
}

TEST(GenusOne, PicksTheCandidateAllowedModFour) {
  // m = 5 with det = 1 mod 4 leaves 4, not 6.
  EXPECT_TRUE(giller_mod4_check(4, 5));
  EXPECT_FALSE(giller_mod4_check(6, 5));
}

TEST(GenusOne, AlmostAlternatingTrefoil) {
  const OrientedDiagram od = od_of(fixtures::kAlmostAlternatingTrefoil);
  const SignatureReport r = genus_one_knot_signature(od);
  ASSERT_TRUE(r.exact.has_value());
  EXPECT_EQ(*r.exact, oracle_signature(od));
  EXPECT_EQ(*r.exact, 0);
  EXPECT_EQ(r.det, 1);
}

TEST(GenusOne, Preconditions) {
  EXPECT_THROW(genus_one_knot_signature(od_of(fixtures::kHopf)), PreconditionError);
  EXPECT_THROW(genus_one_knot_signature(od_of(fixtures::kTrefoil)), PreconditionError);
}

TEST(TangleSum, TwelveCrossingExample) {
  const OrientedDiagram od = od_of(fixtures::k12n888Mirror);
  const Recognition rec = recognize_genus_one(od.diagram, &od);
  ASSERT_TRUE(rec.recognized()) << rec.reason;
  const SignatureReport r = tangle_sum_signature(*rec.structure, od);
  EXPECT_EQ(r.candidates, (std::vector<int>{8, 10}));
  ASSERT_TRUE(r.exact.has_value());
  EXPECT_EQ(*r.exact, 8);
  EXPECT_EQ(r.method, SignatureMethod::tangle_sum);
}

TEST(TangleSum, MirrorTanglesGivePlusOrMinusOne) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    std::mt19937_64 a(seed), b(seed);
    const int n = 2 + static_cast<int>(seed % 4);
    const Tangle t = gen::random_alternating_tangle(a, n, Twist::backslash_over);
    const Tangle m = gen::random_alternating_tangle(b, n, Twist::slash_over);
    const Diagram d = closure(add_east(t, m), Closure::numerator);
    const OrientedDiagram od = orient(d);
    const Recognition rec = recognize_genus_one(d, &od);
    if (!rec.recognized()) continue;
    bool closures_are_knots = true;
    for (const Tangle& x : rec.structure->tangles)
      for (Closure c : {Closure::numerator, Closure::denominator})
        closures_are_knots = closures_are_knots && orient(closure(x, c)).component_count == 1;
    if (!closures_are_knots) continue;
    SignatureReport r;
    try {
      r = tangle_sum_signature(*rec.structure, od);
    } catch (const PreconditionError&) {
      continue;
    }
    ++checked;
    EXPECT_EQ(r.candidates, (std::vector<int>{-1, 1})) << to_pd_string(d);
  }
  EXPECT_GT(checked, 0);
}

TEST(TangleSum, LinkKeepsBothCandidates) {
  const Diagram d = closure(add_east(crossing_tangle(Twist::backslash_over), crossing_tangle(Twist::slash_over)),
                            Closure::numerator);
  const OrientedDiagram od = orient(d);
  ASSERT_EQ(od.component_count, 2);
  const Recognition rec = recognize_genus_one(d, &od);
  ASSERT_TRUE(rec.recognized()) << rec.reason;
  const SignatureReport r = tangle_sum_signature(*rec.structure, od);
  EXPECT_FALSE(r.exact.has_value());
  EXPECT_EQ(r.candidates.size(), 2U);
  EXPECT_EQ(r.candidates[1] - r.candidates[0], 2);
}

TEST(Conway, TwelveCrossingExample) {
  const GenusOneStructure gs = *recognize_genus_one(parse_pd(fixtures::k12n888Mirror)).structure;
  EXPECT_EQ(conway_determinant(gs), 45);
}

TEST(Conway, RingOfSingleCrossingsIsSplit) {
  const Diagram d = closure(add_east(crossing_tangle(Twist::backslash_over), crossing_tangle(Twist::slash_over)),
                            Closure::numerator);
  const GenusOneStructure gs = *recognize_genus_one(d).structure;
  EXPECT_EQ(conway_determinant(gs), 0);
  EXPECT_EQ(determinant(orient(d)), 0);
}

TEST(Conway, MatchesDeterminantOnGeneratedRings) {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (int n = 0; n < 60; ++n) {
    const Diagram d = gen::random_ring(rng, 1 + n % 3, 11);
    const Recognition rec = recognize_genus_one(d);
    if (!rec.recognized()) continue;
    ++checked;
    EXPECT_EQ(conway_determinant(*rec.structure), goeritz_determinant(d, validate(d))) << to_pd_string(d);
  }
  EXPECT_GT(checked, 30);
}

TEST(AlternatingExtremes, RightHandedTrefoil) {
  const ExtremeTerms t = dl_coefficients(mirror(parse_pd(fixtures::kTrefoil)));
  EXPECT_EQ(t.leading[0], (BracketTerm{5, -1}));
  EXPECT_EQ(t.leading[1], (BracketTerm{1, 0}));
  EXPECT_EQ(t.trailing[0], (BracketTerm{-7, 1}));
  EXPECT_EQ(t.trailing[1], (BracketTerm{-3, -1}));
}

TEST(AlternatingExtremes, FigureEightAgainstOracle) {
  const Diagram d = parse_pd(fixtures::kFigureEight);
  const LaurentPoly b = oracle_bracket(d);
  const ExtremeTerms t = dl_coefficients(d);
  EXPECT_EQ(t.leading[0].exponent, b.max_exponent());
  EXPECT_EQ(t.trailing[0].exponent, b.min_exponent());
  for (const BracketTerm& x : {t.leading[0], t.leading[1], t.trailing[0], t.trailing[1]})
    EXPECT_EQ(x.coefficient, coefficient_at(b, x.exponent)) << x.exponent;
}

TEST(AlternatingExtremes, Preconditions) {
  EXPECT_THROW(dl_coefficients(parse_pd(fixtures::kAlmostAlternatingTrefoil)), PreconditionError);
  EXPECT_THROW(dl_coefficients(parse_pd(fixtures::kAlternatingKinkedTrefoil)), PreconditionError);
  EXPECT_THROW(dl_coefficients(Diagram::unknot()), PreconditionError);
}

TEST(AlmostAlternating, AdjacencyExample) {
  const Diagram d = parse_pd(fixtures::kAdjacencyExample);
  const AAMarkedDiagram aa = mark_almost_alternating(d, fixtures::kAdjacencyExampleDealternator);
  const Adjacency adj = aa_adjacency(aa);
  EXPECT_EQ(adj.u, 3);
  EXPECT_EQ(adj.v, 0);
  const AAExtremes x = aa_extreme_coefficients(aa);
  EXPECT_EQ(std::llabs(x.top.coefficient), 2);
  EXPECT_EQ(std::llabs(x.bottom.coefficient), 1);
  EXPECT_FALSE(x.reducible);
  const LaurentPoly b = oracle_bracket(d);
  EXPECT_EQ(x.top, (BracketTerm{b.max_exponent(), b.highest_coefficient()}));
  EXPECT_EQ(x.bottom, (BracketTerm{b.min_exponent(), b.lowest_coefficient()}));
}

TEST(AlmostAlternating, FacesAtTheDealternator) {
  const AAMarkedDiagram aa =
      mark_almost_alternating(parse_pd(fixtures::kAdjacencyExample), fixtures::kAdjacencyExampleDealternator);
  const std::set<int> faces{aa.u1, aa.u2, aa.v1, aa.v2};
  EXPECT_EQ(faces.size(), 4U);
}

TEST(AlmostAlternating, Preconditions) {
  EXPECT_THROW(mark_almost_alternating(parse_pd(fixtures::kTrefoil), 0), PreconditionError);
  EXPECT_THROW(mark_almost_alternating(parse_pd(fixtures::kAdjacencyExample), 0), PreconditionError);
  EXPECT_THROW(mark_almost_alternating(parse_pd(fixtures::kAdjacencyExample), 9), PreconditionError);
}

TEST(AlmostAlternating, AdjacencyOneCancelsTheExtremeTerm) {
  int checked = 0;
  for (const auto& s : gen::almost_alternating_corpus(5, 150, 4, 12)) {
    const AAMarkedDiagram aa = mark_almost_alternating(s.diagram, s.dealternator);
    const AAExtremes x = aa_extreme_coefficients(aa);
    if (x.adjacency.u != 1) continue;
    ++checked;
    EXPECT_EQ(x.top.coefficient, 0);
    EXPECT_EQ(coefficient_at(kauffman_bracket(s.diagram), x.top.exponent), 0) << to_pd_string(s.diagram);
    EXPECT_LT(kauffman_bracket(s.diagram).max_exponent(), x.top.exponent);
  }
  EXPECT_GT(checked, 0);
}

TEST(Obstruction, Eleven95) {
  const ObstructionVerdict v = jones_obstruction(parse_poly(fixtures::k11n95));
  EXPECT_EQ(v.a_m, 2);
  EXPECT_EQ(v.a_M, -2);
  EXPECT_TRUE(v.fires);
  const auto has = [&](Certificate c) { return std::find(v.implied.begin(), v.implied.end(), c) != v.implied.end(); };
  EXPECT_TRUE(has(Certificate::turaev_genus_at_least_2));
  EXPECT_TRUE(has(Certificate::dealternating_at_least_2));
  EXPECT_TRUE(has(Certificate::not_almost_alternating));
}

TEST(Obstruction, TwelveN253) {
  const ObstructionVerdict v = jones_obstruction(parse_poly(fixtures::kTable1[0][1]));
  EXPECT_EQ(v.a_m, -2);
  EXPECT_EQ(v.a_M, -2);
  EXPECT_TRUE(v.fires);
}

TEST(Obstruction, EveryTableEntryFires) {
  for (const auto& row : fixtures::kTable1) EXPECT_TRUE(jones_obstruction(parse_poly(row[1])).fires) << row[0];
}

TEST(Obstruction, TrefoilDoesNotFire) {
  const ObstructionVerdict v = jones_obstruction(jones(od_of(fixtures::kTrefoil)));
  EXPECT_FALSE(v.fires);
  EXPECT_TRUE(v.implied.empty());
  EXPECT_EQ(std::llabs(v.a_M), 1);
}

TEST(Obstruction, ZeroPolynomial) { EXPECT_THROW(jones_obstruction(LaurentPoly(Variable::t_half)), PreconditionError); }

TEST(Obstruction, CertificateNames) {
  EXPECT_STREQ(certificate_name(Certificate::turaev_genus_at_least_2), "turaev_genus>=2");
  EXPECT_STREQ(certificate_name(Certificate::dealternating_at_least_2), "dealternating>=2");
  EXPECT_STREQ(certificate_name(Certificate::not_almost_alternating), "not_almost_alternating");
}

TEST(ModFour, Examples) {
  EXPECT_TRUE(giller_mod4_check(8, 45));
  EXPECT_TRUE(giller_mod4_check(0, 1));
  EXPECT_TRUE(giller_mod4_check(-2, 3));
  EXPECT_TRUE(giller_mod4_check(2, 3));
  EXPECT_FALSE(giller_mod4_check(2, 5));
}

TEST(ModFour, Parity) {
  EXPECT_THROW(giller_mod4_check(1, 3), PreconditionError);
  EXPECT_THROW(giller_mod4_check(2, 4), PreconditionError);
}
