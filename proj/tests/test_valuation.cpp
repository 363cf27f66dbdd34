#include <gtest/gtest.h>

#include "properties.hpp"
#include "support.hpp"
#include "torideg/error.hpp"
#include "torideg/valuation.hpp"

using namespace torideg;
using namespace torideg::test;

namespace {

ValuationProfile curve_profile(std::initializer_list<long> ray) {
  return ValuationProfile(curve_ideal(), WeightingMatrix{{Q({1, 1, 1}), Q(ray)}, ZdOrder::lex(2)});
}

/// Chamber profile with both rays of the grevlex cone.
ValuationProfile chamber_profile() {
  Ideal I = curve_ideal();
  return ValuationProfile(I, WeightingMatrix{{Q({1, 1, 1}), Q({2, 3, 0}), Q({1, 0, 1})}, ZdOrder::lex(3)},
                          buchberger(I, TermOrder::grevlex()));
}

}  // namespace

TEST(Quasivaluation, CurveGeneratorValues) {
  ValuationProfile V = curve_profile({2, 3, 0});
  const RingPtr& R = V.ring();
  EXPECT_EQ(quasival_eval(V, P("x", R)), Q({1, 2}));
  EXPECT_EQ(quasival_eval(V, P("y", R)), Q({1, 3}));
  EXPECT_EQ(quasival_eval(V, P("z", R)), Q({1, 0}));
  // x^3 = y^2 z + z^3 in A; the larger value wins.
  EXPECT_EQ(quasival_eval(V, P("x^3", R)), Q({3, 6}));
  EXPECT_EQ(quasival_eval(V, P("x + z", R)), Q({1, 2}));
  EXPECT_THROW(quasival_eval(V, curve_ideal().generators()[0]), DomainError);
  EXPECT_TRUE(V.verdict().prime());
}

TEST(Quasivaluation, RowOutsideTheChamberIsRejected) {
  Ideal I = curve_ideal();
  WeightingMatrix W{{Q({1, 1, 1}), Q({0, 1, 1})}, ZdOrder::lex(2)};
  EXPECT_THROW(ValuationProfile(I, W, buchberger(I, TermOrder::grevlex())), DomainError);
  // The default chamber is chosen from the rows themselves.
  ValuationProfile V(I, W);
  EXPECT_EQ(quasival_eval(V, P("y", I.ring())), Q({1, 1}));
  EXPECT_FALSE(V.verdict().prime());
}

TEST(ValueSemigroup, CurveMembership) {
  ValuationProfile V = curve_profile({2, 3, 0});
  SemigroupSlice one = value_semigroup_slice(V, {1});
  EXPECT_TRUE(one.contains(Q({1, 0})));
  EXPECT_TRUE(one.contains(Q({1, 2})));
  EXPECT_TRUE(one.contains(Q({1, 3})));
  EXPECT_FALSE(one.contains(Q({1, 1})));
  EXPECT_EQ(one.values.size(), 3u);
  SemigroupSlice two = value_semigroup_slice(V, {2});
  EXPECT_TRUE(two.contains(Q({2, 2})));
  EXPECT_TRUE(two.contains(Q({2, 5})));
  EXPECT_FALSE(two.contains(Q({2, 1})));
  // For a valuation each value has a one-dimensional leaf.
  for (const auto& [v, count] : two.values) EXPECT_EQ(count, 1u) << to_string(v);
}

// Slice values of a prime profile are exactly the sums of generator values.
TEST(ValueSemigroupProperty, SlicesAreSumsOfGeneratorValues) {
  ValuationProfile V = curve_profile({2, 3, 0});
  std::vector<QVector> gens = {Q({1, 2}), Q({1, 3}), Q({1, 0})};
  std::set<QVector> reachable = {Q({0, 0})};
  for (long d = 1; d <= 5; ++d) {
    std::set<QVector> next;
    for (const auto& v : reachable)
      for (const auto& g : gens) next.insert(add(v, g));
    reachable = next;
    std::set<QVector> slice;
    for (const auto& [v, count] : value_semigroup_slice(V, {d}).values) slice.insert(v);
    EXPECT_EQ(slice, reachable) << "degree " << d;
  }
}

TEST(NewtonOkounkov, CurveSegment) {
  Polytope D = newton_okounkov_polytope(curve_profile({2, 3, 0}));
  EXPECT_EQ(D.vertices(), QMatrix({Q({1, 0}), Q({1, 3})}));
  EXPECT_EQ(degree_from_polytope(D, {Z({1, 1, 1}), Z({2, 3, 0})}), 3);
  Polytope E = newton_okounkov_polytope(curve_profile({1, 0, 1}));
  EXPECT_EQ(E.vertices(), QMatrix({Q({1, 0}), Q({1, 1})}));
}

TEST(Subduction, InTheQuotient) {
  ValuationProfile V = curve_profile({2, 3, 0});
  const RingPtr& R = V.ring();
  MarkedGroebnerBasis G = buchberger(V.ideal(), TermOrder::grevlex());
  for (const char* text : {"x^3", "x*y*z + y^3", "x^2*y - 3*z^3 + y*z^2"}) {
    MultiPoly f = P(text, R);
    MultiPoly p = subduction(f, V);
    EXPECT_TRUE(ideal_contains(G, p - f)) << text;
  }
  EXPECT_THROW(subduction(P("x", R), curve_profile({0, 1, 1})), DomainError);
}

TEST(Subduction, AmbientSemigroupAlgebra) {
  RingPtr B = Ring::standard({"s"});
  RingPtr T = Ring::standard({"u", "v"});
  std::vector<MultiPoly> images = {P("s^2", B), P("s^3", B)};
  MultiPoly f = P("s^6 + 2*s^5 - s^4 + 7", B);
  MultiPoly p = subduction(f, images, TermOrder::lex(), T);
  EXPECT_EQ(compose(p, images, B), f);
  EXPECT_THROW(subduction(P("s", B), images, TermOrder::lex(), T), DomainError);
}

TEST(Khovanskii, CurveRays) {
  Ideal I = curve_ideal();
  EXPECT_TRUE(khovanskii_check(I, WeightingMatrix{{Q({1, 1, 1}), Q({2, 3, 0})}, ZdOrder::lex(2)}).holds);
  KhovanskiiResult bad = khovanskii_check(I, WeightingMatrix{{Q({1, 1, 1}), Q({1, 0, 1})}, ZdOrder::lex(2)});
  EXPECT_FALSE(bad.holds);
  EXPECT_FALSE(bad.certificate.empty());
  EXPECT_THROW(khovanskii_check(I, WeightingMatrix{{Q({1, 1, 1})}, ZdOrder::lex(1)}), DomainError);
}

TEST(MergedPresentation, AddsAVariablePerGenerator) {
  Ideal I = curve_ideal();
  const RingPtr& R = I.ring();
  MergedPresentation M = merge_presentations(I, {P("x*y", R)}, {"w"});
  const RingPtr& S = M.ideal.ring();
  ASSERT_EQ(S->nvars(), 4u);
  EXPECT_EQ(M.projection.size(), 4u);
  EXPECT_EQ(M.projection[3], P("x*y", R));
  MarkedGroebnerBasis G = buchberger(M.ideal, TermOrder::grevlex());
  EXPECT_TRUE(ideal_contains(G, P("w - x*y", S)));
  EXPECT_TRUE(ideal_contains(G, P("y^2*z - x^3 + z^3", S)));
  EXPECT_EQ(krull_dimension(M.ideal), 2u);
}

TEST(BNewton, ChamberPolytopeAndProjections) {
  ValuationProfile V = chamber_profile();
  Polytope D = delta_B(V);
  EXPECT_EQ(D.vertices(), QMatrix({Q({1, 0, 1}), Q({1, 2, 1}), Q({1, 3, 0})}));
  EXPECT_EQ(project_onto_face(V, D, {0, 1}).vertices(), QMatrix({Q({1, 0}), Q({1, 3})}));
  EXPECT_EQ(project_onto_face(V, D, {0, 2}).vertices(), QMatrix({Q({1, 0}), Q({1, 1})}));
  EXPECT_THROW(project_onto_face(V, D, {1, 2}), DomainError);
  // x^3 reduces to y^2 z + z^3 in the grevlex chamber.
  Polytope f = bnewton_polytope(P("x^3", V.ring()), V);
  EXPECT_EQ(f.vertices(), QMatrix({Q({3, 0, 3}), Q({3, 6, 1})}));
}

TEST(QuasivaluationProperty, PrimeProfileIsMultiplicative) {
  PropertyReport r = quasivaluation_laws(curve_profile({2, 3, 0}), 100, 61, true);
  EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(QuasivaluationProperty, NonPrimeProfileObeysTheLaws) {
  PropertyReport r = quasivaluation_laws(curve_profile({0, 1, 1}), 100, 62, false);
  EXPECT_TRUE(r.passed()) << r.first_failure;
  PropertyReport c = quasivaluation_laws(chamber_profile(), 100, 63, false);
  EXPECT_TRUE(c.passed()) << c.first_failure;
}
