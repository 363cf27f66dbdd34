#include <gtest/gtest.h>

#include <map>

#include "properties.hpp"
#include "support.hpp"
#include "torideg/error.hpp"
#include "torideg/groebner.hpp"

using namespace torideg;
using namespace torideg::test;

namespace {

// Test-local division algorithm on std::map polynomials, sharing nothing with
// the library's reduction engine beyond the order comparison.
using MapPoly = std::map<Monomial, Rational>;

MapPoly to_map(const MultiPoly& f) {
  MapPoly m;
  for (const auto& [a, c] : f.terms()) m[a] = c;
  return m;
}

Monomial largest(const MapPoly& p, const TermOrder& o) {
  auto best = p.begin();
  for (auto it = p.begin(); it != p.end(); ++it)
    if (o.compare(it->first, best->first) == Cmp::gt) best = it;
  return best->first;
}

/// Remainder of f on division by G (leads taken under o).
MapPoly naive_remainder(MapPoly f, const std::vector<MapPoly>& G, const TermOrder& o) {
  MapPoly rem;
  while (!f.empty()) {
    Monomial lt = largest(f, o);
    Rational lc = f[lt];
    bool divided = false;
    for (const auto& g : G) {
      Monomial lg = largest(g, o);
      if (!lg.divides(lt)) continue;
      Rational c = lc / g.at(lg);
      Monomial q = lg.quotient_of(lt);
      for (const auto& [m, d] : g) {
        Rational& slot = f[m * q];
        slot -= c * d;
        if (slot == 0) f.erase(m * q);
      }
      divided = true;
      break;
    }
    if (!divided) {
      rem[lt] = lc;
      f.erase(lt);
    }
  }
  return rem;
}

/// Buchberger's criterion evaluated with the naive division.
bool naive_is_groebner(const std::vector<MultiPoly>& gens, const TermOrder& o) {
  std::vector<MapPoly> G;
  for (const auto& g : gens) G.push_back(to_map(g));
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      Monomial a = largest(G[i], o), b = largest(G[j], o);
      Monomial l = a.lcm(b);
      MapPoly s;
      for (const auto& [m, c] : G[i]) s[m * a.quotient_of(l)] += c / G[i].at(a);
      for (const auto& [m, c] : G[j]) s[m * b.quotient_of(l)] -= c / G[j].at(b);
      for (auto it = s.begin(); it != s.end();) it = it->second == 0 ? s.erase(it) : std::next(it);
      if (!naive_remainder(s, G, o).empty()) return false;
    }
  return true;
}

Ideal twisted_cubic() { return parse_ideal("ring a,b,c,d\nb^2 - a*c\nc^2 - b*d\na*d - b*c\n"); }

}  // namespace

TEST(Buchberger, CurveGeneratorIsItsOwnBasis) {
  Ideal I = curve_ideal();
  MarkedGroebnerBasis G = buchberger(I, TermOrder::grevlex());
  ASSERT_EQ(G.size(), 1u);
  EXPECT_EQ(G.elements()[0], P("x^3 - y^2*z - z^3", I.ring()));
  EXPECT_EQ(monomial_to_string(G.leads()[0], *I.ring()), "x^3");
  EXPECT_TRUE(is_groebner_basis(I, TermOrder::grevlex()));
}

TEST(Buchberger, TwistedCubicBasesPassTheNaiveCriterion) {
  Ideal I = twisted_cubic();
  for (const auto& order : {TermOrder::grevlex(), TermOrder::lex(), TermOrder::weighted(Q({3, 1, 1, 3}), TermOrder::lex())}) {
    MarkedGroebnerBasis G = buchberger(I, order);
    EXPECT_TRUE(naive_is_groebner(G.elements(), order)) << order.to_string();
    for (const auto& g : I.generators()) EXPECT_TRUE(naive_remainder(to_map(g), [&] {
                                                        std::vector<MapPoly> v;
                                                        for (const auto& e : G.elements()) v.push_back(to_map(e));
                                                        return v;
                                                      }(), order).empty());
    EXPECT_TRUE(G.reduced());
  }
  EXPECT_EQ(buchberger(I, TermOrder::grevlex()).size(), 3u);
}

TEST(Buchberger, RandomIdealsPassTheNaiveCriterion) {
  Gen gen(31);
  RingPtr R = curve_ring();
  for (int k = 0; k < 12; ++k) {
    Ideal I(R, {gen.homogeneous(R, 3, 2), gen.homogeneous(R, 3, 2), gen.homogeneous(R, 2, 3)});
    MarkedGroebnerBasis G = buchberger(I, TermOrder::grevlex());
    EXPECT_TRUE(naive_is_groebner(G.elements(), TermOrder::grevlex()));
    EXPECT_TRUE(is_groebner_basis(G.ideal(), TermOrder::grevlex()));
  }
}

TEST(Buchberger, CriterionDetectsNonBases) {
  RingPtr R = curve_ring();
  Ideal I(R, {P("x - y", R), P("x - z", R)});
  EXPECT_FALSE(is_groebner_basis(I, TermOrder::grevlex()));
  EXPECT_FALSE(naive_is_groebner(I.generators(), TermOrder::grevlex()));
  EXPECT_EQ(buchberger(I, TermOrder::grevlex()).size(), 2u);
}

TEST(Buchberger, UnitIdealAndNonHomogeneousInput) {
  RingPtr R = curve_ring();
  Ideal I(R, {P("x*y - 1", R), P("x", R)});
  MarkedGroebnerBasis G = buchberger(I, TermOrder::grevlex());
  ASSERT_EQ(G.size(), 1u);
  EXPECT_EQ(G.elements()[0], P("1", R));
  EXPECT_THROW(buchberger(I, TermOrder::weighted(Q({1, 1, 1}))), DomainError);
}

TEST(InitialForms, CurveRays) {
  Ideal I = curve_ideal();
  const RingPtr& R = I.ring();
  MultiPoly f = I.generators()[0];
  EXPECT_EQ(initial_form(f, Q({2, 3, 0})), P("y^2*z - x^3", R));
  EXPECT_EQ(initial_form(f, Q({1, 0, 1})), P("z^3 - x^3", R));
  EXPECT_EQ(initial_form(f, Q({0, 1, 1})), P("y^2*z + z^3", R));
  EXPECT_TRUE(same_ideal(initial_ideal(I, Q({2, 3, 0})).ideal, Ideal(R, {P("y^2*z - x^3", R)})));
  EXPECT_TRUE(same_ideal(initial_ideal(I, Q({1, 1, 1})).ideal, I));
}

TEST(Homogenize, OneParameterFamily) {
  Ideal I = curve_ideal();
  Ideal H = homogenize(I, Z({2, 3, 0}));
  ASSERT_EQ(H.size(), 1u);
  RingPtr T = H.ring();
  EXPECT_EQ(T->nvars(), 4u);
  EXPECT_EQ(H.generators()[0], P("x^3 - y^2*z - z^3*t^6", T));
  EXPECT_TRUE(H.is_homogeneous());
}

TEST(StandardMonomials, HilbertFunctionOfThePlaneCubic) {
  Ideal I = curve_ideal();
  MarkedGroebnerBasis G = buchberger(I, TermOrder::grevlex());
  for (long d = 0; d <= 6; ++d) {
    // Binomial(d+2, 2) - Binomial(d-1, 2) for a plane cubic.
    long expected = (d + 2) * (d + 1) / 2 - (d >= 3 ? (d - 1) * (d - 2) / 2 : 0);
    EXPECT_EQ(static_cast<long>(standard_monomials(G.lead_ideal(), {d}).size()), expected) << d;
    EXPECT_EQ(static_cast<long>(monomials_of_degree(*I.ring(), {d}).size()), (d + 2) * (d + 1) / 2);
  }
}

TEST(KrullDimension, Examples) {
  EXPECT_EQ(krull_dimension(curve_ideal()), 2u);
  EXPECT_EQ(krull_dimension(twisted_cubic()), 2u);
  RingPtr R = curve_ring();
  EXPECT_EQ(krull_dimension(Ideal(R, {})), 3u);
  EXPECT_EQ(krull_dimension(Ideal(R, {P("x", R), P("y", R), P("z", R)})), 0u);
}

TEST(Saturation, ByAVariable) {
  RingPtr R = curve_ring();
  Ideal J(R, {P("x*y", R), P("x*z", R)});
  EXPECT_TRUE(same_ideal(saturate_variable(J, 0), Ideal(R, {P("y", R), P("z", R)})));
  EXPECT_TRUE(same_ideal(saturate_variable(J, 1), Ideal(R, {P("x", R)})));
}

TEST(NormalForm, MarkedBasisRoundTripThroughText) {
  Ideal I = twisted_cubic();
  MarkedGroebnerBasis G = buchberger(I, TermOrder::lex());
  MarkedGroebnerBasis H = parse_groebner(format_groebner(G));
  EXPECT_EQ(H, G);
  MultiPoly f = P("a^3*d + b^4 - c*d^3", I.ring());
  EXPECT_EQ(normal_form(f, H), normal_form(f, G));
}

TEST(NormalFormProperty, IdempotentAndInTheIdeal) {
  PropertyReport curve = normal_form_idempotence(curve_ideal(), 40, 32);
  EXPECT_TRUE(curve.passed()) << curve.first_failure;
  PropertyReport cubic = normal_form_idempotence(twisted_cubic(), 40, 33);
  EXPECT_TRUE(cubic.passed()) << cubic.first_failure;
}

TEST(InitialFormProperty, InitialFormsLieInTheInitialIdeal) {
  PropertyReport curve = initial_form_membership(curve_ideal(), 50, 34);
  EXPECT_TRUE(curve.passed()) << curve.first_failure;
  PropertyReport cubic = initial_form_membership(twisted_cubic(), 50, 35);
  EXPECT_TRUE(cubic.passed()) << cubic.first_failure;
}
