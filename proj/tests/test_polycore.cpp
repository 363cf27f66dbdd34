#include <gtest/gtest.h>

#include "support.hpp"
#include "torideg/error.hpp"
#include "torideg/poly.hpp"

using namespace torideg;
using namespace torideg::test;

namespace {

/// Evaluates f at a rational point by substituting every variable.
Rational eval(const MultiPoly& f, const QVector& point) {
  std::vector<std::size_t> vars(point.size());
  for (std::size_t j = 0; j < vars.size(); ++j) vars[j] = j;
  RingPtr empty = Ring::make({}, {{}});
  MultiPoly c = substitute(f, vars, point, empty);
  return c.is_zero() ? Rational(0) : c.terms().front().second;
}

}  // namespace

TEST(Rational, ParsesToLowestTerms) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("+2"), Rational(2));
  EXPECT_EQ(to_string(parse_rational("-4/8")), "-1/2");
}

TEST(Rational, RejectsMalformedInput) {
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  // The sign belongs in front of the numerator.
  EXPECT_THROW(parse_rational("4/-8"), ParseError);
}

TEST(Rational, PrimitiveClearsDenominatorsAndGcd) {
  EXPECT_EQ(primitive({Rational(2, 3), Rational(4, 3)}), Z({1, 2}));
  EXPECT_EQ(primitive({Rational(-4), Rational(6)}), Z({-2, 3}));
  EXPECT_EQ(primitive({Rational(0), Rational(0)}), Z({0, 0}));
}

TEST(Ring, StandardGradingAndLookup) {
  RingPtr R = curve_ring();
  EXPECT_EQ(R->nvars(), 3u);
  EXPECT_EQ(R->grading(), Ring::Grading({{1, 1, 1}}));
  EXPECT_EQ(R->index_of("y"), std::optional<std::size_t>(1));
  EXPECT_FALSE(R->index_of("w").has_value());
}

TEST(Ring, RejectsNonPositiveGrading) {
  EXPECT_THROW(Ring::make({"x", "y"}, {{1, 0}}), DomainError);
  EXPECT_THROW(Ring::make({"x", "x"}, {{1, 1}}), DomainError);
}

TEST(MultiPoly, ParsesAndExpands) {
  RingPtr R = curve_ring();
  EXPECT_EQ(P("(x+y)^2", R), P("x^2 + 2*x*y + y^2", R));
  EXPECT_EQ(P("x*y - y*x", R), MultiPoly(R));
  EXPECT_EQ(P("x/2 + x/2", R), P("x", R));
  EXPECT_EQ(P("-x^2", R), P("0 - x*x", R));
  EXPECT_EQ(P("(-x)^2", R), P("x*x", R));
  EXPECT_EQ(P("y*-x^3", R), P("-x^3*y", R));
  EXPECT_EQ(to_string(P("y^2*z - x^3 + z^3", R)), "-x^3 + y^2*z + z^3");
}

TEST(MultiPoly, ParseErrorsAreReported) {
  RingPtr R = curve_ring();
  EXPECT_THROW(parse_poly("x + w", R), ParseError);
  EXPECT_THROW(parse_poly("(x + y", R), ParseError);
  EXPECT_THROW(parse_poly("x^-1", R), ParseError);
}

TEST(MultiPoly, RingMismatchThrows) {
  RingPtr R = curve_ring();
  RingPtr S = Ring::standard({"a", "b", "c"});
  EXPECT_THROW(poly_arith(ArithOp::add, P("x", R), P("a", S)), DomainError);
}

TEST(MultiPoly, Multidegree) {
  RingPtr R = curve_ring();
  auto h = multidegree(P("x^2 + y*z", R));
  EXPECT_TRUE(h.homogeneous);
  EXPECT_EQ(h.degree, std::vector<long>({2}));
  auto n = multidegree(P("x + y^2", R));
  EXPECT_FALSE(n.homogeneous);
  ASSERT_TRUE(n.witnesses.has_value());
  EXPECT_THROW(multidegree(MultiPoly(R)), DomainError);
}

TEST(MultiPoly, SubstituteAndCompose) {
  RingPtr R = curve_ring();
  RingPtr T = Ring::standard({"x", "y"});
  MultiPoly f = P("y^2*z - x^3 + z^3", R);
  EXPECT_EQ(substitute(f, {2}, {Rational(1)}, T), P("y^2 - x^3 + 1", T));
  RingPtr U = Ring::standard({"s", "t"});
  MultiPoly g = compose(f, {P("s*t", U), P("s", U), P("t", U)}, U);
  EXPECT_EQ(g, P("s^2*t - s^3*t^3 + t^3", U));
}

// Ring laws checked against evaluation at random rational points.
TEST(MultiPolyProperty, ArithmeticAgreesWithEvaluation) {
  Gen gen(11);
  RingPtr R = curve_ring();
  for (int k = 0; k < 60; ++k) {
    MultiPoly f = gen.polynomial(R, 4, 3), g = gen.polynomial(R, 4, 3);
    QVector pt = gen.rational_vector(3, 5);
    EXPECT_EQ(eval(f + g, pt), eval(f, pt) + eval(g, pt));
    EXPECT_EQ(eval(f - g, pt), eval(f, pt) - eval(g, pt));
    EXPECT_EQ(eval(f * g, pt), eval(f, pt) * eval(g, pt));
    EXPECT_EQ(eval(f.pow(3), pt), eval(f, pt) * eval(f, pt) * eval(f, pt));
  }
}

TEST(MultiPolyProperty, TextRoundTrip) {
  Gen gen(12);
  RingPtr R = curve_ring();
  for (int k = 0; k < 100; ++k) {
    MultiPoly f = gen.polynomial(R, 6, 4);
    EXPECT_EQ(parse_poly(to_string(f), R), f) << to_string(f);
  }
}

TEST(MultiPolyProperty, CommutativeRingAxioms) {
  Gen gen(13);
  RingPtr R = curve_ring();
  for (int k = 0; k < 40; ++k) {
    MultiPoly f = gen.polynomial(R, 3, 3), g = gen.polynomial(R, 3, 3), h = gen.polynomial(R, 3, 3);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f + g) * h, f * h + g * h);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f - f, MultiPoly(R));
  }
}
