#include <gtest/gtest.h>

#include "support.hpp"
#include "torideg/degeneration.hpp"
#include "torideg/error.hpp"

using namespace torideg;
using namespace torideg::test;

namespace {

const ZMatrix kCurveRays = {Z({2, 3, 0}), Z({1, 0, 1})};

LiftedIdeal curve_lift() {
  Ideal I = curve_ideal();
  return lift_ideal(I, buchberger(I, TermOrder::grevlex()), kCurveRays);
}

std::vector<std::size_t> hilbert_row(const Ideal& J, long max_degree) {
  std::vector<std::size_t> row;
  for (long d = 0; d <= max_degree; ++d) row.push_back(hilbert_slice(J, {d}));
  return row;
}

}  // namespace

TEST(Lift, CurveGenerator) {
  LiftedIdeal L = curve_lift();
  ASSERT_EQ(L.ring->nvars(), 5u);
  EXPECT_EQ(L.ring->name(3), "t1");
  EXPECT_EQ(L.ring->name(4), "t2");
  ASSERT_EQ(L.generators.size(), 1u);
  MultiPoly expected = P("y^2*z*t2^2 - x^3 + z^3*t1^6", L.ring);
  EXPECT_TRUE(L.generators[0] == expected || L.generators[0] == -expected) << to_string(L.generators[0]);
  EXPECT_TRUE(L.ideal().is_homogeneous());
}

TEST(Lift, SingleRowAgreesWithHomogenization) {
  Ideal I = curve_ideal();
  MultiPoly f = lift_poly(I.generators()[0], {Z({2, 3, 0})});
  Ideal H = homogenize(I, Z({2, 3, 0}));
  ASSERT_EQ(H.size(), 1u);
  RingPtr T = H.ring();
  // homogenize works from the monic basis, so the two agree up to sign.
  MultiPoly g = relabel(f, {0, 1, 2, 3}, T);
  EXPECT_TRUE(g == H.generators()[0] || g == -H.generators()[0]) << to_string(g);
}

TEST(Fiber, FaceInitialIdeals) {
  LiftedIdeal L = curve_lift();
  Ideal I = curve_ideal();
  const RingPtr& R = I.ring();
  EXPECT_TRUE(same_ideal(fiber(L, Q({0, 1})), Ideal(R, {P("y^2*z - x^3", R)})));
  EXPECT_TRUE(same_ideal(fiber(L, Q({1, 0})), Ideal(R, {P("z^3 - x^3", R)})));
  EXPECT_TRUE(same_ideal(fiber(L, Q({1, 1})), I));
  EXPECT_TRUE(same_ideal(fiber(L, Q({0, 0})), Ideal(R, {P("x^3", R)})));
  EXPECT_THROW(fiber(L, Q({1})), DomainError);
}

TEST(FacePoint, ZeroOnTheFaceRays) {
  QMatrix lin = {Q({1, 1, 1})};
  EXPECT_EQ(face_point(kCurveRays, lin, {Z({2, 3, 0})}), Q({0, 1}));
  EXPECT_EQ(face_point(kCurveRays, lin, {Z({1, 0, 1})}), Q({1, 0}));
  EXPECT_EQ(face_point(kCurveRays, lin, {}), Q({1, 1}));
  EXPECT_EQ(face_point(kCurveRays, lin, kCurveRays), Q({0, 0}));
}

// Flatness surrogate: every fiber has the Hilbert function of I.
TEST(FiberProperty, HilbertFunctionIsConstant) {
  LiftedIdeal L = curve_lift();
  std::vector<std::size_t> reference = hilbert_row(curve_ideal(), 6);
  EXPECT_EQ(reference, std::vector<std::size_t>({1, 3, 6, 9, 12, 15, 18}));
  std::vector<QVector> points = {Q({0, 1}), Q({1, 0}), Q({1, 1}), Q({0, 0})};
  Gen gen(81);
  for (int k = 0; k < 5; ++k) points.push_back(gen.rational_vector(2, 7));
  for (const auto& a : points) EXPECT_EQ(hilbert_row(fiber(L, a), 6), reference) << to_string(a);
}

TEST(OrderProjection, SeparatesLexOrderedValues) {
  EXPECT_EQ(order_preserving_projection({Q({1, 0}), Q({0, 1})}, ZdOrder::lex(2)), Z({2, 1}));
}

TEST(OrderProjectionProperty, PreservesStrictComparisons) {
  Gen gen(82);
  for (int k = 0; k < 20; ++k) {
    QMatrix F;
    for (int i = 0; i < 6; ++i) F.push_back(Q({gen.integer(0, 4), gen.integer(-5, 5), gen.integer(-5, 5)}));
    ZdOrder order = ZdOrder::lex(3);
    ZVector e = order_preserving_projection(F, order);
    for (const auto& x : e) EXPECT_GT(x, 0);
    for (const auto& m : F)
      for (const auto& n : F) {
        if (order.compare(m, n) != Cmp::lt) continue;
        Rational em = 0, en = 0;
        for (std::size_t j = 0; j < 3; ++j) {
          em += Rational(e[j]) * m[j];
          en += Rational(e[j]) * n[j];
        }
        EXPECT_LT(em, en) << to_string(m) << " < " << to_string(n);
      }
  }
}

TEST(Rees, CurveOneParameterFamily) {
  ValuationProfile V(curve_ideal(), WeightingMatrix{{Q({1, 1, 1}), Q({2, 3, 0})}, ZdOrder::lex(2)});
  ReesFamily F = rees_one_parameter(V);
  EXPECT_EQ(F.e, Z({1, 1}));
  EXPECT_EQ(F.weight, Z({3, 4, 1}));
  EXPECT_TRUE(same_ideal(F.ideal, homogenize(curve_ideal(), Z({3, 4, 1}))));
}

TEST(HilbertSlice, RejectsInhomogeneousIdeals) {
  RingPtr R = curve_ring();
  EXPECT_THROW(hilbert_slice(Ideal(R, {P("x - y^2", R)}), {2}), DomainError);
  EXPECT_EQ(hilbert_slice(Ideal(R, {}), {2}), 6u);
}
