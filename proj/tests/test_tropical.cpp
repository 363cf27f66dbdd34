#include <gtest/gtest.h>

#include <set>

#include "properties.hpp"
#include "support.hpp"
#include "torideg/tropical.hpp"

using namespace torideg;
using namespace torideg::test;

namespace {

Ideal twisted_cubic() { return parse_ideal("ring a,b,c,d\nb^2 - a*c\nc^2 - b*d\na*d - b*c\n"); }

Ideal single(const std::string& f, const RingPtr& R) { return Ideal(R, {P(f, R)}); }

}  // namespace

TEST(GroebnerFan, CurveHasThreeMonomialChambers) {
  Ideal I = curve_ideal();
  const RingPtr& R = I.ring();
  GroebnerFan F = gfan_traverse(I);
  ASSERT_EQ(F.cones.size(), 3u);
  EXPECT_EQ(F.adjacency.size(), 3u);
  ASSERT_EQ(F.lineality.size(), 1u);
  std::vector<Ideal> expected = {single("y^2*z", R), single("x^3", R), single("z^3", R)};
  std::vector<bool> seen(3, false);
  for (const auto& G : F.bases) {
    Ideal lead = G.lead_ideal();
    EXPECT_TRUE(lead.is_monomial());
    for (std::size_t k = 0; k < 3; ++k)
      if (same_ideal(lead, expected[k])) seen[k] = true;
  }
  EXPECT_EQ(seen, std::vector<bool>(3, true));
  for (const auto& C : F.cones) EXPECT_EQ(C.dimension(), 3u);
}

TEST(GroebnerFan, LinearAndMonomialIdeals) {
  RingPtr R = curve_ring();
  EXPECT_EQ(gfan_traverse(single("x - y", R)).cones.size(), 2u);
  GroebnerFan M = gfan_traverse(Ideal(R, {P("x*y", R), P("z^2", R)}));
  EXPECT_EQ(M.cones.size(), 1u);
  EXPECT_TRUE(M.adjacency.empty());
  EXPECT_EQ(M.lineality.size(), 3u);
}

TEST(GroebnerFanProperty, FlipSymmetry) {
  PropertyReport curve = gfan_flip_symmetry(curve_ideal());
  EXPECT_TRUE(curve.passed()) << curve.first_failure;
  PropertyReport cubic = gfan_flip_symmetry(twisted_cubic());
  EXPECT_TRUE(cubic.passed()) << cubic.first_failure;
}

TEST(MonomialFree, Examples) {
  RingPtr R = curve_ring();
  EXPECT_FALSE(is_monomial_free(single("x*y", R)));
  EXPECT_TRUE(is_monomial_free(single("x - y", R)));
  // x(x - y) contains no monomial even though it has a monomial factor.
  EXPECT_TRUE(is_monomial_free(single("x^2 - x*y", R)));
  EXPECT_FALSE(is_monomial_free(Ideal(R, {P("x*y", R), P("x - y", R)})));
  EXPECT_FALSE(is_monomial_free(single("1", R)));
}

TEST(ToricIdeal, TwistedCubicFromItsMatrix) {
  ZMatrix A = {Z({1, 1, 1, 1}), Z({0, 1, 2, 3})};
  Ideal T = toric_ideal(A);
  RingPtr R = T.ring();
  ASSERT_EQ(R->nvars(), 4u);
  Ideal minors(R, {P("x2^2 - x1*x3", R), P("x3^2 - x2*x4", R), P("x1*x4 - x2*x3", R)});
  EXPECT_TRUE(same_ideal(T, minors));
  // The same lattice through a different integral basis.
  EXPECT_TRUE(same_ideal(toric_ideal({Z({3, 2, 1, 0}), Z({0, 1, 2, 3})}), minors));
}

TEST(ToricIdeal, CurveChamberMatrix) {
  RingPtr R = curve_ring();
  Ideal T = toric_ideal({Z({1, 1, 1}), Z({2, 3, 0})}, R);
  EXPECT_TRUE(same_ideal(T, single("y^2*z - x^3", R)));
  // Columns (1,1),(1,0),(1,1): only x - z.
  EXPECT_TRUE(same_ideal(toric_ideal({Z({1, 1, 1}), Z({1, 0, 1})}, R), single("x - z", R)));
}

TEST(ToricIdeal, GeneratorsVanishOnTheParametrization) {
  Gen gen(51);
  for (int k = 0; k < 6; ++k) {
    ZMatrix A = {Z({1, 1, 1, 1}), gen.integer_vector(4, 0, 3)};
    Ideal T = toric_ideal(A);
    RingPtr U = Ring::standard({"s", "t"});
    std::vector<MultiPoly> images;
    for (std::size_t j = 0; j < 4; ++j) {
      Monomial m(2);
      m[0] = A[0][j].get_si();
      m[1] = A[1][j].get_si();
      images.push_back(MultiPoly::from_terms(U, {{m, Rational(1)}}));
    }
    for (const auto& g : T.generators()) EXPECT_TRUE(compose(g, images, U).is_zero()) << to_string(g);
  }
}

TEST(Rescaling, BinomialIdeals) {
  RingPtr R = curve_ring();
  EXPECT_TRUE(equal_up_to_rescaling(single("x^3 - y^2*z", R), single("x^3 - 4*y^2*z", R)));
  EXPECT_TRUE(equal_up_to_rescaling(single("x^3 - y^2*z", R), single("x^3 + y^2*z", R)));
  EXPECT_FALSE(equal_up_to_rescaling(single("x^3 - y^2*z", R), single("x^3 - z^3", R)));
  EXPECT_FALSE(equal_up_to_rescaling(single("x^3 - y^2*z", R), single("x^3 - y^2*z - z^3", R)));
}

TEST(Certification, CurveRays) {
  Ideal I = curve_ideal();
  TropicalCone a = certify_prime_cone(I, {Z({1, 1, 1}), Z({2, 3, 0})}, 1);
  EXPECT_TRUE(a.prime);
  EXPECT_EQ(a.dimension, 2u);
  EXPECT_TRUE(same_ideal(a.initial_ideal, single("y^2*z - x^3", I.ring())));

  TropicalCone b = certify_prime_cone(I, {Z({1, 1, 1}), Z({1, 0, 1})}, 1);
  EXPECT_TRUE(b.monomial_free);
  EXPECT_TRUE(b.binomial);
  EXPECT_FALSE(b.toric);
  EXPECT_FALSE(b.prime);

  TropicalCone c = certify_prime_cone(I, {Z({1, 1, 1}), Z({0, 1, 1})}, 1);
  EXPECT_TRUE(c.monomial_free);
  EXPECT_FALSE(c.prime);

  PrimeVerdict v = prime_verdict(b.initial_ideal, {Z({1, 1, 1}), Z({1, 0, 1})});
  EXPECT_NE(v.failure().find("toric"), std::string::npos) << v.failure();
  EXPECT_EQ(prime_verdict(a.initial_ideal, {Z({1, 1, 1}), Z({2, 3, 0})}).failure(), "");
}

TEST(Tropicalize, CurveHasThreeRays) {
  Ideal I = curve_ideal();
  const RingPtr& R = I.ring();
  std::vector<TropicalCone> T = tropicalize(I);
  ASSERT_EQ(T.size(), 3u);
  QMatrix L = lineality_space(I);
  std::set<ZVector> rays;
  std::vector<Ideal> expected = {single("y^2*z - x^3", R), single("z^3 - x^3", R), single("y^2*z + z^3", R)};
  std::vector<bool> seen(3, false);
  for (const auto& t : T) {
    EXPECT_EQ(t.dimension, 2u);
    EXPECT_TRUE(t.monomial_free);
    for (const auto& r : rays_mod_lineality(t.cone, L, Q({1, 1, 1}))) rays.insert(r);
    for (std::size_t k = 0; k < 3; ++k)
      if (same_ideal(t.initial_ideal, expected[k])) seen[k] = true;
  }
  EXPECT_EQ(rays, std::set<ZVector>({Z({2, 3, 0}), Z({1, 0, 1}), Z({0, 1, 1})}));
  EXPECT_EQ(seen, std::vector<bool>(3, true));
}

TEST(Tropicalize, ToricVarietyIsItsLinealitySpace) {
  std::vector<TropicalCone> T = tropicalize(twisted_cubic());
  ASSERT_EQ(T.size(), 1u);
  EXPECT_EQ(T[0].dimension, 2u);
  EXPECT_TRUE(T[0].prime);
  RingPtr R = curve_ring();
  EXPECT_TRUE(tropicalize(Ideal(R, {P("x*y", R)})).empty());
}

TEST(IdealKey, DistinguishesIdeals) {
  RingPtr R = curve_ring();
  EXPECT_EQ(ideal_key(Ideal(R, {P("x - y", R), P("y - z", R)})), ideal_key(Ideal(R, {P("x - z", R), P("x - y", R)})));
  EXPECT_NE(ideal_key(single("x - y", R)), ideal_key(single("x + y", R)));
}
