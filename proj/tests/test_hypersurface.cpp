#include <gtest/gtest.h>

#include <random>

#include "rees/hypersurface.hpp"
#include "test_util.hpp"

using namespace rees;
using namespace rees::testing;

namespace {

using Q = Rational;
using Fam = HypersurfaceFamily<Q>;

Fam z3_xy() { return family_build<Q>(2, 3, std::vector<std::string>{"X", "Y"}); }
Fam z5() { return family_build<Q>(2, 5, std::vector<std::string>{"X-Y", "X+Y"}); }

SurfaceElement<Q> el(const Fam& f, const std::string& s) { return element<Q>(f, s); }

void expect_code(errc code, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "no error thrown";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

/// Random homogeneous form of degree e in X, Y not divisible by the linear form l.
Poly<Q> random_form_off(std::mt19937_64& rng, const Vars& v, unsigned e, const Poly<Q>& l) {
  for (;;) {
    Poly<Q> p(v);
    for (unsigned b = 0; b <= e; ++b) p.add_term(Monomial{e - b, b}, random_rational(rng, 4));
    if (p.is_zero()) continue;
    if (e > 0 && divides(l, p)) continue;
    return p;
  }
}

}  // namespace

TEST(FamilyBuild, Examples) {
  auto f = z3_xy();
  EXPECT_EQ(f.G, parse_poly<Q>("Z^3-X*Y", f.vars));
  EXPECT_EQ(f.t, 1u);
  EXPECT_EQ(f.h, 2u);
  expect_code(errc::not_coprime, [] { family_build<Q>(2, 3, std::vector<std::string>{"X", "2*X"}); });
  auto g = family_build<Q>(2, 5, std::vector<std::string>{"X-Y", "X+Y"}, {{3, "(X^2-Y^2)*Z"}});
  EXPECT_EQ(g.G, parse_poly<Q>("Z^5+(X^2-Y^2)*Z-(X^2-Y^2)", g.vars));
  EXPECT_EQ(g.t, 3u);
}

TEST(FamilyBuild, Errors) {
  expect_code(errc::bad_degrees, [] { family_build<Q>(2, 2, std::vector<std::string>{"X", "Y"}); });
  expect_code(errc::bad_extra_term, [] { family_build<Q>(2, 5, std::vector<std::string>{"X", "Y"}, {{3, "X*Z^2"}}); });
  expect_code(errc::bad_extra_term, [] { family_build<Q>(2, 5, std::vector<std::string>{"X", "Y"}, {{3, "X*Y"}}); });
  expect_code(errc::bad_extra_term, [] { family_build<Q>(2, 5, std::vector<std::string>{"X", "Y"}, {{5, "X*Y*Z^3"}}); });
  expect_code(errc::bad_extra_term, [] { family_build<Q>(2, 5, std::vector<std::string>{"X", "Y"}, {{2, "X*Y"}}); });
  expect_code(errc::invalid_input, [] { family_build<Q>(2, 5, std::vector<std::string>{"X+Z", "Y"}); });
}

TEST(QdtReduce, Examples) {
  auto f = z3_xy();
  auto x = parse_poly<Q>("x", f.chart), y = parse_poly<Q>("y", f.chart);
  auto d = qdt_reduce(f, el(f, "X"));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0], x * x * y);
  EXPECT_EQ(qdt_reduce(f, el(f, "Z"))[0], x * y);
  EXPECT_EQ(qdt_reduce(f, el(f, "1"))[0], Poly<Q>::constant(f.chart, Q(1)));
  auto g = z5();
  auto one = qdt_reduce(g, el(g, "1"));
  ASSERT_EQ(one.size(), 3u);
  EXPECT_TRUE(one[1].is_zero() && one[2].is_zero());
}

TEST(VValue, Examples) {
  auto f = z3_xy();
  EXPECT_EQ(v_value(f, 1, el(f, "X")), ext_nat(2));
  EXPECT_EQ(v_value(f, 1, el(f, "Z")), ext_nat(1));
  EXPECT_EQ(v_value(f, 1, el(f, "X+Y")), ext_nat(1));
  EXPECT_EQ(v_value(f, 2, el(f, "X")), ext_nat(1));
  EXPECT_TRUE(v_value(f, 1, el(f, "Z^3-X*Y")).is_infinite());
  expect_code(errc::index_out_of_range, [&] { v_value(f, 3, el(f, "X")); });
  expect_code(errc::index_out_of_range, [&] { v_value(f, 0, el(f, "X")); });
}

TEST(Dicriticals, Examples) {
  EXPECT_EQ(dicriticals(z3_xy()).size(), 2u);
  auto g = z5();
  auto ds = dicriticals(g);
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(g.t, 3u);
  for (unsigned j = 1; j <= 2; ++j) EXPECT_EQ(v_value(g, j, element(g, g.forms[j - 1])), ext_nat(4));
  auto one = family_build<Q>(1, 2, std::vector<std::string>{"X"});
  EXPECT_EQ(dicriticals(one).size(), 1u);
  // pairwise distinct as functions: V_j separates F_j from F_i
  EXPECT_NE(v_value(g, 1, element(g, g.forms[0])), v_value(g, 2, element(g, g.forms[0])));
}

TEST(ValueTable, FourLinesAndSharpening) {
  for (const auto& fam : {z3_xy(), z5(), family_build<Q>(2, 5, std::vector<std::string>{"X-Y", "X+Y"}, {{3, "(X^2-Y^2)*Z"}})}) {
    for (unsigned j = 1; j <= fam.h; ++j) {
      EXPECT_EQ(v_value(fam, j, element(fam, fam.forms[j - 1])), ext_nat(fam.t + 1));
      EXPECT_EQ(v_value(fam, j, el(fam, "Z")), ext_nat(1));
      for (unsigned i = 1; i <= fam.h; ++i)
        if (i != j) EXPECT_EQ(v_value(fam, j, element(fam, fam.forms[i - 1])), ext_nat(1));
    }
    std::mt19937_64 rng(28);
    for (int n = 0; n < 20; ++n) {
      const unsigned j = 1 + rng() % fam.h, e0 = rng() % 4, k = rng() % 3;
      const Poly<Q>& Fj = fam.forms[j - 1];
      Poly<Q> c = random_form_off(rng, fam.vars, e0, Fj) * Fj.pow(k);
      EXPECT_EQ(v_value(fam, j, element(fam, c)), ext_nat(e0 + k + fam.t * k)) << c.str();
    }
  }
}

TEST(Properties, ValuationAxioms) {
  std::mt19937_64 rng(29);
  for (const auto& fam : {z3_xy(), z5()}) {
    auto coef = [&] { return random_rational(rng, 3); };
    for (int n = 0; n < 40; ++n) {
      auto a = element(fam, random_poly<Q>(rng, fam.vars, 4, 3, coef));
      auto b = element(fam, random_poly<Q>(rng, fam.vars, 4, 3, coef));
      for (unsigned j = 1; j <= fam.h; ++j) {
        auto va = v_value(fam, j, a), vb = v_value(fam, j, b);
        ASSERT_EQ(v_value(fam, j, multiply(fam, a, b)), va + vb);
        ASSERT_GE(v_value(fam, j, add(fam, a, b)), std::min(va, vb));
        ASSERT_EQ(va.is_infinite(), is_zero(a));
      }
    }
  }
}

TEST(IdealMembership, Examples) {
  auto f = z3_xy();
  EXPECT_TRUE(ideal_membership(f, el(f, "Z^2"), 2, 6));
  EXPECT_FALSE(ideal_membership(f, el(f, "X"), 2, 3));
  EXPECT_TRUE(ideal_membership(f, el(f, "X*Y"), 3, 6));
  EXPECT_FALSE(ideal_membership(f, el(f, "X*Y"), 4, 6));
  expect_code(errc::degree_bound_exceeded, [&] { ideal_membership(f, el(f, "X^5"), 2, 3); });
}

TEST(VerifyNormality, Examples) {
  auto r1 = verify_normality(z3_xy(), 2, 6);
  EXPECT_TRUE(r1.pass);
  ASSERT_EQ(r1.records.size(), 3u);
  EXPECT_TRUE(r1.records[0].pass);
  for (const auto& rec : r1.records) EXPECT_TRUE(rec.witness.empty());
  EXPECT_TRUE(verify_normality(z5(), 2, 8).pass);
  EXPECT_TRUE(verify_normality(family_build<Q>(2, 5, std::vector<std::string>{"X-Y", "X+Y"}, {{3, "(X^2-Y^2)*Z"}}), 3, 10).pass);
  EXPECT_TRUE(verify_normality(family_build<Q>(3, 3, std::vector<std::string>{"X1", "X2+X3"}), 2, 6).pass);
}

TEST(VerifyNormality, SubspaceDimensionMatchesHandCount) {
  // Z^3 - XY: V_1 = V_2 >= 1 on everything without constant term, so the space has one less dimension
  auto r = verify_normality(z3_xy(), 1, 4);
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_EQ(r.records[1].dimension + 1, r.records[0].dimension);
}

TEST(VerifyNormality, DimensionsStrictlyDecrease) {
  auto f = z3_xy();
  auto r = verify_normality(f, 3, 8);
  EXPECT_TRUE(r.pass);
  EXPECT_GT(r.records[1].dimension, r.records[2].dimension);
  EXPECT_GT(r.records[2].dimension, r.records[3].dimension);
}

TEST(IsReduction, Examples) {
  auto f = z3_xy();
  auto v = f.vars;
  EXPECT_TRUE(is_reduction(f, {parse_poly<Q>("X+Y", v)}, 1));
  EXPECT_TRUE(is_reduction(f, {parse_poly<Q>("X+Y", v)}, 2));
  EXPECT_TRUE(is_reduction(f, {parse_poly<Q>("X+Y", v)}, 3));
  expect_code(errc::divides_tangent_cone, [&] { is_reduction(f, {parse_poly<Q>("X", v)}, 1); });
  // invariant under scaling of the forms
  EXPECT_TRUE(is_reduction(f, {parse_poly<Q>("3*X+3*Y", v)}, 2));
  auto g = family_build<Q>(3, 3, std::vector<std::string>{"X1", "X2"});
  EXPECT_TRUE(is_reduction(g, {parse_poly<Q>("X1+X2", g.vars), parse_poly<Q>("X3", g.vars)}, 1));
  EXPECT_TRUE(is_reduction(g, {parse_poly<Q>("X1+X2+X3", g.vars), parse_poly<Q>("X1-X2", g.vars)}, 1));
}

TEST(IsReduction, SecondFamily) {
  auto f = z5();
  EXPECT_TRUE(is_reduction(f, {parse_poly<Q>("X", f.vars)}, 1));
  EXPECT_TRUE(is_reduction(f, {parse_poly<Q>("Y", f.vars)}, 2));
}

TEST(IsReduction, NeedsAPositiveReductionNumber) {
  // (X+Y, z) is not all of M: modulo it the ring is K[X]/(X^2) and Y = -X survives
  auto f = z3_xy();
  EXPECT_FALSE(is_reduction(f, {parse_poly<Q>("X+Y", f.vars)}, 1, 0));
  EXPECT_TRUE(is_reduction(f, {parse_poly<Q>("X+Y", f.vars)}, 1, 1));
}

TEST(TangentCone, Reduced) {
  EXPECT_TRUE(tangent_cone_reduced(z3_xy()));
  EXPECT_TRUE(tangent_cone_reduced(z5()));
  expect_code(errc::not_coprime, [] { family_build<Q>(2, 3, std::vector<std::string>{"X", "X"}); });
}
