#include <gtest/gtest.h>

#include <random>

#include "rees/field.hpp"
#include "rees/poly_algorithms.hpp"
#include "test_util.hpp"

using namespace rees;
using namespace rees::testing;

namespace {

Vars xy() {
  static const Vars v = make_vars({"X", "Y"});
  return v;
}

template <class K>
void expect_errc(errc want, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << errc_name(want);
  } catch (const error& e) {
    EXPECT_EQ(e.code(), want) << e.what();
  }
}

FieldContext sqrt2() {
  return field_make(FieldDescriptor::number_field({{"alpha", "alpha^2-2"}}));
}

}  // namespace

TEST(FieldMake, RationalSum) {
  auto ctx = field_make(FieldDescriptor::rationals());
  EXPECT_EQ(ctx.parse_algebraic("1/2") + ctx.parse_algebraic("1/3"), ctx.parse_algebraic("5/6"));
  EXPECT_EQ((Rational(1, 2) + Rational(1, 3)).str(), "5/6");
}

TEST(FieldMake, SqrtTwoConjugateProduct) {
  auto ctx = sqrt2();
  Algebraic a = Algebraic::generator(ctx.number_field(), 0);
  EXPECT_EQ((Algebraic(1) + a) * (Algebraic(1) - a), Algebraic(-1));
  EXPECT_EQ(((Algebraic(1) + a) * (Algebraic(1) - a)).str(), "-1");
}

TEST(FieldMake, ReducibleMinimalPolynomial) {
  expect_errc<int>(errc::reducible_minimal_polynomial,
                   [] { field_make(FieldDescriptor::number_field({{"alpha", "alpha^2-1"}})); });
  expect_errc<int>(errc::reducible_minimal_polynomial,
                   [] { field_make(FieldDescriptor::number_field({{"alpha", "alpha^4+4"}})); });
  expect_errc<int>(errc::reducible_minimal_polynomial, [] {
    field_make(FieldDescriptor::number_field({{"alpha", "alpha^2-2"}, {"beta", "beta^2-8"}}));
  });
}

TEST(FieldMake, IrreducibleQuarticAccepted) {
  auto ctx = field_make(FieldDescriptor::number_field({{"alpha", "alpha^4-10*alpha^2+1"}}));
  EXPECT_EQ(ctx.number_field()->degree(), 4u);
}

TEST(FieldMake, HighDegreeNeedsFlag) {
  expect_errc<int>(errc::invalid_input, [] { field_make(FieldDescriptor::number_field({{"alpha", "alpha^5-2"}})); });
  auto ctx = field_make(FieldDescriptor::number_field({{"alpha", "alpha^5-2"}}, true));
  Algebraic a = Algebraic::generator(ctx.number_field(), 0);
  EXPECT_EQ(a * a * a * a * a, Algebraic(2));
}

TEST(FieldMake, TowerOfQuadratics) {
  auto ctx = field_make(FieldDescriptor::number_field({{"alpha", "alpha^2-2"}, {"beta", "beta^2-3"}}));
  auto f = ctx.number_field();
  EXPECT_EQ(f->degree(), 4u);
  EXPECT_EQ(f->automorphism_count(), 4u);
  Algebraic a = Algebraic::generator(f, 0), b = Algebraic::generator(f, 1);
  Algebraic s = a + b;
  // (a+b)^2 = 5 + 2ab, (a+b)^4 - 10 (a+b)^2 + 1 = 0
  Algebraic s2 = s * s;
  EXPECT_EQ(s2 * s2 - Algebraic(10) * s2 + Algebraic(1), Algebraic(0));
  EXPECT_EQ(generated_degree(std::vector<Algebraic>{s}), 4u);
  EXPECT_EQ(generated_degree(std::vector<Algebraic>{a * b}), 2u);
}

TEST(FieldMake, FunctionFieldConstants) {
  auto ctx = field_make(FieldDescriptor::function_field({"t", "tstar"}));
  auto v = xy();
  auto p = parse_poly<RationalFunction>("t*X + tstar*Y", v, ctx.function_constants());
  EXPECT_EQ(p.str(), "t*X+tstar*Y");
  RationalFunction t = RationalFunction::t();
  EXPECT_EQ((t * t - RationalFunction(1)) / (t - RationalFunction(1)), t + RationalFunction(1));
}

TEST(PolyArith, Examples) {
  auto v = xy();
  auto f = qpoly("X+Y", v), g = qpoly("X-Y", v);
  EXPECT_EQ((f * g).str(), "X^2-Y^2");
  EXPECT_EQ(exact_divide(qpoly("X^2-Y^2", v), g).str(), "X+Y");
  expect_errc<int>(errc::inexact_division, [&] { exact_divide(qpoly("X^2+Y", v), qpoly("X", v)); });
}

TEST(PolyArith, PrintingIsCanonical) {
  auto v = xy();
  EXPECT_EQ(qpoly("Y^2 + 1/2*X - X^3", v).str(), "-X^3+Y^2+1/2*X");
  EXPECT_EQ(qpoly("(X+Y)^2", v).str(), "X^2+2*X*Y+Y^2");
  EXPECT_EQ(qpoly("0", v).str(), "0");
  auto ctx = sqrt2();
  auto p = parse_poly<Algebraic>("(alpha+1)*X - alpha", v, ctx.algebraic_constants());
  EXPECT_EQ(p.str(), "(alpha+1)*X-alpha");
}

TEST(PolyArith, ParseErrors) {
  auto v = xy();
  expect_errc<int>(errc::parse_error, [&] { qpoly("X+", v); });
  expect_errc<int>(errc::parse_error, [&] { qpoly("X/Y", v); });
  expect_errc<int>(errc::parse_error, [&] { qpoly("W", v); });
}

TEST(HomogeneousComponents, Examples) {
  auto v = make_vars({"X", "Y", "Z"});
  auto c = homogeneous_components(qpoly("X^2+X*Y+Z", v));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.at(1).str(), "Z");
  EXPECT_EQ(c.at(2).str(), "X^2+X*Y");
  EXPECT_TRUE(homogeneous_components(Poly<Rational>(v)).empty());
  auto d = homogeneous_components(qpoly("Z^3-X*Y", v));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.at(2).str(), "-X*Y");
  EXPECT_EQ(d.at(3).str(), "Z^3");
}

TEST(Substitute, Examples) {
  auto src = xy();
  auto tgt = make_vars({"z", "x'", "y'"});
  auto img = std::vector{qpoly("z*x'", tgt), qpoly("z*y'", tgt)};
  EXPECT_EQ(substitute(qpoly("X*Y", src), img, tgt).str(), "z^2*x'*y'");
  EXPECT_EQ(substitute(qpoly("X", src), {qpoly("X", src), qpoly("Y", src)}, src).str(), "X");
  auto uv = make_vars({"u", "v"});
  auto r = substitute(qpoly("Y-X^2", src), {qpoly("u", uv), qpoly("u*(v+1)", uv)}, uv);
  EXPECT_EQ(r, qpoly("u*v+u-u^2", uv));
}

TEST(UnivariateTools, Examples) {
  auto v = xy();
  EXPECT_EQ(resultant(qpoly("Y-X^2", v), qpoly("Y", v), 1), qpoly("X^2", v));
  EXPECT_EQ(gcd(qpoly("X^2-Y^2", v), qpoly("X-Y", v)), qpoly("X-Y", v));
  auto w = make_vars({"x'", "y'"});
  EXPECT_EQ(factor_order(qpoly("x'", w), qpoly("x'^2*y'", w)), 2u);
  expect_errc<int>(errc::zero_input, [&] { factor_order(qpoly("x'", w), Poly<Rational>(w)); });
}

TEST(OriginOrder, Examples) {
  auto v = xy();
  EXPECT_EQ(origin_order(qpoly("Y^2-X^3", v)), ext_nat(2));
  EXPECT_EQ(origin_order(qpoly("1+X", v)), ext_nat(0));
  EXPECT_TRUE(origin_order(Poly<Rational>(v)).is_infinite());
}

template <class K, class Gen>
void check_field_axioms(Gen&& gen, int samples) {
  for (int i = 0; i < samples; ++i) {
    K a = gen(), b = gen(), c = gen();
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a - a, K(0));
    if (!a.is_zero()) {
      ASSERT_EQ(a * (K(1) / a), K(1));
      ASSERT_EQ((b / a) * a, b);
    }
  }
}

TEST(FieldAxioms, Rationals) {
  std::mt19937_64 rng(11);
  check_field_axioms<Rational>([&] { return random_rational(rng, 50); }, 1000);
}

TEST(FieldAxioms, NumberFields) {
  std::mt19937_64 rng(12);
  auto quad = sqrt2().number_field();
  check_field_axioms<Algebraic>([&] { return random_algebraic(rng, quad); }, 1000);
  auto cubic = field_make(FieldDescriptor::number_field({{"alpha", "alpha^3-alpha-1"}})).number_field();
  check_field_axioms<Algebraic>([&] { return random_algebraic(rng, cubic); }, 1000);
  auto tower =
      field_make(FieldDescriptor::number_field({{"alpha", "alpha^2-2"}, {"beta", "beta^2-alpha"}})).number_field();
  check_field_axioms<Algebraic>([&] { return random_algebraic(rng, tower); }, 1000);
}

TEST(FieldAxioms, FunctionFields) {
  std::mt19937_64 rng(13);
  check_field_axioms<RationalFunction>([&] { return random_function(rng, false); }, 1000);
  check_field_axioms<RationalFunction>([&] { return random_function(rng, true); }, 1000);
}

TEST(Properties, ResultantVanishesIffCommonFactor) {
  std::mt19937_64 rng(21);
  auto v = make_vars({"X", "Y", "Z"});
  auto coef = [&] { return random_rational(rng, 3); };
  int common = 0;
  for (int i = 0; i < 200; ++i) {
    auto f = random_poly<Rational>(rng, v, 3, 3, coef);
    auto g = random_poly<Rational>(rng, v, 3, 3, coef);
    if (i % 3 == 0) {
      auto h = random_poly<Rational>(rng, v, 2, 2, coef);
      f = f * h;
      g = g * h;
    }
    std::size_t var = rng() % 3;
    if (f.degree_in(var) < 1 && g.degree_in(var) < 1) continue;
    if (f.is_zero() || g.is_zero()) continue;
    auto r = resultant(f, g, var);
    auto d = gcd(f, g);
    ASSERT_TRUE(divides(d, f) && divides(d, g));
    ASSERT_EQ(r.is_zero(), d.degree_in(var) > 0) << f.str() << " | " << g.str() << " var " << var;
    common += r.is_zero();
  }
  EXPECT_GT(common, 10);
}

TEST(Properties, SubstituteIsHomomorphism) {
  std::mt19937_64 rng(22);
  auto v = xy();
  auto uv = make_vars({"u", "v", "w"});
  auto coef = [&] { return random_rational(rng, 4); };
  for (int i = 0; i < 200; ++i) {
    auto f = random_poly<Rational>(rng, v, 4, 4, coef);
    auto g = random_poly<Rational>(rng, v, 4, 4, coef);
    std::vector<Poly<Rational>> img{random_poly<Rational>(rng, uv, 2, 3, coef),
                                    random_poly<Rational>(rng, uv, 2, 3, coef)};
    ASSERT_EQ(substitute(f * g, img, uv), substitute(f, img, uv) * substitute(g, img, uv));
    ASSERT_EQ(substitute(f + g, img, uv), substitute(f, img, uv) + substitute(g, img, uv));
  }
}

TEST(Properties, HomogeneousComponentsRoundTrip) {
  std::mt19937_64 rng(23);
  auto v = make_vars({"X", "Y", "Z"});
  auto coef = [&] { return random_rational(rng, 4); };
  for (int i = 0; i < 300; ++i) {
    auto f = random_poly<Rational>(rng, v, 5, 6, coef);
    Poly<Rational> sum(v);
    for (const auto& [d, c] : homogeneous_components(f)) {
      ASSERT_TRUE(is_homogeneous(c));
      ASSERT_EQ(c.total_degree(), static_cast<int>(d));
      sum += c;
    }
    ASSERT_EQ(sum, f);
  }
}

TEST(Properties, ExactDivisionInvertsMultiplication) {
  std::mt19937_64 rng(24);
  auto v = xy();
  auto coef = [&] { return random_rational(rng, 4); };
  for (int i = 0; i < 200; ++i) {
    auto f = random_poly<Rational>(rng, v, 4, 4, coef);
    auto g = random_poly<Rational>(rng, v, 3, 3, coef);
    if (g.is_zero()) continue;
    ASSERT_EQ(exact_divide(f * g, g), f);
  }
}
