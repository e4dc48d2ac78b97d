#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace exlag;
using namespace exlag::test;

TEST(BigRational, CanonicalForm) {
  EXPECT_EQ(Q(2, 4).to_string(), "1/2");
  EXPECT_EQ(Q(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Q(0, 7).to_string(), "0/1");
  EXPECT_EQ(BigRational().to_string(), "0/1");
  EXPECT_THROW(Q(1, 0), ParameterError);
}

TEST(BigRational, Parse) {
  EXPECT_EQ(BigRational::parse("-17/4"), Q(-17, 4));
  EXPECT_EQ(BigRational::parse("6/8"), Q(3, 4));
  EXPECT_EQ(BigRational::parse("5"), Q(5));
  EXPECT_EQ(BigRational::parse("-4.25"), Q(-17, 4));
  EXPECT_EQ(BigRational::parse(" +1/3 "), Q(1, 3));
  for (const char* bad : {"", "1/0", "a/b", "1//2", "1/-2", "--1", "1.2/3", "."})
    EXPECT_THROW(BigRational::parse(bad), ParameterError) << bad;
}

TEST(BigRational, FloorIsNotTruncation) {
  EXPECT_EQ(Q(-17, 4).floor(), -5);
  EXPECT_EQ(Q(17, 4).floor(), 4);
  EXPECT_EQ(Q(-3).floor(), -3);
  EXPECT_EQ(Q(-17, 4).ceil(), -4);
}

TEST(BigRational, LongDoubleConversion) {
  EXPECT_EQ(Q(1, 3).to_long_double(), 1.0L / 3.0L);
  EXPECT_EQ(Q(-5, 8).to_long_double(), -0.625L);
}

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(Q(5, 3), 0), Q(1));
  EXPECT_EQ(pochhammer(Q(3), 2), Q(12));
  // (-17/4)(-13/4)(-9/4)(-5/4)(-1/4)
  EXPECT_EQ(pochhammer(Q(-17, 4), 5), Q(-9945, 1024));
}

TEST(Pochhammer, RecurrenceProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_rational(rng, 30, 7);
    unsigned j = static_cast<unsigned>(rng() % 21);
    EXPECT_EQ(pochhammer(a, j + 1), pochhammer(a, j) * (a + BigRational(static_cast<long>(j))));
  }
}

TEST(GenBinomial, Examples) {
  EXPECT_EQ(gen_binomial(Q(2), 2), Q(1));
  EXPECT_EQ(gen_binomial(Q(7, 3) + Q(1), 0), Q(1));
  EXPECT_EQ(gen_binomial(Q(5, 2), 2), Q(15, 8));
  EXPECT_EQ(gen_binomial(Q(10), 3), Q(120));
}

TEST(PolyArith, Examples) {
  auto x = RationalPolynomial::x();
  EXPECT_EQ(x * x, P({"0", "0", "1"}));
  EXPECT_TRUE((P({"1", "1"}) + P({"-1", "-1"})).is_zero());
  EXPECT_EQ((P({"1", "1"}) + P({"-1", "-1"})).degree(), -1);
  EXPECT_EQ(P({"1", "-1"}) * P({"1", "1"}), P({"1", "0", "-1"}));
  EXPECT_EQ(P({"1", "2", "0", "0"}).coeffs().size(), 2u);
}

TEST(PolyArith, RingAxiomsProperty) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(PolyEval, Examples) {
  EXPECT_EQ(P({"1", "2"})(Q(3)), Q(7));
  EXPECT_EQ(RationalPolynomial{}(Q(5, 7)), Q(0));
  EXPECT_EQ(P({"-1/4", "0", "1"})(Q(1, 2)), Q(0));
}

TEST(PolyEval, MultiplicativeProperty) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_poly(rng), b = random_poly(rng);
    auto t = random_rational(rng);
    EXPECT_EQ((a * b)(t), a(t) * b(t));
  }
}

TEST(PolyDerivative, Examples) {
  EXPECT_EQ(P({"0", "0", "1"}).derivative(), P({"0", "2"}));
  auto p = P({"3", "1/2", "-7"});
  EXPECT_EQ(p.derivative(0), p);
  auto q = P({"0", "-1", "0", "1"});
  EXPECT_EQ(q.derivative(2), P({"0", "6"}));
  EXPECT_EQ(q.derivative(2), q.derivative().derivative());
  EXPECT_TRUE(q.derivative(4).is_zero());
}

TEST(PolyDivision, DivmodAndGcd) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_poly(rng, 6), b = random_poly(rng, 3);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  auto g = gcd(P({"-1", "0", "1"}) * P({"2", "1"}), P({"1", "1"}) * P({"5"}));
  EXPECT_EQ(g, P({"1", "1"}));
  EXPECT_THROW(divmod(P({"1"}), RationalPolynomial{}), ParameterError);
}

TEST(RationalFunctionTest, CanonicalForm) {
  RationalFunction f(P({"-1", "0", "1"}), P({"2", "2"}));  // (x^2-1)/(2x+2) = (x-1)/2
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.num(), P({"-1/2", "1/2"}));
  RationalFunction g(P({"1"}), P({"3", "6"}));
  EXPECT_EQ(g.den(), P({"1/2", "1"}));
  EXPECT_EQ(g.num(), P({"1/6"}));
  EXPECT_TRUE((g - g).is_zero());
  EXPECT_EQ((g - g).den(), P({"1"}));
  EXPECT_THROW(RationalFunction(P({"1"}), RationalPolynomial{}), ParameterError);
  // Quotient rule against a hand computation: (1/(x+1))' = -1/(x+1)^2
  RationalFunction h(P({"1"}), P({"1", "1"}));
  EXPECT_EQ(h.derivative(), RationalFunction(P({"-1"}), P({"1", "2", "1"})));
}

TEST(Serialization, PolynomialJson) {
  auto p = P({"1", "-2", "1/2"});
  EXPECT_EQ(poly_to_json(p).dump(), R"(["1/1","-2/1","1/2"])");
  EXPECT_EQ(poly_to_json(RationalPolynomial{}).dump(), "[]");
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto q = random_poly(rng, 8);
    EXPECT_EQ(poly_from_json(json::parse(poly_to_json(q).dump())), q);
  }
  EXPECT_THROW(poly_from_json(json::parse(R"([1, 2])")), ParameterError);
  EXPECT_THROW(poly_from_json(json::parse(R"({"a": 1})")), ParameterError);
}

TEST(Determinant, Examples) {
  auto x = RationalPolynomial::x();
  auto one = P({"1"});
  EXPECT_EQ(determinant(PolyMatrix(2, 2, {x, one, one, x})), P({"-1", "0", "1"}));
  EXPECT_TRUE(determinant(PolyMatrix(2, 2, {one, x, x, x * x})).is_zero());
  EXPECT_EQ(determinant(PolyMatrix(0, 0)), one);
  EXPECT_THROW(determinant(PolyMatrix(2, 3)), DimensionError);
  EXPECT_THROW(PolyMatrix(2, 2, {x}), DimensionError);
}

TEST(Determinant, ZeroPivotsNeedRowSwaps) {
  auto x = RationalPolynomial::x();
  auto one = P({"1"});
  RationalPolynomial zero;
  // Permutation-like matrix: the leading entry is zero.
  PolyMatrix m(3, 3, {zero, one, zero, zero, zero, x, one, zero, zero});
  EXPECT_EQ(determinant(m), determinant_cofactor(m));
  EXPECT_EQ(determinant(m), x);
  PolyMatrix z(3, 3, {zero, one, x, zero, x, one, zero, one, one});
  EXPECT_TRUE(determinant(z).is_zero());
}

TEST(Determinant, BareissMatchesCofactorProperty) {
  std::mt19937_64 rng(2024);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int trial = 0; trial < (n <= 3 ? 40 : 12); ++trial) {
      auto m = random_matrix(rng, n);
      EXPECT_EQ(determinant(m), determinant_cofactor(m)) << "n = " << n;
    }
}

TEST(Determinant, AlternatingProperty) {
  std::mt19937_64 rng(77);
  for (std::size_t n : {3u, 4u})
    for (int trial = 0; trial < 20; ++trial) {
      auto m = random_matrix(rng, n);
      auto swapped = m;
      swapped.swap_rows(0, n - 1);
      EXPECT_EQ(determinant(swapped), -determinant(m));
      auto repeated = m;
      for (std::size_t c = 0; c < n; ++c) repeated(1, c) = repeated(0, c);
      EXPECT_TRUE(determinant(repeated).is_zero());
    }
}

TEST(Determinant, MultilinearProperty) {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_matrix(rng, 3), b = a, sum = a;
    auto s = random_poly(rng, 2);
    for (std::size_t c = 0; c < 3; ++c) {
      b(1, c) = random_poly(rng, 2);
      sum(1, c) = a(1, c) + s * b(1, c);
    }
    EXPECT_EQ(determinant(sum), determinant(a) + s * determinant(b));
  }
}
