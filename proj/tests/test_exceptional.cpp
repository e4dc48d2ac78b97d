#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace exlag;
using namespace exlag::test;

TEST(PairFTest, Validation) {
  PairF F({3, 1}, {2});
  EXPECT_EQ(F.f1(), (std::vector<long>{1, 3}));
  EXPECT_EQ(F.k(), 3);
  EXPECT_THROW(PairF({0}, {}), ParameterError);
  EXPECT_THROW(PairF({}, {-2}), ParameterError);
  EXPECT_THROW(PairF({2, 2}, {}), ParameterError);
  EXPECT_EQ(pair_from_string(R"({"f1":[1,2],"f2":[3]})"), PairF({1, 2}, {3}));
  EXPECT_EQ(pair_from_string(R"({"f2":[3]})"), PairF({}, {3}));
  EXPECT_THROW(pair_from_string(R"({"f1":[1,2],"f3":[3]})"), ParameterError);
  EXPECT_THROW(pair_from_string(R"({"f1":[1.5]})"), ParameterError);
  EXPECT_THROW(pair_from_string(R"({"f1":[1)"), ParameterError);
}

TEST(PairUf, Examples) {
  EXPECT_EQ(pair_uf(PairF{}), 0);
  EXPECT_EQ(pair_uf(PairF({1}, {})), 0);
  EXPECT_EQ(pair_uf(PairF({}, {1})), 1);
  EXPECT_EQ(pair_uf(PairF({1, 2}, {3})), 3);
  EXPECT_EQ(pair_uf(PairF({2, 5}, {1, 4})), 7 - 3 + 5 - 1);
}

TEST(PairUf, NonnegativeOnCorpus) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    PairF F(random_set(rng, 5, 15), random_set(rng, 5, 15));
    EXPECT_GE(pair_uf(F), F.k2());
  }
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma_prefix(PairF{}, 4), (std::vector<long>{0, 1, 2, 3}));
  EXPECT_EQ(sigma_prefix(PairF({1}, {}), 4), (std::vector<long>{0, 2, 3, 4}));
  EXPECT_EQ(sigma_prefix(PairF({}, {1}), 3), (std::vector<long>{1, 2, 3}));
  EXPECT_EQ(sigma_prefix(PairF({1, 2}, {3}), 6), (std::vector<long>{3, 6, 7, 8, 9, 10}));
  SigmaF s(PairF({1, 2}, {3}));
  EXPECT_FALSE(s.contains(2));
  EXPECT_FALSE(s.contains(4));
  EXPECT_TRUE(s.contains(3));
}

TEST(Omega, Examples) {
  const auto a = Q(2, 7);
  EXPECT_EQ(omega(PairF{}, a), P({"1"}));
  EXPECT_EQ(omega(PairF({1}, {}), a), (RationalPolynomial{a + Q(1), Q(-1)}));
  EXPECT_EQ(omega(PairF({}, {1}), a), (RationalPolynomial{a + Q(1), Q(1)}));
  // (empty, {1,2}) at 1/2: L_1(-x) L_2^{3/2}(-x) - L_1^{3/2}(-x) L_2(-x)
  const auto h = Q(1, 2);
  auto oracle = laguerre_reflected(1, h, 0) * laguerre_reflected(2, h, 1) - laguerre_reflected(1, h, 1) * laguerre_reflected(2, h, 0);
  EXPECT_EQ(omega(PairF({}, {1, 2}), h), oracle);
  EXPECT_EQ(oracle, P({"15/8", "3/2", "1/2"}));
  EXPECT_EQ(omega(PairF({1, 2}, {3}), Q(1, 3)),
            P({"-21280/729", "-2128/243", "608/81", "-19/27", "-17/18", "-1/12"}));
}

TEST(Omega, SingletonPairsProperty) {
  for (const auto& a : {Q(1, 2), Q(-1, 3), Q(4)})
    for (long f = 1; f <= 8; ++f) {
      EXPECT_EQ(omega(PairF({f}, {}), a), laguerre_poly(static_cast<unsigned>(f), a));
      EXPECT_EQ(omega(PairF({}, {f}), a), laguerre_poly(static_cast<unsigned>(f), a).reflect());
    }
}

TEST(Omega, Errors) {
  EXPECT_THROW(omega(PairF({1}, {}), Q(-2)), ParameterError);
  // alpha = -2 is excluded, but alpha = -1/2 with F2 rows is fine.
  EXPECT_NO_THROW(omega(PairF({}, {1, 2}), Q(-1, 2)));
}

TEST(ExceptionalPoly, Examples) {
  const auto a = Q(3, 5);
  for (long n = 0; n <= 20; ++n) EXPECT_EQ(exceptional_poly(n, PairF{}, a), laguerre_poly(static_cast<unsigned>(n), a));
  EXPECT_EQ(exceptional_poly(0, PairF({1}, {}), a), P({"-1"}));
  EXPECT_EQ(exceptional_poly(1, PairF({}, {1}), a), (RationalPolynomial{a + Q(2), Q(1)}));
  EXPECT_EQ(exceptional_poly(3, PairF({1, 2}, {3}), Q(1, 3)), P({"-1976/81", "-152/9", "-19/6", "-1/6"}));
}

TEST(ExceptionalPoly, TwoByTwoCofactorOracle) {
  // F = ({f}, empty): det [[L_n, L_n'], [L_f, L_f']] = L_n L_f' - L_n' L_f
  const auto a = Q(1, 2);
  for (long f = 1; f <= 4; ++f)
    for (long n : sigma_prefix(PairF({f}, {}), 5)) {
      const long u = pair_uf(PairF({f}, {}));
      auto ln = laguerre_poly(static_cast<unsigned>(n - u), a);
      auto lf = laguerre_poly(static_cast<unsigned>(f), a);
      EXPECT_EQ(exceptional_poly(n, PairF({f}, {}), a), ln * lf.derivative() - ln.derivative() * lf);
    }
}

TEST(ExceptionalPoly, IndexError) {
  EXPECT_THROW(exceptional_poly(1, PairF({1}, {}), Q(1, 2)), IndexError);
  EXPECT_THROW(exceptional_poly(0, PairF({}, {1}), Q(1, 2)), IndexError);
  EXPECT_THROW(exceptional_poly(4, PairF({1, 2}, {3}), Q(1, 2)), IndexError);
}

TEST(ExceptionalOperator, Examples) {
  const auto a = Q(1, 2);
  EXPECT_EQ(exceptional_operator(PairF{}, a), classical_operator(a));

  // F = ({1}, empty): h1 = a + 2 - x - 2x(-1)/(a + 1 - x)
  auto op1 = exceptional_operator(PairF({1}, {}), a);
  RationalPolynomial om1{a + Q(1), Q(-1)};
  auto h1 = RationalFunction(RationalPolynomial{a + Q(2), Q(-1)}) +
            RationalFunction(RationalPolynomial{Q(0), Q(2)}, om1);
  EXPECT_EQ(op1.coeff(1), h1);
  EXPECT_EQ(op1.coeff(2), RationalFunction(RationalPolynomial::x()));

  // F = (empty, {1}): h0 = -1 + (x - a - 1)/(a + 1 + x)
  auto op2 = exceptional_operator(PairF({}, {1}), a);
  RationalPolynomial om2{a + Q(1), Q(1)};
  auto h0 = RationalFunction(P({"-1"})) + RationalFunction(RationalPolynomial{-a - Q(1), Q(1)}, om2);
  EXPECT_EQ(op2.coeff(0), h0);
}

TEST(VerifyEigen, Examples) {
  auto c0 = verify_eigen(3, PairF{}, Q(1, 2));
  EXPECT_TRUE(c0.ok);
  EXPECT_TRUE(c0.residual.is_zero());
  EXPECT_TRUE(verify_eigen(0, PairF({1}, {}), Q(1, 2)).ok);
  for (long n : sigma_prefix(PairF({1, 2}, {3}), 6)) EXPECT_TRUE(verify_eigen(n, PairF({1, 2}, {3}), Q(1, 3)).ok) << n;
  EXPECT_THROW(verify_eigen(4, PairF({1, 2}, {3}), Q(1, 3)), IndexError);
}

TEST(VerifyEigen, DetectsWrongEigenvalue) {
  // The same residual with a shifted eigenvalue must be nonzero: the check is not vacuous.
  const PairF F({2}, {1});
  const auto a = Q(1, 3);
  const long n = sigma_prefix(F, 3).back();
  auto p = exceptional_poly(n, F, a);
  auto op = exceptional_operator(F, a);
  EXPECT_FALSE((op.apply(p) + RationalFunction(p * BigRational(n + 1))).is_zero());
  EXPECT_TRUE((op.apply(p) + RationalFunction(p * BigRational(n))).is_zero());
}

TEST(VerifyEigen, FirstEightIndicesProperty) {
  const std::vector<PairF> pairs{PairF({1}, {}), PairF({}, {2}), PairF({2, 3}, {}), PairF({1}, {1}),
                                 PairF({}, {1, 3}), PairF({1, 4}, {2}), PairF({3}, {1, 2})};
  for (const auto& a : {Q(1, 2), Q(2, 3), Q(-1, 3), Q(5, 2)})
    for (const auto& F : pairs)
      for (long n : sigma_prefix(F, 8)) EXPECT_TRUE(verify_eigen(n, F, a).ok) << F.to_string() << " n=" << n << " a=" << a;
}

TEST(ExceptionalPoly, DegreeObservation) {
  // Recorded observation rather than an invariant: deg L_n^{a;F} = n on the
  // admissible part of a small corpus.
  int checked = 0;
  for (const auto& F : {PairF({1, 2}, {}), PairF({}, {1}), PairF({1, 2}, {3}), PairF({}, {2, 3})})
    for (const auto& a : {Q(1, 2), Q(7, 2)}) {
      if (!is_admissible_segments(AdmissibilityInstance(a + Q(1), F))) continue;
      for (long n : sigma_prefix(F, 5)) {
        EXPECT_EQ(exceptional_poly(n, F, a).degree(), n) << F.to_string() << " n=" << n;
        ++checked;
      }
    }
  EXPECT_GT(checked, 0);
}

TEST(Weight, Examples) {
  auto w0 = weight(PairF{}, Q(1, 2));
  EXPECT_EQ(w0.exponent, Q(1, 2));
  EXPECT_EQ(w0.omega, P({"1"}));
  auto w1 = weight(PairF({1}, {}), Q(1, 2));
  EXPECT_EQ(w1.exponent, Q(3, 2));
  EXPECT_EQ(w1.omega, P({"3/2", "-1"}));
  auto w2 = weight(PairF({}, {1, 2}), Q(1, 2));
  EXPECT_EQ(w2.exponent, Q(5, 2));
  EXPECT_EQ(w2.omega, P({"15/8", "3/2", "1/2"}));
}

TEST(ReducePair, Examples) {
  EXPECT_EQ(reduce_pair(PairF({1, 2}, {3}), 1), PairF({1}, {3}));
  EXPECT_EQ(reduce_pair(PairF({1}, {}), 1), PairF{});
  EXPECT_EQ(reduce_pair(PairF({1, 2}, {3}), 2), PairF({1, 2}, {}));
  EXPECT_THROW(reduce_pair(PairF{}, 1), ReductionError);
  EXPECT_THROW(reduce_pair(PairF({1}, {}), 2), ReductionError);
  EXPECT_THROW(reduce_pair(PairF({1}, {}), 3), ParameterError);
}
