#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace exlag;
using namespace exlag::test;

namespace {

const BigRational c_neg = BigRational(-17, 4);

std::vector<std::vector<BigRational>> segments_of(const PairF& F) {
  return build_segments(AdmissibilityInstance(c_neg, F)).segments;
}

std::vector<BigRational> R(std::initializer_list<const char*> xs) {
  std::vector<BigRational> out;
  for (const char* x : xs) out.push_back(BigRational::parse(x));
  return out;
}

AdmissibilityInstance random_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> p(-60, 60), q(1, 8);
  for (;;) {
    BigRational c(p(rng), q(rng));
    if (is_nonpositive_integer(c)) continue;
    return AdmissibilityInstance(c, PairF(random_set(rng, 4, 12), random_set(rng, 4, 12)));
  }
}

}  // namespace

TEST(Instance, CHatUsesFloor) {
  EXPECT_EQ(AdmissibilityInstance(c_neg, PairF{}).c_hat, 5);
  EXPECT_EQ(AdmissibilityInstance(Q(-1, 2), PairF{}).c_hat, 1);
  EXPECT_EQ(AdmissibilityInstance(Q(1, 2), PairF{}).c_hat, 0);
  EXPECT_EQ(AdmissibilityInstance(Q(3), PairF{}).c_hat, 0);
  EXPECT_THROW(AdmissibilityInstance(Q(0), PairF{}), ParameterError);
  EXPECT_THROW(AdmissibilityInstance(Q(-3), PairF{}), ParameterError);
}

TEST(Direct, WorkedExamples) {
  auto v1 = is_admissible_direct(AdmissibilityInstance(c_neg, PairF({1, 2, 8, 9}, {1, 2})));
  EXPECT_FALSE(v1.admissible);
  ASSERT_TRUE(v1.witness.has_value());
  EXPECT_LT(v1.witness_value->sign(), 0);
  EXPECT_TRUE(is_admissible_direct(AdmissibilityInstance(c_neg, PairF({1, 2, 5, 8, 9}, {1, 2}))).admissible);
  EXPECT_TRUE(is_admissible_direct(AdmissibilityInstance(c_neg, PairF({1, 2, 4, 8, 9}, {1, 2}))).admissible);
  auto trivial = is_admissible_direct(AdmissibilityInstance(Q(1, 2), PairF{}));
  EXPECT_TRUE(trivial.admissible);
  EXPECT_EQ(admissibility_quotient(AdmissibilityInstance(Q(1, 2), PairF{}), 7), Q(1));
}

TEST(Direct, ZeroIsNotAViolation) {
  AdmissibilityInstance inst(Q(1, 2), PairF({1, 2}, {}));
  EXPECT_EQ(admissibility_quotient(inst, 1), Q(0));
  EXPECT_TRUE(is_admissible_direct(inst).admissible);
}

TEST(Hermite, Examples) {
  EXPECT_TRUE(hermite_admissible({1, 2}));
  EXPECT_FALSE(hermite_admissible({1, 2, 4}));
  EXPECT_FALSE(is_admissible_direct(AdmissibilityInstance(Q(1), PairF({1, 2, 4}, {}))).admissible);
  EXPECT_TRUE(hermite_admissible({}));
  EXPECT_TRUE(hermite_admissible({3, 4, 7, 8, 9, 10}));
  EXPECT_FALSE(hermite_admissible({5}));
}

TEST(Segments, AugmentedSet) {
  auto sd = build_segments(AdmissibilityInstance(c_neg, PairF({}, {1, 2})));
  EXPECT_EQ(sd.s_elements, R({"1/4", "5/4", "17/4"}));
  EXPECT_EQ(sd.s_prefix(7), R({"0", "1/4", "1", "5/4", "2", "3", "4", "17/4", "5", "6", "7"}));
}

TEST(Segments, WorkedCases) {
  auto sd = build_segments(AdmissibilityInstance(c_neg, PairF({1, 2, 8, 9}, {1, 2})));
  EXPECT_EQ(sd.g_set, R({"1/4", "1", "5/4", "2", "17/4", "8", "9"}));
  EXPECT_EQ(sd.segments, (std::vector<std::vector<BigRational>>{R({"1/4", "1", "5/4", "2"}), R({"17/4"}), R({"8", "9"})}));
  EXPECT_EQ(segments_of(PairF({1, 2, 5, 8, 9}, {1, 2})),
            (std::vector<std::vector<BigRational>>{R({"1/4", "1", "5/4", "2"}), R({"17/4", "5"}), R({"8", "9"})}));
  EXPECT_EQ(segments_of(PairF({1, 2, 4, 8, 9}, {1, 2})),
            (std::vector<std::vector<BigRational>>{R({"1/4", "1", "5/4", "2"}), R({"4", "17/4"}), R({"8", "9"})}));
  EXPECT_FALSE(is_admissible_segments(AdmissibilityInstance(c_neg, PairF({1, 2, 8, 9}, {1, 2}))));
  EXPECT_TRUE(is_admissible_segments(AdmissibilityInstance(c_neg, PairF({1, 2, 4, 8, 9}, {1, 2}))));
  EXPECT_TRUE(is_admissible_segments(AdmissibilityInstance(c_neg, PairF({1, 2, 5, 8, 9}, {1, 2}))));
}

TEST(Segments, NonnegativeC) {
  EXPECT_THROW(build_segments(AdmissibilityInstance(Q(3), PairF({1, 2}, {7}))), ParameterError);
  AdmissibilityInstance inst(Q(3), PairF({1, 2}, {7}));
  EXPECT_TRUE(is_admissible_segments(inst));
  EXPECT_TRUE(is_admissible_direct(inst).admissible);
}

TEST(Segments, CoverAndDisjointProperty) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    auto inst = random_instance(rng);
    if (inst.c.sign() >= 0) continue;
    auto sd = build_segments(inst);
    std::vector<BigRational> flat;
    for (const auto& s : sd.segments) flat.insert(flat.end(), s.begin(), s.end());
    EXPECT_EQ(flat, sd.g_set);
  }
}

TEST(Equivalence, RandomCorpusProperty) {
  std::mt19937_64 rng(2024);
  int admissible = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    auto inst = random_instance(rng);
    const bool direct = is_admissible_direct(inst).admissible;
    EXPECT_EQ(direct, is_admissible_segments(inst)) << "c=" << inst.c << " F=" << inst.pair.to_string();
    admissible += direct;
  }
  EXPECT_GT(admissible, 0);
}

TEST(Horizon, SoundnessProperty) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    auto inst = random_instance(rng);
    const long h = scan_horizon(inst);
    for (long n = h + 1; n <= h + 50; ++n) ASSERT_GT(admissibility_quotient(inst, n).sign(), 0);
  }
}

TEST(Hermite, NonnegativeCReductionProperty) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> p(1, 60), q(1, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    AdmissibilityInstance inst(BigRational(p(rng), q(rng)), PairF(random_set(rng, 4, 12), random_set(rng, 4, 12)));
    EXPECT_EQ(is_admissible_direct(inst).admissible, hermite_admissible(inst.pair.f1()));
  }
}

TEST(Segments, MonotoneParityProperty) {
  // Appending a run of fresh integers beyond every existing point of G adds
  // exactly one new segment of that length.
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto inst = random_instance(rng);
    if (!is_admissible_segments(inst)) continue;
    long start = std::max(scan_horizon(inst), inst.pair.f1().empty() ? 0L : inst.pair.f1().back()) + 2;
    for (long len = 1; len <= 4; ++len) {
      auto f1 = inst.pair.f1();
      for (long j = 0; j < len; ++j) f1.push_back(start + j);
      AdmissibilityInstance ext(inst.c, PairF(f1, inst.pair.f2()));
      EXPECT_EQ(is_admissible_segments(ext), len % 2 == 0);
      EXPECT_EQ(is_admissible_direct(ext).admissible, len % 2 == 0);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}
