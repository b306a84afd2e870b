#include <gtest/gtest.h>

#include "latpair/verify.hpp"

using namespace latpair;

namespace {

bool same(const CheckReport& a, const CheckReport& b) {
  return a.check_id == b.check_id && a.passed == b.passed && a.instances == b.instances &&
         a.first_failure.has_value() == b.first_failure.has_value();
}

}  // namespace

TEST(Suites, CanonicalNames) {
  EXPECT_EQ(all_suites().size(), 21u);
  EXPECT_EQ(all_suites().front(), "theorem1");
  EXPECT_TRUE(is_suite("barrier"));
  EXPECT_FALSE(is_suite("none"));
}

TEST(SameEndpointCheck, InstanceCount) {
  const CheckReport r = check_theorem1(9);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.instances, 276);  // sum over 2 <= n <= 9 of (n+1)(n-1)
  EXPECT_FALSE(r.first_failure.has_value());
}

TEST(RunAll, EmptySelection) {
  RunConfig c;
  EXPECT_TRUE(run_all(c).empty());
}

TEST(RunAll, UnknownSuiteRejected) {
  RunConfig c;
  c.suites = {"theorem9"};
  EXPECT_THROW(run_all(c), std::invalid_argument);
}

TEST(RunAll, SmokeAtThree) {
  RunConfig c = RunConfig::full();
  c.cap_enumeration(3);
  EXPECT_EQ(c.n_max, 3);
  EXPECT_EQ(c.identity_max, 40);
  for (const auto& r : run_all(c)) EXPECT_TRUE(r.passed) << r.check_id;
}

TEST(RunAll, CanonicalOrderRegardlessOfRequestOrder) {
  RunConfig c;
  c.cap_enumeration(5);
  c.suites = {"vandermonde", "theorem1", "totals"};
  const auto reports = run_all(c);
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[0].check_id, "theorem1");
  EXPECT_EQ(reports[1].check_id, "totals");
  EXPECT_EQ(reports[2].check_id, "vandermonde");
}

TEST(RunAll, DefaultConfigPassesAndIsReproducible) {
  const auto first = run_all(RunConfig::full());
  const auto second = run_all(RunConfig::full());
  ASSERT_EQ(first.size(), all_suites().size());
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_TRUE(first[i].passed) << first[i].check_id << ": "
                                 << (first[i].first_failure ? first[i].first_failure->inputs : "");
    EXPECT_GT(first[i].instances, 0) << first[i].check_id;
    EXPECT_TRUE(same(first[i], second[i]));
  }
}

TEST(LevelSequences, SeededAndBounded) {
  const auto a = seeded_level_sequences(0x5eed2026, 20, 11);
  const auto b = seeded_level_sequences(0x5eed2026, 20, 11);
  const auto c = seeded_level_sequences(1, 20, 11);
  ASSERT_EQ(a.size(), 20u);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].west, b[i].west);
    differs = differs || a[i].west != c[i].west;
    ASSERT_EQ(a[i].west.size(), 11u);
    for (const Rat& p : a[i].west) {
      EXPECT_GE(p, 0);
      EXPECT_LE(p, 1);
      EXPECT_LE(p.get_den(), 16);
    }
  }
  EXPECT_TRUE(differs);
}

TEST(Barrier, SmallGridWithFewModels) {
  RunConfig c;
  c.barrier_max = 2;
  c.level_sum_max = 5;
  c.level_models = 3;
  const CheckReport r = check_barrier(c);
  EXPECT_TRUE(r.passed);
  EXPECT_GT(r.instances, 0);
}
