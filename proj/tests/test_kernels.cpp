#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "latpair/kernels.hpp"
#include "latpair/numeric.hpp"
#include "support.hpp"

namespace k = latpair::kernels;

TEST(Kernels, PathsWithEastAreSortedCombinations) {
  for (int n = 0; n <= 14; ++n) {
    for (int r = 0; r <= n; ++r) {
      const auto masks = k::paths_with_east(n, r);
      EXPECT_EQ(latpair::BigInt(static_cast<unsigned long>(masks.size())), latpair::binomial(n, r));
      EXPECT_TRUE(std::is_sorted(masks.begin(), masks.end()));
      EXPECT_TRUE(std::adjacent_find(masks.begin(), masks.end()) == masks.end());
      for (auto m : masks) {
        EXPECT_EQ(std::popcount(m), r);
        EXPECT_LT(m, 1u << n);
      }
    }
  }
  EXPECT_THROW(k::paths_with_east(31, 1), std::invalid_argument);
}

TEST(Kernels, SharedAfterStartMatchesVertexSets) {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
      for (std::uint32_t b = 0; b < (1u << n); ++b) {
        std::string wa, wb;
        for (int t = 0; t < n; ++t) {
          wa += ((a >> t) & 1u) ? 'E' : 'N';
          wb += ((b >> t) & 1u) ? 'E' : 'N';
        }
        EXPECT_EQ(k::shared_after_start(a, b, n), testsupport::shared_vertices(wa, wb) - 1);
      }
    }
  }
}

// The OpenMP kernels must reproduce the serial reference exactly.
TEST(Kernels, ParallelEqualsSerialSameEndpoint) {
  for (int n = 0; n <= 12; ++n) {
    for (int r = 0; r <= n; ++r) {
      EXPECT_EQ(k::parallel::same_endpoint_pairs(n, r), k::serial::same_endpoint_pairs(n, r)) << n << " " << r;
    }
  }
}

TEST(Kernels, ParallelEqualsSerialCrossEndpoint) {
  for (int n = 1; n <= 11; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (int s = r + 1; s <= n; ++s) {
        EXPECT_EQ(k::parallel::cross_endpoint_pairs(n, r, s), k::serial::cross_endpoint_pairs(n, r, s));
      }
    }
  }
}

TEST(Kernels, ParallelEqualsSerialFreeWalks) {
  for (int n = 0; n <= 9; ++n) {
    EXPECT_EQ(k::parallel::free_walk_pairs(n), k::serial::free_walk_pairs(n));
    EXPECT_EQ(k::parallel::free_walk_pairs_same_end(n), k::serial::free_walk_pairs_same_end(n));
  }
}

TEST(Kernels, HistogramTotals) {
  for (int n = 0; n <= 10; ++n) {
    std::uint64_t free_total = 0;
    for (auto v : k::serial::free_walk_pairs(n)) free_total += v;
    EXPECT_EQ(free_total, std::uint64_t{1} << (2 * n));
    std::uint64_t same_end = 0;
    for (auto v : k::serial::free_walk_pairs_same_end(n)) same_end += v;
    EXPECT_EQ(latpair::BigInt(static_cast<unsigned long>(same_end)), latpair::binomial(2 * n, n));
  }
}

TEST(Kernels, MaxThreadsIsPositive) { EXPECT_GE(k::parallel::max_threads(), 1); }
