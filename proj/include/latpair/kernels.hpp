#pragma once

// Brute-force enumeration kernels over bitmask-encoded paths.
//
// A path of n <= kMaxSteps steps is a std::uint32_t whose bit t is set iff
// step t is E. Each kernel returns a histogram indexed by the number of
// shared vertices at steps 1..n (start excluded, end included); callers
// shift that count to the convention they need.
//
// Every kernel exists twice: a serial reference and an OpenMP version that
// splits the outer path index across threads with thread-local histograms.
// Both return identical results for every input.

#include <cstdint>
#include <vector>

namespace latpair::kernels {

inline constexpr int kMaxSteps = 30;

using Histogram = std::vector<std::uint64_t>;

/// All n-step masks with exactly r E steps, in increasing numeric order.
std::vector<std::uint32_t> paths_with_east(int n, int r);

/// Number of t in [1, n] at which the two same-start paths share a vertex.
inline int shared_after_start(std::uint32_t a, std::uint32_t b, int n) {
  int count = 0;
  int diff = 0;
  for (int t = 0; t < n; ++t) {
    diff += static_cast<int>((a >> t) & 1u) - static_cast<int>((b >> t) & 1u);
    count += diff == 0;
  }
  return count;
}

namespace serial {

/// Ordered pairs of (n, r) paths; histogram size n + 1.
Histogram same_endpoint_pairs(int n, int r);

/// (r-path, s-path) pairs, r != s; histogram size n + 1.
Histogram cross_endpoint_pairs(int n, int r, int s);

/// All 4^n ordered pairs of free n-step walks; histogram size n + 1.
Histogram free_walk_pairs(int n);

/// Ordered pairs of free n-step walks ending at the same point.
Histogram free_walk_pairs_same_end(int n);

}  // namespace serial

namespace parallel {

Histogram same_endpoint_pairs(int n, int r);
Histogram cross_endpoint_pairs(int n, int r, int s);
Histogram free_walk_pairs(int n);
Histogram free_walk_pairs_same_end(int n);

/// Threads OpenMP would use; 1 when built without OpenMP.
int max_threads();

}  // namespace parallel

}  // namespace latpair::kernels
