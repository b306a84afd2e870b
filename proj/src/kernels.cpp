#include "latpair/kernels.hpp"

#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latpair::kernels {

namespace {

void check_steps(int n) {
  if (n < 0 || n > kMaxSteps) {
    throw std::invalid_argument("step count must lie in [0, " + std::to_string(kMaxSteps) + "]");
  }
}

std::vector<std::uint32_t> all_walks(int n) {
  std::vector<std::uint32_t> out(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < out.size(); ++m) out[m] = m;
  return out;
}

// Walks grouped by east count; index e holds every mask with popcount e.
std::vector<std::vector<std::uint32_t>> walks_by_east(int n) {
  std::vector<std::vector<std::uint32_t>> out(static_cast<std::size_t>(n) + 1);
  for (int e = 0; e <= n; ++e) out[static_cast<std::size_t>(e)] = paths_with_east(n, e);
  return out;
}

void accumulate_serial(const std::vector<std::uint32_t>& left,
                       const std::vector<std::uint32_t>& right, int n, Histogram& hist) {
  for (std::uint32_t a : left) {
    for (std::uint32_t b : right) ++hist[static_cast<std::size_t>(shared_after_start(a, b, n))];
  }
}

void accumulate_parallel(const std::vector<std::uint32_t>& left,
                         const std::vector<std::uint32_t>& right, int n, Histogram& hist) {
  const std::size_t bins = hist.size();
  const auto rows = static_cast<std::int64_t>(left.size());
#pragma omp parallel
  {
    Histogram local(bins, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < rows; ++i) {
      const std::uint32_t a = left[static_cast<std::size_t>(i)];
      for (std::uint32_t b : right) ++local[static_cast<std::size_t>(shared_after_start(a, b, n))];
    }
#pragma omp critical
    for (std::size_t k = 0; k < bins; ++k) hist[k] += local[k];
  }
}

}  // namespace

std::vector<std::uint32_t> paths_with_east(int n, int r) {
  check_steps(n);
  if (r < 0 || r > n) throw std::invalid_argument("east count must lie in [0, n]");
  std::vector<std::uint32_t> out;
  if (r == 0) {
    out.push_back(0);
    return out;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t m = (std::uint64_t{1} << r) - 1;
  while (m < limit) {
    out.push_back(static_cast<std::uint32_t>(m));
    // Gosper's hack: next larger integer with the same popcount.
    const std::uint64_t low = m & (~m + 1);
    const std::uint64_t ripple = m + low;
    m = (((ripple ^ m) >> 2) / low) | ripple;
  }
  return out;
}

namespace serial {

Histogram same_endpoint_pairs(int n, int r) {
  const auto paths = paths_with_east(n, r);
  Histogram hist(static_cast<std::size_t>(n) + 1, 0);
  accumulate_serial(paths, paths, n, hist);
  return hist;
}

Histogram cross_endpoint_pairs(int n, int r, int s) {
  const auto left = paths_with_east(n, r);
  const auto right = paths_with_east(n, s);
  Histogram hist(static_cast<std::size_t>(n) + 1, 0);
  accumulate_serial(left, right, n, hist);
  return hist;
}

Histogram free_walk_pairs(int n) {
  check_steps(n);
  const auto walks = all_walks(n);
  Histogram hist(static_cast<std::size_t>(n) + 1, 0);
  accumulate_serial(walks, walks, n, hist);
  return hist;
}

Histogram free_walk_pairs_same_end(int n) {
  check_steps(n);
  Histogram hist(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& group : walks_by_east(n)) accumulate_serial(group, group, n, hist);
  return hist;
}

}  // namespace serial

namespace parallel {

Histogram same_endpoint_pairs(int n, int r) {
  const auto paths = paths_with_east(n, r);
  Histogram hist(static_cast<std::size_t>(n) + 1, 0);
  accumulate_parallel(paths, paths, n, hist);
  return hist;
}

Histogram cross_endpoint_pairs(int n, int r, int s) {
  const auto left = paths_with_east(n, r);
  const auto right = paths_with_east(n, s);
  Histogram hist(static_cast<std::size_t>(n) + 1, 0);
  accumulate_parallel(left, right, n, hist);
  return hist;
}

Histogram free_walk_pairs(int n) {
  check_steps(n);
  const auto walks = all_walks(n);
  Histogram hist(static_cast<std::size_t>(n) + 1, 0);
  accumulate_parallel(walks, walks, n, hist);
  return hist;
}

Histogram free_walk_pairs_same_end(int n) {
  check_steps(n);
  Histogram hist(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& group : walks_by_east(n)) accumulate_parallel(group, group, n, hist);
  return hist;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace parallel

}  // namespace latpair::kernels
