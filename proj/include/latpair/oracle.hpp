#pragma once

// Ground truth: brute-force pair enumeration and exact dynamic programs for
// the two-walker barrier problem. Nothing here uses a closed form.

#include <cstddef>
#include <map>
#include <set>
#include <variant>
#include <vector>

#include "latpair/lattice.hpp"
#include "latpair/numeric.hpp"

namespace latpair {

inline constexpr int kDefaultOracleSteps = 12;

/// Histogram of pair counts keyed by intersection count. Only nonzero
/// entries are stored.
class CountTable {
 public:
  CountTable() = default;

  void add(long k, const BigCount& count);

  /// Zero for keys that were never added.
  BigCount at(long k) const;
  const BigCount& total() const { return total_; }
  const std::map<long, BigCount>& entries() const { return entries_; }

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  std::map<long, BigCount> entries_;
  BigCount total_ = 0;
};

/// Ordered pairs of paths (0,0) -> (r, n-r), keyed by interior intersections.
CountTable enum_nkr(int n, int r, int max_steps = kDefaultOracleSteps);

/// (r-path, s-path) pairs, r < s, keyed by intersections excluding the start.
CountTable enum_mrs(int n, int r, int s, int max_steps = kDefaultOracleSteps);

/// All 4^n ordered pairs of free n-step walks, keyed by intersections
/// excluding the origin.
CountTable enum_fnk(int n, int max_steps = kDefaultOracleSteps);

/// Ordered pairs of free n-step walks with a common end point, keyed by
/// interior intersections. n >= 1.
CountTable enum_phi(int n, int max_steps = kDefaultOracleSteps);

/// Same as above but on the serial reference kernels.
namespace reference {
CountTable enum_nkr(int n, int r);
CountTable enum_mrs(int n, int r, int s);
CountTable enum_fnk(int n);
CountTable enum_phi(int n);
}  // namespace reference

// ---------------------------------------------------------------------------
// West/South walks towards the origin.

/// Probability of a West step, the same at every point.
struct ConstantProb {
  Rat p;
};

/// Probability of a West step as a function of the level m = x + y.
/// west[0] is level 1, west[1] level 2, and so on; levels past the end reuse
/// the last value and levels below 1 use the first.
struct LevelProb {
  std::vector<Rat> west;
};

using ProbModel = std::variant<ConstantProb, LevelProb>;

/// West-step probability at level m.
const Rat& west_probability(const ProbModel& model, long level);

/// Throws std::invalid_argument if any probability lies outside [0, 1] or a
/// level sequence is empty.
void validate(const ProbModel& model);

/// Walkers U at (a, b+x+1) and L at (a+x+1, b).
struct BarrierConfig {
  long a = 0;
  long b = 0;
  long x = 0;
  ProbModel model = ConstantProb{Rat(1, 2)};

  Point upper_start() const { return {a, b + x + 1}; }
  Point lower_start() const { return {a + x + 1, b}; }
  long steps_to_line() const { return a + b + x; }
};

/// Probability that two synchronous walkers starting at u and l, moving
/// West/South inside the open quadrant and straight along an axis once they
/// reach it, are first at the same point (after time 0) at the origin.
/// u and l must lie on the same level.
Rat first_meeting_at_origin(Point u, Point l, const ProbModel& model);

/// B(a, b, x) by dynamic programming over the joint walker state.
Rat barrier_dp(const BarrierConfig& config);

/// Both walkers start at (a+1, b+1) with constant West probability p.
Rat same_start_dp(long a, long b, const Rat& p);

/// Probability that one unconstrained West/South walker, starting at `start`
/// and taking `steps` steps, ends in `targets`.
Rat unconstrained_endpoint_prob(Point start, long steps, const std::set<Point>& targets,
                                const ProbModel& model);

/// Same, but for a walker that is forced along an axis once it reaches one
/// and stays at the origin once there.
Rat constrained_endpoint_prob(Point start, long steps, const std::set<Point>& targets,
                              const ProbModel& model);

}  // namespace latpair
