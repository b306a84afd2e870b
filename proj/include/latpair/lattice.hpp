#pragma once

// Monotone E/N lattice paths, pairs of paths, and the three
// intersection-counting conventions used throughout the library:
//
//   interior          both shared endpoints excluded (N_k, p(n,k), phi)
//   excluding origin  only the shared origin excluded; shared end counted (f(n,k))
//   excluding start   only the shared start excluded (M^{n,k}_{r,s})
//
// Two paths with a common start that share a vertex reach it after the same
// number of steps, so every count reduces to comparing vertices stepwise.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace latpair {

enum class Step : char { E = 'E', N = 'N' };

struct Point {
  long x = 0;
  long y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

Point advance(Point p, Step s);

std::string to_string(Point p);

class PathNE {
 public:
  PathNE() = default;
  explicit PathNE(std::vector<Step> steps, Point start = {});

  /// Parses a word over {E, N}, e.g. "ENN".
  static PathNE parse(std::string_view word, Point start = {});

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  Point start() const { return start_; }
  Point end() const;
  long east_count() const;

  /// vertex[0] = start, vertex[t+1] = vertex[t] + step[t].
  std::vector<Point> vertices() const;

  /// Vertex after t steps.
  Point vertex(std::size_t t) const;

  std::string word() const;

  friend bool operator==(const PathNE&, const PathNE&) = default;
  friend auto operator<=>(const PathNE& a, const PathNE& b) {
    if (auto c = a.start_ <=> b.start_; c != 0) return c;
    return a.word() <=> b.word();
  }

 private:
  std::vector<Step> steps_;
  Point start_{};
};

/// Two paths with equal length and equal start.
class PathPair {
 public:
  PathPair(PathNE first, PathNE second, bool ordered = true);

  const PathNE& first() const { return first_; }
  const PathNE& second() const { return second_; }
  bool ordered() const { return ordered_; }

 private:
  PathNE first_;
  PathNE second_;
  bool ordered_;
};

/// Number of t in [1, n] with first.vertex(t) == second.vertex(t).
std::size_t stepwise_coincidences(const PathNE& a, const PathNE& b);

/// Shared vertices minus the common start and the common end.
/// Throws std::invalid_argument unless both paths end at the same point.
std::size_t intersections_interior(const PathPair& pair);

/// Shared vertices minus the common origin; a shared end point is counted.
/// Throws std::invalid_argument unless both paths start at (0,0).
std::size_t intersections_excluding_origin(const PathPair& pair);

/// Shared vertices minus the common start; a shared end point is counted.
std::size_t intersections_excluding_start(const PathPair& pair);

}  // namespace latpair
