#pragma once

// The two-to-one map from nonintersecting path pairs on an r x s rectangle
// to pairs that meet in exactly one interior vertex, and its inverse.
//
// Pairs are unordered. A RectPair stores its two paths with `upper` being
// the path that takes the N step where the two first diverge, which for a
// nonintersecting pair is the path lying north of the other throughout.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latpair/lattice.hpp"

namespace latpair {

enum class PairKind { NonIntersecting, OneIntersection };

struct RectPair {
  PathNE upper;
  PathNE lower;
  PairKind kind = PairKind::NonIntersecting;
  std::optional<Point> meeting;  // set iff kind == OneIntersection

  long width() const { return upper.end().x; }
  long height() const { return upper.end().y; }

  friend bool operator==(const RectPair&, const RectPair&) = default;
};

/// Orders the two paths canonically and classifies the pair. Throws if the
/// paths do not share both corners of an r x s rectangle at the origin, or
/// if they meet in more than one interior vertex.
RectPair make_rect_pair(PathNE a, PathNE b);

/// Pairs meeting at (1,0) or (r-1,s) form group I, at (0,1) or (r,s-1)
/// group II, and at an interior vertex group III. On the 1 x 1 rectangle
/// (1,0) = (r,s-1) and (0,1) = (r-1,s); both are assigned to group II.
enum class Group { I, II, III };

struct GroupTag {
  Group group = Group::III;
  /// Group III only: true when one path stays north of the other on both
  /// sides of the meeting point (the pair touches rather than crosses).
  bool north_throughout = false;

  friend bool operator==(const GroupTag&, const GroupTag&) = default;
};

std::string to_string(const GroupTag& tag);

/// Raised when a construction step produces a pair violating its
/// postcondition; `case_label` names the branch.
class ConstructionError : public std::logic_error {
 public:
  ConstructionError(std::string case_label, const std::string& what)
      : std::logic_error(case_label + ": " + what), case_label_(std::move(case_label)) {}
  const std::string& case_label() const { return case_label_; }

 private:
  std::string case_label_;
};

/// min |y2 - y1| over vertices (x, y1) of p and (x, y2) of q.
long dist_at_x(const PathNE& p, const PathNE& q, long x);

enum class PhiCase {
  A,  // distance >= 2 at every inner column
  B,  // first distance-1 column meets below at an interior point
  C,  // first distance-1 column meets at (1, 0)
};

std::string to_string(PhiCase c);

struct PhiImage {
  RectPair first;
  RectPair second;
  PhiCase which = PhiCase::A;
};

/// Both images of a nonintersecting pair. Throws std::invalid_argument on
/// intersecting input or a degenerate rectangle.
PhiImage phi_map(const RectPair& pair);

struct PsiResult {
  RectPair source;
  GroupTag tag;
};

/// Inverse of phi_map on a one-intersection pair.
PsiResult psi_map(const RectPair& pair);

struct Correspondence {
  RectPair source;
  PhiImage images;
  GroupTag first_tag;
  GroupTag second_tag;
};

struct BijectionReport {
  long r = 0;
  long s = 0;
  long nonintersecting = 0;
  long one_intersection = 0;
  bool total = true;        // phi defined on every nonintersecting pair
  bool injective = true;    // the 2 * |source| images are pairwise distinct
  bool exhaustive = true;   // images cover every one-intersection pair
  bool round_trip = true;   // psi(phi(p).first) = psi(phi(p).second) = p
  bool groups_ok = true;    // I/II partners reduce to the same smaller pair
  std::vector<Correspondence> table;
  std::vector<std::string> counterexamples;

  bool counts_ok() const { return one_intersection == 2 * nonintersecting; }
  bool passed() const {
    return total && injective && exhaustive && round_trip && groups_ok && counts_ok();
  }
};

/// Exhaustive check on the r x s rectangle (r, s >= 1). Failures are
/// recorded in the report, never thrown.
BijectionReport verify_bijection(long r, long s, bool keep_table = false);

/// All unordered pairs (with repetition) of paths (0,0) -> (r,s) that meet
/// in exactly `k` interior vertices, k in {0, 1}.
std::vector<RectPair> rect_pairs_with(long r, long s, long k);

}  // namespace latpair
