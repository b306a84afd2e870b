#include "latpair/bijection.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "latpair/kernels.hpp"

namespace latpair {

namespace {

using Steps = std::vector<Step>;

Steps concat(Steps a, const Steps& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Steps slice(const Steps& s, std::size_t from, std::size_t to) {
  return Steps(s.begin() + static_cast<std::ptrdiff_t>(from),
               s.begin() + static_cast<std::ptrdiff_t>(to));
}

Steps tail(const Steps& s, std::size_t from) { return slice(s, from, s.size()); }

// Step count after which `p` sits at `v`.
std::size_t index_of(const PathNE& p, Point v) {
  const auto verts = p.vertices();
  const auto it = std::find(verts.begin(), verts.end(), v);
  if (it == verts.end()) {
    throw std::logic_error("path " + p.word() + " does not visit " + to_string(v));
  }
  return static_cast<std::size_t>(it - verts.begin());
}

std::pair<long, long> column_range(const PathNE& p, long x) {
  long lo = 0;
  long hi = -1;
  for (Point v : p.vertices()) {
    if (v.x != x) continue;
    if (hi < lo) {
      lo = hi = v.y;
    } else {
      lo = std::min(lo, v.y);
      hi = std::max(hi, v.y);
    }
  }
  if (hi < lo) throw std::logic_error("path " + p.word() + " has no vertex in column " + std::to_string(x));
  return {lo, hi};
}

// Interior vertices shared by two paths with common ends.
std::vector<Point> shared_interior(const PathNE& a, const PathNE& b) {
  std::vector<Point> out;
  const auto va = a.vertices();
  const auto vb = b.vertices();
  for (std::size_t t = 1; t + 1 < va.size(); ++t) {
    if (va[t] == vb[t]) out.push_back(va[t]);
  }
  return out;
}

std::pair<Steps, Steps> swap_tails(const Steps& a, const Steps& b, std::size_t t) {
  return {concat(slice(a, 0, t), tail(b, t)), concat(slice(b, 0, t), tail(a, t))};
}

// Builds an image pair and checks it meets exactly once, at `expected`.
RectPair checked_image(const std::string& label, Steps a, Steps b, long r, long s, Point expected) {
  PathNE pa(std::move(a));
  PathNE pb(std::move(b));
  const Point corner{r, s};
  if (pa.end() != corner || pb.end() != corner) {
    throw ConstructionError(label, "image " + pa.word() + "/" + pb.word() + " does not end at " +
                                       to_string(corner));
  }
  RectPair out;
  try {
    out = make_rect_pair(std::move(pa), std::move(pb));
  } catch (const std::invalid_argument& e) {
    throw ConstructionError(label, e.what());
  }
  if (out.kind != PairKind::OneIntersection || out.meeting != expected) {
    throw ConstructionError(label, "image " + out.upper.word() + "/" + out.lower.word() +
                                       " does not meet only at " + to_string(expected));
  }
  return out;
}

PsiResult checked_source(const std::string& label, Steps upper, Steps lower, GroupTag tag) {
  RectPair out;
  try {
    out = make_rect_pair(PathNE(std::move(upper)), PathNE(std::move(lower)));
  } catch (const std::invalid_argument& e) {
    throw ConstructionError(label, e.what());
  }
  if (out.kind != PairKind::NonIntersecting) {
    throw ConstructionError(label, "preimage " + out.upper.word() + "/" + out.lower.word() +
                                       " still intersects");
  }
  return {std::move(out), tag};
}

bool arrives_east(const Steps& s, std::size_t t) { return t > 0 && s[t - 1] == Step::E; }

}  // namespace

RectPair make_rect_pair(PathNE a, PathNE b) {
  if (a.start() != Point{0, 0} || b.start() != Point{0, 0}) {
    throw std::invalid_argument("rectangle paths must start at (0,0)");
  }
  if (a.end() != b.end()) throw std::invalid_argument("rectangle paths must share an end point");
  const auto& sa = a.steps();
  const auto& sb = b.steps();
  const auto diverge = std::mismatch(sa.begin(), sa.end(), sb.begin());
  if (diverge.first != sa.end() && *diverge.first == Step::E) std::swap(a, b);

  const auto shared = shared_interior(a, b);
  if (shared.size() > 1) {
    throw std::invalid_argument("pair " + a.word() + "/" + b.word() + " meets " +
                                std::to_string(shared.size()) + " times");
  }
  RectPair out{std::move(a), std::move(b), PairKind::NonIntersecting, std::nullopt};
  if (shared.size() == 1) {
    out.kind = PairKind::OneIntersection;
    out.meeting = shared.front();
  }
  return out;
}

std::string to_string(const GroupTag& tag) {
  switch (tag.group) {
    case Group::I:
      return "I";
    case Group::II:
      return "II";
    case Group::III:
      return tag.north_throughout ? "III-touching" : "III-crossing";
  }
  return "?";
}

std::string to_string(PhiCase c) {
  switch (c) {
    case PhiCase::A:
      return "A";
    case PhiCase::B:
      return "B";
    case PhiCase::C:
      return "C";
  }
  return "?";
}

long dist_at_x(const PathNE& p, const PathNE& q, long x) {
  const long r = std::max(p.end().x, q.end().x);
  if (x < 0 || x > r) throw std::invalid_argument("column outside the rectangle");
  const auto [plo, phi] = column_range(p, x);
  const auto [qlo, qhi] = column_range(q, x);
  if (phi < qlo) return qlo - phi;
  if (qhi < plo) return plo - qhi;
  return 0;
}

PhiImage phi_map(const RectPair& pair) {
  if (pair.kind != PairKind::NonIntersecting) {
    throw std::invalid_argument("phi is defined on nonintersecting pairs only");
  }
  const long r = pair.width();
  const long s = pair.height();
  if (r < 1 || s < 1) throw std::invalid_argument("phi needs r >= 1 and s >= 1");
  const Steps& p = pair.upper.steps();
  const Steps& q = pair.lower.steps();
  if (p.front() != Step::N || q.front() != Step::E || p.back() != Step::E ||
      q.back() != Step::N) {
    throw std::invalid_argument("nonintersecting pair is not strictly separated");
  }

  std::optional<long> x0;
  for (long x = 1; x <= r - 1; ++x) {
    if (dist_at_x(pair.upper, pair.lower, x) == 1) {
      x0 = x;
      break;
    }
  }

  PhiImage out;
  if (!x0) {
    // Shift the upper path down (dropping its first N, appending one) or
    // the lower path up (dropping its last N, prepending one).
    out.which = PhiCase::A;
    out.first = checked_image("phi case A (first)", concat(tail(p, 1), {Step::N}), q, r, s,
                              {r, s - 1});
    out.second = checked_image("phi case A (second)", p, concat({Step::N}, slice(q, 0, q.size() - 1)),
                               r, s, {0, 1});
    return out;
  }

  const long y0 = column_range(pair.lower, *x0).second;
  const Point meet{*x0, y0};
  // Lower the upper path up to (x0, y0+1) and move its first N edge there.
  const std::size_t m = index_of(pair.upper, {*x0, y0 + 1});
  Steps lowered = concat(concat(slice(p, 1, m), {Step::N}), tail(p, m));
  const std::string tag = meet == Point{1, 0} ? "phi case C" : "phi case B";
  out.first = checked_image(tag + " (first)", lowered, q, r, s, meet);

  if (meet != Point{1, 0}) {
    out.which = PhiCase::B;
    const auto [a, b] = swap_tails(lowered, q, index_of(PathNE(lowered), meet));
    out.second = checked_image("phi case B (second)", a, b, r, s, meet);
  } else {
    // Move the shared first E edge to the north-east corner.
    out.which = PhiCase::C;
    out.second = checked_image("phi case C (second)", concat(tail(lowered, 1), {Step::E}),
                               concat(tail(q, 1), {Step::E}), r, s, {r - 1, s});
  }
  return out;
}

PsiResult psi_map(const RectPair& pair) {
  if (pair.kind != PairKind::OneIntersection || !pair.meeting) {
    throw std::invalid_argument("psi is defined on one-intersection pairs only");
  }
  const long r = pair.width();
  const long s = pair.height();
  Point v = *pair.meeting;
  Steps a = pair.upper.steps();
  Steps b = pair.lower.steps();

  if (v == Point{0, 1} || v == Point{r, s - 1}) {
    if (v == Point{0, 1} && v != Point{r, s - 1}) {
      // Trade the shared first N edge for a shared last N edge.
      a = concat(tail(a, 1), {Step::N});
      b = concat(tail(b, 1), {Step::N});
      v = {r, s - 1};
    }
    const std::size_t t = static_cast<std::size_t>(r + s - 1);
    if (!arrives_east(a, t)) std::swap(a, b);
    // Lift the upper path except its final N edge, which moves to the start.
    return checked_source("psi group II", concat({Step::N}, slice(a, 0, a.size() - 1)), b,
                          {Group::II, false});
  }

  if (v == Point{1, 0} || v == Point{r - 1, s}) {
    if (v == Point{r - 1, s}) {
      a = concat({Step::E}, slice(a, 0, a.size() - 1));
      b = concat({Step::E}, slice(b, 0, b.size() - 1));
    }
    if (a[1] != Step::N) std::swap(a, b);
    // Lift the shared first E edge of the upper path above its N step.
    Steps lifted = a;
    std::swap(lifted[0], lifted[1]);
    return checked_source("psi group I", lifted, b, {Group::I, false});
  }

  const std::size_t t = static_cast<std::size_t>(v.x + v.y);
  if (!arrives_east(a, t)) std::swap(a, b);
  const bool touching = a[t] == Step::N;
  if (!touching) std::tie(a, b) = swap_tails(a, b, t);
  if (a[t] != Step::N) throw ConstructionError("psi group III", "no N edge leaves the meeting point");
  // Lift the part before the meeting and return its N edge to the start.
  Steps lifted = concat(concat({Step::N}, slice(a, 0, t)), tail(a, t + 1));
  return checked_source("psi group III", lifted, b, {Group::III, touching});
}

std::vector<RectPair> rect_pairs_with(long r, long s, long k) {
  if (r < 0 || s < 0) throw std::invalid_argument("rectangle sides must be nonnegative");
  if (k < 0 || k > 1) throw std::invalid_argument("rect_pairs_with supports k in {0, 1}");
  const int n = static_cast<int>(r + s);
  std::vector<PathNE> paths;
  for (std::uint32_t mask : kernels::paths_with_east(n, static_cast<int>(r))) {
    Steps steps;
    for (int t = 0; t < n; ++t) steps.push_back(((mask >> t) & 1u) ? Step::E : Step::N);
    paths.emplace_back(std::move(steps));
  }
  std::vector<RectPair> out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i; j < paths.size(); ++j) {
      if (static_cast<long>(shared_interior(paths[i], paths[j]).size()) != k) continue;
      out.push_back(make_rect_pair(paths[i], paths[j]));
    }
  }
  return out;
}

namespace {

using Key = std::pair<std::string, std::string>;

Key key_of(const RectPair& p) { return {p.upper.word(), p.lower.word()}; }

std::string describe(const RectPair& p) {
  std::string out = p.upper.word() + "/" + p.lower.word();
  if (p.meeting) out += "@" + to_string(*p.meeting);
  return out;
}

// Canonical unordered words of a pair with the given double edges removed.
Key reduced(Steps a, Steps b, bool from_front) {
  if (from_front) {
    a.erase(a.begin());
    b.erase(b.begin());
  } else {
    a.pop_back();
    b.pop_back();
  }
  Key k{PathNE(a).word(), PathNE(b).word()};
  if (k.second < k.first) std::swap(k.first, k.second);
  return k;
}

bool reduced_nonintersecting(const Key& k) {
  const PathNE a = PathNE::parse(k.first);
  const PathNE b = PathNE::parse(k.second);
  return intersections_interior(PathPair(a, b)) == 0;
}

// Partners in groups I and II collapse to one nonintersecting pair once the
// doubled edge is removed from each.
bool partners_agree(const PhiImage& img) {
  if (img.which == PhiCase::B) return true;
  const bool group_two = img.which == PhiCase::A;
  // Case A: first meets at (r,s-1) (doubled last N), second at (0,1)
  // (doubled first N). Case C: first at (1,0), second at (r-1,s).
  const Key k1 = reduced(img.first.upper.steps(), img.first.lower.steps(), !group_two);
  const Key k2 = reduced(img.second.upper.steps(), img.second.lower.steps(), group_two);
  return k1 == k2 && reduced_nonintersecting(k1);
}

GroupTag expected_tag(PhiCase c, bool first) {
  switch (c) {
    case PhiCase::A:
      return {Group::II, false};
    case PhiCase::C:
      return {Group::I, false};
    case PhiCase::B:
      return {Group::III, first};
  }
  return {};
}

}  // namespace

BijectionReport verify_bijection(long r, long s, bool keep_table) {
  BijectionReport report;
  report.r = r;
  report.s = s;
  if (r < 1 || s < 1) {
    report.total = false;
    report.counterexamples.push_back("rectangle must have r, s >= 1");
    return report;
  }
  const auto sources = rect_pairs_with(r, s, 0);
  const auto targets = rect_pairs_with(r, s, 1);
  report.nonintersecting = static_cast<long>(sources.size());
  report.one_intersection = static_cast<long>(targets.size());

  std::multiset<Key> images;
  for (const RectPair& src : sources) {
    PhiImage img;
    try {
      img = phi_map(src);
    } catch (const std::exception& e) {
      report.total = false;
      report.counterexamples.push_back("phi(" + describe(src) + "): " + e.what());
      continue;
    }
    Correspondence row{src, img, {}, {}};
    bool first = true;
    for (const RectPair* im : {&img.first, &img.second}) {
      images.insert(key_of(*im));
      try {
        const PsiResult back = psi_map(*im);
        if (back.source != src) {
          report.round_trip = false;
          report.counterexamples.push_back("psi(" + describe(*im) + ") = " +
                                           describe(back.source) + ", expected " + describe(src));
        }
        if (back.tag != expected_tag(img.which, first)) {
          report.groups_ok = false;
          report.counterexamples.push_back("psi(" + describe(*im) + ") tagged " +
                                           to_string(back.tag) + " for case " +
                                           to_string(img.which));
        }
        (first ? row.first_tag : row.second_tag) = back.tag;
      } catch (const std::exception& e) {
        report.round_trip = false;
        report.counterexamples.push_back("psi(" + describe(*im) + "): " + e.what());
      }
      first = false;
    }
    if (!partners_agree(img)) {
      report.groups_ok = false;
      report.counterexamples.push_back("case " + to_string(img.which) + " partners of " +
                                       describe(src) + " reduce to different pairs");
    }
    if (keep_table) report.table.push_back(std::move(row));
  }

  const std::set<Key> distinct(images.begin(), images.end());
  if (distinct.size() != images.size()) {
    report.injective = false;
    for (const Key& k : distinct) {
      if (images.count(k) > 1) {
        report.counterexamples.push_back("image " + k.first + "/" + k.second + " hit " +
                                         std::to_string(images.count(k)) + " times");
        break;
      }
    }
  }
  std::set<Key> expected;
  for (const RectPair& t : targets) expected.insert(key_of(t));
  if (distinct != expected) {
    report.exhaustive = false;
    for (const Key& k : expected) {
      if (!distinct.contains(k)) {
        report.counterexamples.push_back("one-intersection pair " + k.first + "/" + k.second +
                                         " is not an image");
        break;
      }
    }
  }
  if (!report.counts_ok()) {
    report.counterexamples.push_back("one-intersection count " +
                                     std::to_string(report.one_intersection) + " != 2 * " +
                                     std::to_string(report.nonintersecting));
  }
  return report;
}

}  // namespace latpair
