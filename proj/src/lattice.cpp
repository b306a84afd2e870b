#include "latpair/lattice.hpp"

#include <stdexcept>

namespace latpair {

Point advance(Point p, Step s) {
  if (s == Step::E) {
    ++p.x;
  } else {
    ++p.y;
  }
  return p;
}

std::string to_string(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

PathNE::PathNE(std::vector<Step> steps, Point start) : steps_(std::move(steps)), start_(start) {}

PathNE PathNE::parse(std::string_view word, Point start) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (char c : word) {
    if (c == 'E' || c == 'e') {
      steps.push_back(Step::E);
    } else if (c == 'N' || c == 'n') {
      steps.push_back(Step::N);
    } else {
      throw std::invalid_argument("path word may contain only E and N: '" + std::string(word) + "'");
    }
  }
  return PathNE(std::move(steps), start);
}

long PathNE::east_count() const {
  long e = 0;
  for (Step s : steps_) e += s == Step::E;
  return e;
}

Point PathNE::end() const {
  const long e = east_count();
  return {start_.x + e, start_.y + static_cast<long>(steps_.size()) - e};
}

std::vector<Point> PathNE::vertices() const {
  std::vector<Point> out;
  out.reserve(steps_.size() + 1);
  out.push_back(start_);
  for (Step s : steps_) out.push_back(advance(out.back(), s));
  return out;
}

Point PathNE::vertex(std::size_t t) const {
  if (t > steps_.size()) throw std::out_of_range("vertex index past end of path");
  Point p = start_;
  for (std::size_t i = 0; i < t; ++i) p = advance(p, steps_[i]);
  return p;
}

std::string PathNE::word() const {
  std::string w;
  w.reserve(steps_.size());
  for (Step s : steps_) w.push_back(static_cast<char>(s));
  return w;
}

PathPair::PathPair(PathNE first, PathNE second, bool ordered)
    : first_(std::move(first)), second_(std::move(second)), ordered_(ordered) {
  if (first_.size() != second_.size()) {
    throw std::invalid_argument("paths of a pair must have equal step counts");
  }
  if (first_.start() != second_.start()) {
    throw std::invalid_argument("paths of a pair must share a start point");
  }
}

std::size_t stepwise_coincidences(const PathNE& a, const PathNE& b) {
  if (a.size() != b.size() || a.start() != b.start()) {
    throw std::invalid_argument("stepwise comparison needs equal length and start");
  }
  // Same start: both vertices at step t lie on the antidiagonal x + y = t + c,
  // so they coincide iff their east counts agree.
  std::size_t count = 0;
  long ea = 0;
  long eb = 0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    ea += a.steps()[t] == Step::E;
    eb += b.steps()[t] == Step::E;
    count += ea == eb;
  }
  return count;
}

std::size_t intersections_interior(const PathPair& pair) {
  if (pair.first().end() != pair.second().end()) {
    throw std::invalid_argument("interior intersections need a common end point");
  }
  const std::size_t shared = stepwise_coincidences(pair.first(), pair.second());
  // shared >= 1 whenever n >= 1 (the end point); n = 0 has no interior.
  return shared == 0 ? 0 : shared - 1;
}

std::size_t intersections_excluding_origin(const PathPair& pair) {
  if (pair.first().start() != Point{0, 0}) {
    throw std::invalid_argument("walks must start at the origin");
  }
  return stepwise_coincidences(pair.first(), pair.second());
}

std::size_t intersections_excluding_start(const PathPair& pair) {
  return stepwise_coincidences(pair.first(), pair.second());
}

}  // namespace latpair
