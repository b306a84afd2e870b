#include "latpair/oracle.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "latpair/kernels.hpp"

namespace latpair {

void CountTable::add(long k, const BigCount& count) {
  if (count == 0) return;
  entries_[k] += count;
  total_ += count;
}

BigCount CountTable::at(long k) const {
  const auto it = entries_.find(k);
  return it == entries_.end() ? BigCount(0) : it->second;
}

namespace {

void check_bound(int n, int max_steps) {
  if (n < 0) throw std::invalid_argument("step count must be nonnegative");
  if (n > max_steps) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the enumeration bound " +
                                std::to_string(max_steps));
  }
}

// `offset` converts "shared after start" into the caller's convention.
CountTable to_table(const kernels::Histogram& hist, long offset) {
  CountTable table;
  for (std::size_t shared = 0; shared < hist.size(); ++shared) {
    if (hist[shared] == 0) continue;
    table.add(static_cast<long>(shared) + offset, BigCount(static_cast<unsigned long>(hist[shared])));
  }
  return table;
}

void check_nkr(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("enum_nkr needs 0 <= r <= n");
}

void check_mrs(int n, int r, int s) {
  if (r < 0 || s > n) throw std::invalid_argument("enum_mrs needs 0 <= r < s <= n");
  if (r >= s) throw std::invalid_argument("enum_mrs needs r < s");
}

// n = 0 has an empty interior: the single pair contributes k = 0.
long interior_offset(int n) { return n == 0 ? 0 : -1; }

}  // namespace

CountTable enum_nkr(int n, int r, int max_steps) {
  check_bound(n, max_steps);
  check_nkr(n, r);
  return to_table(kernels::parallel::same_endpoint_pairs(n, r), interior_offset(n));
}

CountTable enum_mrs(int n, int r, int s, int max_steps) {
  check_bound(n, max_steps);
  check_mrs(n, r, s);
  return to_table(kernels::parallel::cross_endpoint_pairs(n, r, s), 0);
}

CountTable enum_fnk(int n, int max_steps) {
  check_bound(n, max_steps);
  return to_table(kernels::parallel::free_walk_pairs(n), 0);
}

CountTable enum_phi(int n, int max_steps) {
  check_bound(n, max_steps);
  if (n < 1) throw std::invalid_argument("enum_phi needs n >= 1");
  return to_table(kernels::parallel::free_walk_pairs_same_end(n), -1);
}

namespace reference {

CountTable enum_nkr(int n, int r) {
  check_nkr(n, r);
  return to_table(kernels::serial::same_endpoint_pairs(n, r), interior_offset(n));
}

CountTable enum_mrs(int n, int r, int s) {
  check_mrs(n, r, s);
  return to_table(kernels::serial::cross_endpoint_pairs(n, r, s), 0);
}

CountTable enum_fnk(int n) { return to_table(kernels::serial::free_walk_pairs(n), 0); }

CountTable enum_phi(int n) {
  if (n < 1) throw std::invalid_argument("enum_phi needs n >= 1");
  return to_table(kernels::serial::free_walk_pairs_same_end(n), -1);
}

}  // namespace reference

// ---------------------------------------------------------------------------

const Rat& west_probability(const ProbModel& model, long level) {
  if (const auto* c = std::get_if<ConstantProb>(&model)) return c->p;
  const auto& west = std::get<LevelProb>(model).west;
  if (west.empty()) throw std::invalid_argument("level sequence is empty");
  if (level < 1) return west.front();
  const auto idx = static_cast<std::size_t>(level - 1);
  return idx < west.size() ? west[idx] : west.back();
}

void validate(const ProbModel& model) {
  if (const auto* c = std::get_if<ConstantProb>(&model)) {
    if (!is_probability(c->p)) {
      throw std::invalid_argument("probability " + to_string(c->p) + " outside [0, 1]");
    }
    return;
  }
  const auto& west = std::get<LevelProb>(model).west;
  if (west.empty()) throw std::invalid_argument("level sequence is empty");
  for (std::size_t m = 0; m < west.size(); ++m) {
    if (!is_probability(west[m])) {
      throw std::invalid_argument("level " + std::to_string(m + 1) + " probability " +
                                  to_string(west[m]) + " outside [0, 1]");
    }
  }
}

namespace {

struct Move {
  Point to;
  Rat weight;
};

// One step of the axis-constrained walk; the origin is absorbing.
std::vector<Move> constrained_moves(Point p, const ProbModel& model) {
  if (p.x == 0 && p.y == 0) return {{p, Rat(1)}};
  if (p.x == 0) return {{{0, p.y - 1}, Rat(1)}};
  if (p.y == 0) return {{{p.x - 1, 0}, Rat(1)}};
  const Rat& west = west_probability(model, p.x + p.y);
  std::vector<Move> out;
  if (west != 0) out.push_back({{p.x - 1, p.y}, west});
  if (west != 1) out.push_back({{p.x, p.y - 1}, Rat(1) - west});
  return out;
}

std::vector<Move> free_moves(Point p, const ProbModel& model) {
  const Rat& west = west_probability(model, p.x + p.y);
  std::vector<Move> out;
  if (west != 0) out.push_back({{p.x - 1, p.y}, west});
  if (west != 1) out.push_back({{p.x, p.y - 1}, Rat(1) - west});
  return out;
}

void check_quadrant(Point p) {
  if (p.x < 0 || p.y < 0) {
    throw std::invalid_argument("walker start " + to_string(p) + " outside the closed quadrant");
  }
}

template <class MoveFn>
Rat endpoint_prob(Point start, long steps, const std::set<Point>& targets, MoveFn moves) {
  if (steps < 0) throw std::invalid_argument("step count must be nonnegative");
  std::map<Point, Rat> mass{{start, Rat(1)}};
  for (long t = 0; t < steps; ++t) {
    std::map<Point, Rat> next;
    for (const auto& [p, w] : mass) {
      for (const auto& mv : moves(p)) next[mv.to] += w * mv.weight;
    }
    mass = std::move(next);
  }
  Rat out = 0;
  for (const auto& [p, w] : mass) {
    if (targets.contains(p)) out += w;
  }
  return out;
}

}  // namespace

Rat first_meeting_at_origin(Point u, Point l, const ProbModel& model) {
  validate(model);
  check_quadrant(u);
  check_quadrant(l);
  if (u.x + u.y != l.x + l.y) {
    throw std::invalid_argument("walkers must start on the same level");
  }
  const Point origin{0, 0};
  const long steps = u.x + u.y;
  // Each step lowers both levels by one, so a meeting always happens at a
  // common time; the joint state at time t is all that matters.
  std::map<std::pair<Point, Point>, Rat> mass{{{u, l}, Rat(1)}};
  for (long t = 0; t < steps; ++t) {
    std::map<std::pair<Point, Point>, Rat> next;
    for (const auto& [state, w] : mass) {
      const auto up = constrained_moves(state.first, model);
      const auto lo = constrained_moves(state.second, model);
      for (const auto& mu : up) {
        for (const auto& ml : lo) {
          if (mu.to == ml.to && mu.to != origin) continue;  // met too early
          next[{mu.to, ml.to}] += w * mu.weight * ml.weight;
        }
      }
    }
    mass = std::move(next);
  }
  Rat out = 0;
  for (const auto& [state, w] : mass) out += w;
  return out;
}

Rat barrier_dp(const BarrierConfig& config) {
  if (config.a < 0 || config.b < 0 || config.x < 0) {
    throw std::invalid_argument("a, b, x must be nonnegative");
  }
  return first_meeting_at_origin(config.upper_start(), config.lower_start(), config.model);
}

Rat same_start_dp(long a, long b, const Rat& p) {
  if (a < 0 || b < 0) throw std::invalid_argument("a, b must be nonnegative");
  const Point start{a + 1, b + 1};
  return first_meeting_at_origin(start, start, ConstantProb{p});
}

Rat unconstrained_endpoint_prob(Point start, long steps, const std::set<Point>& targets,
                                const ProbModel& model) {
  validate(model);
  return endpoint_prob(start, steps, targets, [&](Point p) { return free_moves(p, model); });
}

Rat constrained_endpoint_prob(Point start, long steps, const std::set<Point>& targets,
                              const ProbModel& model) {
  validate(model);
  check_quadrant(start);
  return endpoint_prob(start, steps, targets, [&](Point p) { return constrained_moves(p, model); });
}

}  // namespace latpair
