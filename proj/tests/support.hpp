#pragma once

// Slow, obviously-correct references used only by the tests: paths are
// words, intersections are vertex-set intersections, binomials come from
// Pascal's triangle. Nothing here shares code with the library kernels.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace testsupport {

using Vertex = std::pair<long, long>;

inline std::vector<std::string> words(int n, int east) {
  std::vector<std::string> out;
  std::string w;
  std::function<void(int, int)> rec = [&](int left, int e) {
    if (left == 0) {
      if (e == 0) out.push_back(w);
      return;
    }
    if (e > 0) {
      w.push_back('E');
      rec(left - 1, e - 1);
      w.pop_back();
    }
    if (left > e) {
      w.push_back('N');
      rec(left - 1, e);
      w.pop_back();
    }
  };
  rec(n, east);
  return out;
}

inline std::vector<std::string> free_words(int n) {
  std::vector<std::string> out;
  for (int e = 0; e <= n; ++e) {
    for (auto& w : words(n, e)) out.push_back(std::move(w));
  }
  return out;
}

inline std::vector<Vertex> vertex_list(const std::string& w) {
  std::vector<Vertex> v{{0, 0}};
  for (char c : w) {
    auto [x, y] = v.back();
    v.emplace_back(c == 'E' ? x + 1 : x, c == 'N' ? y + 1 : y);
  }
  return v;
}

inline long shared_vertices(const std::string& a, const std::string& b) {
  const auto va = vertex_list(a);
  const auto vb = vertex_list(b);
  const std::set<Vertex> sa(va.begin(), va.end());
  long n = 0;
  for (const auto& p : std::set<Vertex>(vb.begin(), vb.end())) n += sa.count(p);
  return n;
}

/// Ordered pairs of (n, r) paths keyed by interior intersections.
inline std::map<long, long> nkr_table(int n, int r) {
  std::map<long, long> t;
  const auto ws = words(n, r);
  for (const auto& a : ws) {
    for (const auto& b : ws) {
      ++t[n == 0 ? 0 : shared_vertices(a, b) - 2];
    }
  }
  return t;
}

inline std::map<long, long> fnk_table(int n) {
  std::map<long, long> t;
  const auto ws = free_words(n);
  for (const auto& a : ws) {
    for (const auto& b : ws) ++t[shared_vertices(a, b) - 1];
  }
  return t;
}

inline std::map<long, long> mrs_table(int n, int r, int s) {
  std::map<long, long> t;
  for (const auto& a : words(n, r)) {
    for (const auto& b : words(n, s)) ++t[shared_vertices(a, b) - 1];
  }
  return t;
}

inline std::map<long, long> phi_table(int n) {
  std::map<long, long> t;
  const auto ws = free_words(n);
  for (const auto& a : ws) {
    for (const auto& b : ws) {
      if (vertex_list(a).back() == vertex_list(b).back()) ++t[shared_vertices(a, b) - 2];
    }
  }
  return t;
}

inline long at(const std::map<long, long>& t, long k) {
  const auto it = t.find(k);
  return it == t.end() ? 0 : it->second;
}

/// Pascal's triangle, exact.
inline mpz_class pascal(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  static std::vector<std::vector<mpz_class>> rows{{1}};
  while (static_cast<long>(rows.size()) <= a) {
    const auto& prev = rows.back();
    std::vector<mpz_class> row(prev.size() + 1, 1);
    for (std::size_t i = 1; i < prev.size(); ++i) row[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

}  // namespace testsupport
