#pragma once

// Batteries of exact identity checks across the oracle, closed forms,
// series, bijection and walker modules. One report per identity family.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latpair/oracle.hpp"

namespace latpair {

struct Counterexample {
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string check_id;
  bool passed = true;
  long instances = 0;
  std::optional<Counterexample> first_failure;  // present iff !passed
};

struct RunConfig {
  int n_max = 9;            // N_k^{n,r} formula/oracle sweeps, recurrence
  int n1_max = 10;          // N_1 = 2 N_0 on the formulas
  int rect_max = 9;         // bijection on rectangles with r + s <= rect_max
  int free_max = 8;         // f(n,k), phi(n,k), p(n,k) and the average against enumeration
  int mrs_max = 8;          // different end points
  int identity_max = 40;    // pnk sums, WZ telescoping, p(n,1) = 2 p(n,0)
  int total_prob_max = 60;  // sum_k p(n,k) = 1
  int avg_asymptotic_n = 1000;
  int series_degree = 12;
  int fk_degree = 20;
  int diag_max = 12;
  int barrier_max = 4;      // a, b, x <= barrier_max on the constant-p grid
  int level_sum_max = 10;   // a + b + x for level-dependent models
  int level_models = 20;
  std::uint64_t seed = 0x5eed2026;
  std::vector<std::string> suites;  // run in canonical order; empty runs nothing

  /// Every suite at the default bounds.
  static RunConfig full();
  /// Caps every enumeration-sized bound at n.
  RunConfig& cap_enumeration(int n);
};

/// Suite names in canonical run order.
const std::vector<std::string>& all_suites();
bool is_suite(const std::string& name);

CheckReport check_theorem1(int n_max);
CheckReport check_nkr_oracle(int n_max);
CheckReport check_totals(int n_max);
CheckReport check_recurrence(int n_max);
CheckReport check_n1_twice_n0(int formula_max, int oracle_max);
CheckReport check_bijection(int rect_max);
CheckReport check_theorem3(int oracle_max, int identity_max);
CheckReport check_eq8(int n_max);
CheckReport check_avg(int oracle_max, int formula_max, int asymptotic_n);
CheckReport check_pnk(int oracle_max, int total_max);
CheckReport check_wz(int n_max);
CheckReport check_mrs(int n_max);
CheckReport check_series(int degree);
CheckReport check_legendre(int degree);
CheckReport check_proposition(int degree);
CheckReport check_fk(int degree);
CheckReport check_lagrange(int n_max);
CheckReport check_diag(int n_max);
CheckReport check_barrier(const RunConfig& config);
CheckReport check_same_start(int max_ab);
CheckReport check_vandermonde(int max_arg);

/// Runs the selected suites; reports come back in canonical order.
std::vector<CheckReport> run_all(const RunConfig& config);

/// Seeded level-probability sequences with denominators <= 16.
std::vector<LevelProb> seeded_level_sequences(std::uint64_t seed, int count, int levels);

}  // namespace latpair
