#include "latpair/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "latpair/bijection.hpp"
#include "latpair/closed_forms.hpp"
#include "latpair/series.hpp"

namespace latpair {

namespace {

// Accumulates one report; the first mismatch in scan order is kept.
class Checker {
 public:
  explicit Checker(std::string id) { report_.check_id = std::move(id); }

  template <class T>
  void expect_eq(const std::string& inputs, const T& expected, const T& actual) {
    ++report_.instances;
    if (expected == actual) return;
    fail(inputs, render(expected), render(actual));
  }

  void expect(const std::string& inputs, bool ok, const std::string& expected,
              const std::string& actual) {
    ++report_.instances;
    if (!ok) fail(inputs, expected, actual);
  }

  CheckReport take() { return std::move(report_); }

 private:
  void fail(const std::string& inputs, std::string expected, std::string actual) {
    if (!report_.passed) return;
    report_.passed = false;
    report_.first_failure = Counterexample{inputs, std::move(expected), std::move(actual)};
  }

  static std::string render(const BigInt& v) { return to_string(v); }
  static std::string render(const Rat& v) { return to_string(v); }
  static std::string render(bool v) { return v ? "true" : "false"; }
  static std::string render(long v) { return std::to_string(v); }
  static std::string render(const CountTable& t) {
    std::string out = "{";
    for (const auto& [k, v] : t.entries()) {
      if (out.size() > 1) out += ", ";
      out += std::to_string(k) + ": " + to_string(v);
    }
    return out + "}";
  }

  CheckReport report_;
};

std::string args(std::initializer_list<std::pair<const char*, long>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ' ';
    out += k;
    out += '=';
    out += std::to_string(v);
  }
  return out;
}

BigInt pow4(long n) { return power_of_two(2 * n); }

// Oracle tables for N_k^{n,r} keyed by (n, r), built once per check.
class NkrTables {
 public:
  explicit NkrTables(int n_max) {
    for (int n = 0; n <= n_max; ++n) {
      for (int r = 0; r <= n; ++r) tables_.emplace(std::pair{n, r}, enum_nkr(n, r, n_max));
    }
  }
  BigCount at(long n, long r, long k) const {
    if (r < 0 || r > n) return 0;
    return tables_.at({static_cast<int>(n), static_cast<int>(r)}).at(k);
  }
  const CountTable& table(long n, long r) const {
    return tables_.at({static_cast<int>(n), static_cast<int>(r)});
  }

 private:
  std::map<std::pair<int, int>, CountTable> tables_;
};

}  // namespace

RunConfig RunConfig::full() {
  RunConfig c;
  c.suites = all_suites();
  return c;
}

RunConfig& RunConfig::cap_enumeration(int n) {
  for (int* bound : {&n_max, &n1_max, &rect_max, &free_max, &mrs_max, &diag_max, &series_degree,
                     &fk_degree, &barrier_max, &level_sum_max}) {
    *bound = std::min(*bound, n);
  }
  return *this;
}

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names = {
      "theorem1", "nkr-oracle", "totals",      "recurrence", "n1-2n0", "bijection",
      "theorem3", "eq8",        "avg",         "pnk",        "wz",     "mrs",
      "series",   "legendre",   "proposition", "fk",         "lagrange", "diag",
      "barrier",  "same-start", "vandermonde"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& all = all_suites();
  return std::find(all.begin(), all.end(), name) != all.end();
}

CheckReport check_theorem1(int n_max) {
  Checker c("theorem1");
  for (long n = 2; n <= n_max; ++n) {
    for (long r = 0; r <= n; ++r) {
      for (long k = 0; k <= n - 2; ++k) {
        c.expect_eq(args({{"n", n}, {"r", r}, {"k", k}}), nkr_formula_a(n, r, k),
                    nkr_formula_b(n, r, k));
      }
    }
  }
  return c.take();
}

CheckReport check_nkr_oracle(int n_max) {
  Checker c("nkr-oracle");
  for (long n = 2; n <= n_max; ++n) {
    for (long r = 0; r <= n; ++r) {
      const CountTable table = enum_nkr(static_cast<int>(n), static_cast<int>(r), n_max);
      for (long k = 0; k <= n - 2; ++k) {
        const auto in = args({{"n", n}, {"r", r}, {"k", k}});
        c.expect_eq(in + " route=formula-a", table.at(k), nkr_formula_a(n, r, k));
        c.expect_eq(in + " route=formula-b", table.at(k), nkr_formula_b(n, r, k));
      }
    }
  }
  return c.take();
}

CheckReport check_totals(int n_max) {
  Checker c("totals");
  for (long n = 0; n <= n_max; ++n) {
    for (long r = 0; r <= n; ++r) {
      const CountTable table = enum_nkr(static_cast<int>(n), static_cast<int>(r), n_max);
      BigInt sum = 0;
      for (long k = 0; k <= std::max(0L, n - 1); ++k) sum += table.at(k);
      const BigInt b = binomial(n, r);
      c.expect_eq(args({{"n", n}, {"r", r}}), BigInt(b * b), sum);
      c.expect_eq(args({{"n", n}, {"r", r}}) + " reflection", table,
                  enum_nkr(static_cast<int>(n), static_cast<int>(n - r), n_max));
    }
  }
  return c.take();
}

CheckReport check_recurrence(int n_max) {
  Checker c("recurrence");
  const NkrTables oracle(n_max);
  for (long n = 2; n <= n_max; ++n) {
    for (long r = 0; r <= n; ++r) {
      for (long k = 1; k <= n - 1; ++k) {
        // Split at the last interior meeting point, reached after m steps
        // with q of them East.
        BigInt sum = 0;
        for (long m = 1; m <= n - 1; ++m) {
          for (long q = std::max(0L, r - (n - m)); q <= std::min(r, m); ++q) {
            sum += oracle.at(m, q, k - 1) * oracle.at(n - m, r - q, 0);
          }
        }
        c.expect_eq(args({{"n", n}, {"r", r}, {"k", k}}), oracle.at(n, r, k), sum);
      }
    }
  }
  return c.take();
}

CheckReport check_n1_twice_n0(int formula_max, int oracle_max) {
  Checker c("n1-2n0");
  for (long n = 3; n <= formula_max; ++n) {
    for (long r = 1; r <= n - 1; ++r) {
      const auto in = args({{"n", n}, {"r", r}});
      c.expect_eq(in + " route=formula-a", BigInt(2 * nkr_formula_a(n, r, 0)), nkr_formula_a(n, r, 1));
      c.expect_eq(in + " route=formula-b", BigInt(2 * nkr_formula_b(n, r, 0)), nkr_formula_b(n, r, 1));
      c.expect_eq(in + " narayana", BigInt(2 * narayana(n, r)), nkr_formula_a(n, r, 0));
      if (n <= oracle_max) {
        const CountTable t = enum_nkr(static_cast<int>(n), static_cast<int>(r), oracle_max);
        c.expect_eq(in + " route=oracle", BigInt(2 * t.at(0)), t.at(1));
      }
    }
  }
  return c.take();
}

CheckReport check_bijection(int rect_max) {
  Checker c("bijection");
  for (long r = 1; r < rect_max; ++r) {
    for (long s = 1; r + s <= rect_max; ++s) {
      const BijectionReport rep = verify_bijection(r, s);
      const std::string first = rep.counterexamples.empty() ? "" : rep.counterexamples.front();
      c.expect(args({{"r", r}, {"s", s}}), rep.passed(), "pass", "fail: " + first);
      // Ordered counts: every unordered pair counted twice once n >= 3.
      if (r + s >= 3) {
        c.expect_eq(args({{"r", r}, {"s", s}}) + " ordered N0",
                    nkr_formula_a(r + s, r, 0), BigInt(2 * rep.nonintersecting));
        c.expect_eq(args({{"r", r}, {"s", s}}) + " ordered N1",
                    nkr_formula_a(r + s, r, 1), BigInt(2 * rep.one_intersection));
      }
    }
  }
  return c.take();
}

CheckReport check_theorem3(int oracle_max, int identity_max) {
  Checker c("theorem3");
  for (long n = 0; n <= oracle_max; ++n) {
    const CountTable t = enum_fnk(static_cast<int>(n), oracle_max);
    c.expect_eq(args({{"n", n}}) + " total", pow4(n), t.total());
    for (long k = 0; k <= n; ++k) c.expect_eq(args({{"n", n}, {"k", k}}), t.at(k), fnk(n, k));
    c.expect_eq(args({{"n", n}}) + " no-meeting probability", make_rat(binomial(2 * n, n), pow4(n)),
                make_rat(t.at(0), pow4(n)));
  }
  for (long n = 0; n <= identity_max; ++n) {
    BigInt sum = 0;
    for (long k = 0; k <= n; ++k) sum += fnk(n, k);
    c.expect_eq(args({{"n", n}}) + " sum_k 2^k C(2n-k,n)", pow4(n), sum);
    c.expect_eq(args({{"n", n}}) + " f(n,0)/4^n", make_rat(binomial(2 * n, n), pow4(n)),
                make_rat(fnk(n, 0), pow4(n)));
  }
  return c.take();
}

CheckReport check_eq8(int n_max) {
  Checker c("eq8");
  std::vector<CountTable> phi(static_cast<std::size_t>(n_max) + 1);
  std::vector<CountTable> free(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    free[static_cast<std::size_t>(n)] = enum_fnk(n, n_max);
    if (n >= 1) phi[static_cast<std::size_t>(n)] = enum_phi(n, n_max);
  }
  auto idx = [](long i) { return static_cast<std::size_t>(i); };
  for (long n = 1; n <= n_max; ++n) {
    c.expect_eq(args({{"n", n}}) + " f(n,0)", binomial(2 * n, n), free[idx(n)].at(0));
    c.expect_eq(args({{"n", n}}) + " phi total", binomial(2 * n, n), phi[idx(n)].total());
    for (long k = 1; k <= n; ++k) {
      BigInt oracle_sum = 0;
      BigInt closed_sum = 0;
      for (long j = 1; j <= n; ++j) {
        oracle_sum += phi[idx(j)].at(k - 1) * free[idx(n - j)].at(0);
        closed_sum += phi[idx(j)].at(k - 1) * fnk(n - j, 0);
      }
      c.expect_eq(args({{"n", n}, {"k", k}}) + " route=oracle", free[idx(n)].at(k), oracle_sum);
      c.expect_eq(args({{"n", n}, {"k", k}}) + " route=formula", fnk(n, k), closed_sum);
    }
  }
  return c.take();
}

CheckReport check_avg(int oracle_max, int formula_max, int asymptotic_n) {
  Checker c("avg");
  for (long n = 0; n <= oracle_max; ++n) {
    const CountTable t = enum_fnk(static_cast<int>(n), oracle_max);
    BigInt weighted = 0;
    for (const auto& [k, count] : t.entries()) weighted += k * count;
    c.expect_eq(args({{"n", n}}) + " route=oracle", avg_crossings(n), make_rat(weighted, pow4(n)));
  }
  for (long n = 0; n <= formula_max; ++n) {
    BigInt weighted = 0;
    for (long k = 0; k <= n; ++k) weighted += k * fnk(n, k);
    c.expect_eq(args({{"n", n}}) + " route=formula", avg_crossings(n), make_rat(weighted, pow4(n)));
  }
  if (asymptotic_n > 0) {
    const double exact = avg_crossings(asymptotic_n).get_d();
    const double approx = 2.0 * std::sqrt(asymptotic_n / std::numbers::pi) - 1.0;
    const double rel = std::abs(exact - approx) / std::abs(approx);
    std::ostringstream got;
    got.precision(10);
    got << exact << " (relative gap " << rel << ")";
    std::ostringstream want;
    want.precision(10);
    want << "within 2% of " << approx;
    c.expect(args({{"n", asymptotic_n}}) + " asymptotic", rel <= 0.02, want.str(), got.str());
  }
  return c.take();
}

CheckReport check_pnk(int oracle_max, int total_max) {
  Checker c("pnk");
  for (long n = 1; n <= oracle_max; ++n) {
    const CountTable t = enum_phi(static_cast<int>(n), oracle_max);
    const BigInt pairs = binomial(2 * n, n);
    for (long k = 0; k <= n - 1; ++k) {
      c.expect_eq(args({{"n", n}, {"k", k}}) + " route=oracle", make_rat(t.at(k), pairs), pnk(n, k));
    }
  }
  for (long n = 1; n <= total_max; ++n) {
    Rat total = 0;
    for (long k = 0; k <= n - 1; ++k) total += pnk(n, k);
    c.expect_eq(args({{"n", n}}) + " P(n)", Rat(1), total);
  }
  return c.take();
}

CheckReport check_wz(int n_max) {
  Checker c("wz");
  for (long n = 1; n <= n_max; ++n) {
    Rat total = 0;
    for (long k = 0; k <= n + 1; ++k) {
      // The companion enters shifted down by one: with g(n,k+1) - g(n,k) on
      // the right the identity already fails at n = 1, k = 0.
      const Rat lhs = pnk_extended(n + 1, k) - pnk_extended(n, k);
      const Rat rhs = wz_companion(n, k) - wz_companion(n, k - 1);
      c.expect_eq(args({{"n", n}, {"k", k}}), lhs, rhs);
      total += pnk_extended(n, k);
    }
    // The right side telescopes to g(n,n+1) - g(n,-1) = 0.
    c.expect_eq(args({{"n", n}}) + " boundary", Rat(0), Rat(wz_companion(n, n + 1) - wz_companion(n, -1)));
    c.expect_eq(args({{"n", n}}) + " P(n)", Rat(1), total);
    if (n >= 2) c.expect_eq(args({{"n", n}}) + " p(n,1)=2p(n,0)", Rat(2 * pnk(n, 0)), pnk(n, 1));
  }
  return c.take();
}

CheckReport check_mrs(int n_max) {
  Checker c("mrs");
  const EndpointResolution res = resolve_endpoint_reading(n_max);
  for (const ReadingReport& rr : res.readings) {
    if (rr.reading == EndpointReading::AsPrinted) {
      const std::string first =
          rr.matches() ? "" : args({{"n", rr.discrepancies.front().n},
                                    {"r", rr.discrepancies.front().r},
                                    {"s", rr.discrepancies.front().s},
                                    {"k", rr.discrepancies.front().k}});
      c.expect("reading=as-printed", rr.matches(), "no discrepancies",
               std::to_string(rr.discrepancies.size()) + " discrepancies, first " + first);
    }
  }
  c.expect("accepted reading", res.accepted.has_value(), "some reading accepted", "none accepted");
  for (long n = 1; n <= n_max; ++n) {
    for (long r = 0; r <= n; ++r) {
      for (long s = r + 1; s <= n; ++s) {
        const CountTable t = enum_mrs(static_cast<int>(n), static_cast<int>(r), static_cast<int>(s),
                                      n_max);
        const auto in = args({{"n", n}, {"r", r}, {"s", s}});
        c.expect_eq(in + " k=0 form", t.at(0), mrs0(n, r, s));
        for (long k = 0; k <= n - 1; ++k) {
          c.expect_eq(in + " k=" + std::to_string(k), t.at(k), mrs_formula(n, r, s, k));
        }
      }
      const CountTable same = enum_nkr(static_cast<int>(n), static_cast<int>(r), n_max);
      for (long k = 1; k <= n; ++k) {
        c.expect_eq(args({{"n", n}, {"r", r}, {"s", r}, {"k", k}}) + " r=s", same.at(k - 1),
                    mrs_formula(n, r, r, k));
      }
    }
  }
  return c.take();
}

CheckReport check_series(int degree) {
  Checker c("series");
  const int n_top = degree;
  const NkrTables oracle(n_top);
  std::vector<BiSeries> uk;
  for (int k = 0; k < std::max(1, degree); ++k) uk.push_back(uk_series(k, degree));
  for (long n = 0; n <= degree; ++n) {
    for (long r = 0; n + r <= degree; ++r) {
      Rat total = n == 0 && r == 0 ? Rat(1) : Rat(0);  // the "1 +" term
      for (long k = 0; k < static_cast<long>(uk.size()); ++k) {
        const Rat coeff = uk[static_cast<std::size_t>(k)].at(static_cast<int>(n), static_cast<int>(r));
        total += coeff;
        if (n == 0) continue;  // the empty pair sits in the "1 +" term
        if (r <= n) {
          c.expect_eq(args({{"n", n}, {"r", r}, {"k", k}}), Rat(oracle.at(n, r, k)), coeff);
        } else {
          c.expect_eq(args({{"n", n}, {"r", r}, {"k", k}}), Rat(0), coeff);
        }
      }
      const BigInt b = binomial(n, r);
      c.expect_eq(args({{"n", n}, {"r", r}}) + " 1+sum_k u_k", Rat(b * b), total);
    }
  }
  return c.take();
}

CheckReport check_legendre(int degree) {
  Checker c("legendre");
  const SeriesCheck res = legendre_identity_check(degree);
  c.expect(args({{"D", degree}}), res.passed, "C(n,r)^2 coefficients",
           res.first_failure.value_or(""));
  return c.take();
}

CheckReport check_proposition(int degree) {
  Checker c("proposition");
  c.expect(args({{"D", degree}}) + " f-(y+f)(z+f)", f_residual(degree).is_zero(), "zero", "nonzero");
  const BiSeries f = f_series(degree);
  c.expect_eq(std::string("[y z] f"), Rat(1), f.coeff(1, 1));
  c.expect_eq(std::string("[1] f"), Rat(0), f.coeff(0, 0));
  const NkrTables oracle(degree);
  for (int k = 0; k < degree; ++k) {
    const BiSeries s = proposition_series(k, degree);
    for (long n = 1; n <= degree; ++n) {
      for (long r = 0; r <= n; ++r) {
        c.expect_eq(args({{"n", n}, {"r", r}, {"k", k}}), Rat(oracle.at(n, r, k)),
                    s.coeff(static_cast<int>(r), static_cast<int>(n - r)));
      }
    }
  }
  return c.take();
}

CheckReport check_fk(int degree) {
  Checker c("fk");
  for (int k = 0; k <= degree; ++k) {
    const UniSeries fk = fk_series(k, degree);
    for (long n = 0; n <= degree; ++n) {
      const BigInt expected = n >= k ? fnk(n, k) : BigInt(0);
      c.expect_eq(args({{"n", n}, {"k", k}}), Rat(expected), fk[static_cast<int>(n)]);
    }
  }
  // Phi_k(x) = (1 - sqrt(1-4x))^{k+1} enumerates same-end pairs by interior meetings.
  const int phi_top = std::min(degree, 8);
  for (int k = 0; k < phi_top; ++k) {
    const UniSeries ph = phik_series(k, phi_top);
    for (long n = 1; n <= phi_top; ++n) {
      c.expect_eq(args({{"n", n}, {"k", k}}) + " Phi_k", Rat(enum_phi(static_cast<int>(n)).at(k)),
                  ph[static_cast<int>(n)]);
    }
  }
  return c.take();
}

CheckReport check_lagrange(int n_max) {
  Checker c("lagrange");
  for (long total = 2; total <= n_max; ++total) {
    for (long k = 0; k <= total - 2; ++k) {
      // f = x (y+f)(z+f) with z = 1; [x^m] (y+z+2f)^{k+1} is
      // sum_r N_k^{total,r} y^r for total = m + k + 1.
      const int m = static_cast<int>(total - k - 1);
      std::vector<Rat> ys;
      std::vector<Rat> values;
      // g(0) = y must be nonzero, so the nodes start at y = 1.
      for (long node = 1; node <= total + 1; ++node) {
        const Rat y(node);
        const Poly phi = poly_pow(Poly{y + 1, Rat(2)}, static_cast<int>(k + 1));
        const Poly g = poly_mul(Poly{y, Rat(1)}, Poly{Rat(1), Rat(1)});
        ys.push_back(y);
        values.push_back(lagrange_extract(phi, g, m));
      }
      const Poly coeffs = interpolate(ys, values);
      for (long r = 0; r <= total; ++r) {
        c.expect_eq(args({{"n", total}, {"r", r}, {"k", k}}), Rat(nkr_formula_a(total, r, k)),
                    coeffs[static_cast<std::size_t>(r)]);
      }
    }
  }
  return c.take();
}

CheckReport check_diag(int n_max) {
  Checker c("diag");
  for (long n = 2; n <= n_max; ++n) {
    std::vector<CountTable> tables;
    for (long r = 0; r <= n; ++r) tables.push_back(enum_nkr(static_cast<int>(n), static_cast<int>(r), n_max));
    for (long k = 0; k <= n - 2; ++k) {
      BigInt formula_sum = 0;
      BigInt oracle_sum = 0;
      for (long r = 0; r <= n; ++r) {
        formula_sum += nkr_formula_a(n, r, k);
        oracle_sum += tables[static_cast<std::size_t>(r)].at(k);
      }
      c.expect_eq(args({{"n", n}, {"k", k}}) + " route=formula-a", diag_sum(n, k), formula_sum);
      c.expect_eq(args({{"n", n}, {"k", k}}) + " route=oracle", diag_sum(n, k), oracle_sum);
    }
  }
  return c.take();
}

std::vector<LevelProb> seeded_level_sequences(std::uint64_t seed, int count, int levels) {
  // Raw engine output only: mt19937_64 is specified bit-for-bit, the
  // standard distributions are not.
  std::mt19937_64 rng(seed);
  std::vector<LevelProb> out;
  for (int i = 0; i < count; ++i) {
    LevelProb model;
    for (int m = 0; m < levels; ++m) {
      const long den = 1 + static_cast<long>(rng() % 16);
      const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(den + 1));
      model.west.push_back(make_rat(num, den));
    }
    out.push_back(std::move(model));
  }
  return out;
}

CheckReport check_barrier(const RunConfig& config) {
  Checker c("barrier");
  const std::vector<Rat> probs = {Rat(1, 2), Rat(1, 3), Rat(2, 5)};
  for (long a = 0; a <= config.barrier_max; ++a) {
    for (long b = 0; b <= config.barrier_max; ++b) {
      for (long x = 0; x <= config.barrier_max; ++x) {
        for (const Rat& p : probs) {
          const auto in = args({{"a", a}, {"b", b}, {"x", x}}) + " p=" + to_string(p);
          c.expect_eq(in, barrier_formula(a, b, x, p), barrier_dp({a, b, x, ConstantProb{p}}));
        }
      }
    }
  }

  auto models = std::vector<ProbModel>{};
  for (auto& lp : seeded_level_sequences(config.seed, config.level_models, config.level_sum_max + 1)) {
    models.emplace_back(std::move(lp));
  }
  models.emplace_back(ConstantProb{Rat(1, 3)});
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    const ProbModel& model = models[mi];
    for (long a = 0; a <= config.level_sum_max; ++a) {
      for (long b = 0; a + b <= config.level_sum_max; ++b) {
        for (long x = 0; a + b + x <= config.level_sum_max; ++x) {
          const BarrierConfig cfg{a, b, x, model};
          const auto in = args({{"a", a}, {"b", b}, {"x", x}, {"model", static_cast<long>(mi)}});
          const Rat two_walker = barrier_dp(cfg);
          std::set<Point> line_targets;
          for (long t = 0; t <= x; ++t) line_targets.insert({-t, 1 + t});
          const long steps = cfg.steps_to_line();
          c.expect_eq(in + " single walker", two_walker,
                      unconstrained_endpoint_prob(cfg.upper_start(), steps, line_targets, model));
          const Rat u = constrained_endpoint_prob(cfg.upper_start(), steps, {{0, 1}}, model);
          const Rat l = constrained_endpoint_prob(cfg.lower_start(), steps, {{1, 0}}, model);
          c.expect_eq(in + " u+l-1", two_walker, Rat(u + l - 1));
        }
      }
    }
  }
  return c.take();
}

CheckReport check_same_start(int max_ab) {
  Checker c("same-start");
  const std::vector<Rat> probs = {Rat(1, 2), Rat(1, 3), Rat(2, 5)};
  for (long a = 0; a <= max_ab; ++a) {
    for (long b = 0; b <= max_ab; ++b) {
      for (const Rat& p : probs) {
        c.expect_eq(args({{"a", a}, {"b", b}}) + " p=" + to_string(p), same_start_formula(a, b, p),
                    same_start_dp(a, b, p));
      }
    }
  }
  return c.take();
}

CheckReport check_vandermonde(int max_arg) {
  Checker c("vandermonde");
  for (long a = 0; a <= max_arg; ++a) {
    for (long b = 0; b <= max_arg; ++b) {
      for (long m = 0; m <= a + b + 1; ++m) {
        c.expect_eq(args({{"a", a}, {"b", b}, {"m", m}}) + " plain", binomial(a + b, m),
                    vandermonde_sum(a, b, m));
      }
    }
  }
  for (long a = 0; a <= max_arg; ++a) {
    for (long cc = a; cc <= max_arg + a; ++cc) {
      for (long m = 0; m <= cc + 1; ++m) {
        c.expect_eq(args({{"a", a}, {"c", cc}, {"m", m}}) + " alternating", binomial(cc - a, m),
                    vandermonde_alternating_sum(a, cc, m));
      }
    }
  }
  return c.take();
}

namespace {

CheckReport dispatch(const std::string& suite, const RunConfig& cfg) {
  if (suite == "theorem1") return check_theorem1(cfg.n_max);
  if (suite == "nkr-oracle") return check_nkr_oracle(cfg.n_max);
  if (suite == "totals") return check_totals(cfg.n_max);
  if (suite == "recurrence") return check_recurrence(cfg.n_max);
  if (suite == "n1-2n0") return check_n1_twice_n0(cfg.n1_max, cfg.n_max);
  if (suite == "bijection") return check_bijection(cfg.rect_max);
  if (suite == "theorem3") return check_theorem3(cfg.free_max, cfg.identity_max);
  if (suite == "eq8") return check_eq8(cfg.free_max);
  if (suite == "avg") return check_avg(cfg.free_max, cfg.identity_max, cfg.avg_asymptotic_n);
  if (suite == "pnk") return check_pnk(cfg.free_max, cfg.total_prob_max);
  if (suite == "wz") return check_wz(cfg.identity_max);
  if (suite == "mrs") return check_mrs(cfg.mrs_max);
  if (suite == "series") return check_series(cfg.series_degree);
  if (suite == "legendre") return check_legendre(cfg.series_degree);
  if (suite == "proposition") return check_proposition(cfg.series_degree);
  if (suite == "fk") return check_fk(cfg.fk_degree);
  if (suite == "lagrange") return check_lagrange(cfg.n_max);
  if (suite == "diag") return check_diag(cfg.diag_max);
  if (suite == "barrier") return check_barrier(cfg);
  if (suite == "same-start") return check_same_start(cfg.barrier_max);
  if (suite == "vandermonde") return check_vandermonde(cfg.n_max);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace

std::vector<CheckReport> run_all(const RunConfig& config) {
  for (const auto& s : config.suites) {
    if (!is_suite(s)) throw std::invalid_argument("unknown suite '" + s + "'");
  }
  std::vector<std::string> selected;
  for (const auto& name : all_suites()) {
    if (std::find(config.suites.begin(), config.suites.end(), name) != config.suites.end()) {
      selected.push_back(name);
    }
  }
  std::vector<CheckReport> reports(selected.size());
  const auto count = static_cast<std::int64_t>(selected.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& name = selected[static_cast<std::size_t>(i)];
    try {
      reports[static_cast<std::size_t>(i)] = dispatch(name, config);
    } catch (const std::exception& e) {
      CheckReport failed;
      failed.check_id = name;
      failed.passed = false;
      failed.first_failure = Counterexample{"suite " + name, "completion", e.what()};
      reports[static_cast<std::size_t>(i)] = std::move(failed);
    }
  }
  return reports;
}

}  // namespace latpair
