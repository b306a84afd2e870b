#include "latpair/closed_forms.hpp"

#include <string>

#include "latpair/oracle.hpp"

namespace latpair {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void check_nkr_range(long n, long r, long k) {
  require(n >= 2, "N_k^{n,r} formulas need n >= 2");
  require(r >= 0 && r <= n, "N_k^{n,r} formulas need 0 <= r <= n");
  require(k >= 0 && k <= n - 2, "N_k^{n,r} formulas need 0 <= k <= n-2");
}

void check_probability(const Rat& p) {
  require(is_probability(p), "probability " + to_string(p) + " outside [0, 1]");
}

std::string label(const char* name, long n, long r, long k) {
  return std::string(name) + "(n=" + std::to_string(n) + ",r=" + std::to_string(r) +
         ",k=" + std::to_string(k) + ")";
}

}  // namespace

BigCount nkr_formula_a(long n, long r, long k) {
  check_nkr_range(n, r, k);
  BigInt sum = 0;
  for (long i = 0; i <= k; ++i) {
    sum += binomial(k, i) * binomial(n - k + i - 1, r) * binomial(n - i - 1, n - r);
  }
  const Rat value = make_rat(2 * (k + 1), n - k - 1) * Rat(sum);
  return require_integer(value, label("formula-a", n, r, k));
}

BigCount nkr_formula_b(long n, long r, long k) {
  check_nkr_range(n, r, k);
  if (r == 0) return nkr_formula_b(n, n, k);
  Rat sum = 0;
  for (long i = 0; 2 * i <= k; ++i) {
    const BigInt top = binomial(k, i) * binomial(k - i, i) * binomial(n - i - 2, r - 1) *
                       binomial(n - i - 1, r - i - 1);
    if (top == 0) continue;
    // A nonzero top forces 2i <= k <= n-2, so the divisor C(n-i-2, i) is positive.
    const Rat term = make_rat(top, binomial(n - i - 2, i));
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const Rat value = make_rat(2 * (k + 1), r) * sum;
  return require_integer(value, label("formula-b", n, r, k));
}

BigCount narayana(long n, long r) {
  require(n >= 2, "narayana needs n >= 2");
  require(r >= 1 && r <= n - 1, "narayana needs 1 <= r <= n-1");
  const Rat value = make_rat(binomial(n - 1, r) * binomial(n - 1, n - r), n - 1);
  return require_integer(value, label("narayana", n, r, 0));
}

std::string to_string(EndpointReading reading) {
  switch (reading) {
    case EndpointReading::AsPrinted:
      return "as-printed";
    case EndpointReading::NumeratorWithoutJ:
      return "numerator-without-j";
    case EndpointReading::DenominatorWithoutJ:
      return "denominator-without-j";
    case EndpointReading::NeitherWithJ:
      return "neither-with-j";
  }
  return "unknown";
}

Rat mrs_formula_raw(long n, long r, long s, long k, EndpointReading reading) {
  require(r >= 0 && r <= s && s <= n, "M_{r,s}^{n,k} needs 0 <= r <= s <= n");
  require(k >= 0 && k < n, "M_{r,s}^{n,k} formula needs 0 <= k < n");
  const bool j_in_num =
      reading == EndpointReading::AsPrinted || reading == EndpointReading::DenominatorWithoutJ;
  const bool j_in_den =
      reading == EndpointReading::AsPrinted || reading == EndpointReading::NumeratorWithoutJ;

  Rat first = 0;
  for (long t = 0; 2 * t + 1 <= k; ++t) {
    for (long j = 0; j <= k - 1 - 2 * t; ++j) {
      const long m = n - 1 - j - 2 * t;
      const BigInt c = binomial(k, 2 * t + 1) * binomial(k - 1 - 2 * t, j) * binomial(m, s - j) *
                       binomial(m, r - 1 - 2 * t);
      if (c == 0) continue;
      const long num = s - r + 1 + 2 * t - (j_in_num ? j : 0);
      const long den = n - 1 - 2 * t - (j_in_den ? j : 0);
      if (den == 0) throw std::domain_error("zero divisor in endpoint formula");
      const Rat term = make_rat(num * c, den);
      if (j % 2 == 0) {
        first += term;
      } else {
        first -= term;
      }
    }
  }
  BigInt second_sum = 0;
  for (long j = 0; j <= k; ++j) {
    second_sum += binomial(k, j) * binomial(n - k, r - j) * binomial(n - k, s - j);
  }
  return 2 * first + make_rat(s - r, n - k) * Rat(second_sum);
}

BigCount mrs_formula(long n, long r, long s, long k) {
  require(n >= 1, "M_{r,s}^{n,k} needs n >= 1");
  require(r >= 0 && r <= s && s <= n, "M_{r,s}^{n,k} needs 0 <= r <= s <= n");
  require(k >= 0, "M_{r,s}^{n,k} needs k >= 0");
  if (r == s) {
    // Same end point: the end is always shared, so k >= 1 and k = n means
    // the two paths coincide.
    if (k == 0 || k > n) return 0;
    if (k == n) return binomial(n, r);
    return nkr_formula_a(n, r, k - 1);
  }
  if (k >= n) return 0;
  return require_integer(mrs_formula_raw(n, r, s, k, EndpointReading::AsPrinted),
                         label("endpoint-formula", n, r, k) + " s=" + std::to_string(s));
}

BigCount mrs0(long n, long r, long s) {
  require(r >= 0 && s <= n, "M_{r,s}^{n,0} needs 0 <= r < s <= n");
  require(r < s, "M_{r,s}^{n,0} needs r < s");
  const Rat value = make_rat((s - r) * binomial(n, r) * binomial(n, s), n);
  return require_integer(value, label("k=0 endpoint form", n, r, 0));
}

EndpointResolution resolve_endpoint_reading(int n_max) {
  EndpointResolution out;
  for (EndpointReading reading : kAllEndpointReadings) {
    ReadingReport report{reading, 0, {}};
    auto check = [&](long n, long r, long s, long k, const BigInt& expected, const char* source) {
      ++report.instances;
      std::string got;
      try {
        const Rat v = mrs_formula_raw(n, r, s, k, reading);
        if (v == Rat(expected)) return;
        got = to_string(v);
      } catch (const std::domain_error&) {
        got = "undefined";
      }
      report.discrepancies.push_back({n, r, s, k, got, to_string(expected), source});
    };
    for (long n = 1; n <= n_max; ++n) {
      for (long r = 0; r <= n; ++r) {
        for (long s = r + 1; s <= n; ++s) {
          const CountTable table = enum_mrs(static_cast<int>(n), static_cast<int>(r),
                                            static_cast<int>(s), n_max);
          for (long k = 0; k < n; ++k) check(n, r, s, k, table.at(k), "oracle");
          check(n, r, s, 0, mrs0(n, r, s), "k=0 form");
        }
        // Boundary: M_{r,r}^{n,k} = N_{k-1}^{n,r} where the N formula applies.
        for (long k = 1; k <= n - 1; ++k) {
          check(n, r, r, k, nkr_formula_a(n, r, k - 1), "r=s identity");
        }
      }
    }
    if (!out.accepted && report.matches()) out.accepted = reading;
    out.readings.push_back(std::move(report));
  }
  return out;
}

FormulaDiscrepancy::FormulaDiscrepancy(MrsDiscrepancy detail)
    : std::runtime_error("endpoint formula disagrees with " + detail.source + " at n=" +
                         std::to_string(detail.n) + " r=" + std::to_string(detail.r) +
                         " s=" + std::to_string(detail.s) + " k=" + std::to_string(detail.k) +
                         ": " + detail.formula + " vs " + detail.expected),
      detail_(std::move(detail)) {}

BigCount mrs_checked(long n, long r, long s, long k) {
  const BigCount value = mrs_formula(n, r, s, k);
  BigCount expected;
  if (r == s) {
    const CountTable table = enum_nkr(static_cast<int>(n), static_cast<int>(r));
    expected = k >= 1 ? table.at(k - 1) : BigCount(0);
  } else {
    const CountTable table =
        enum_mrs(static_cast<int>(n), static_cast<int>(r), static_cast<int>(s));
    expected = table.at(k);
  }
  if (value != expected) {
    throw FormulaDiscrepancy({n, r, s, k, to_string(value), to_string(expected), "oracle"});
  }
  return value;
}

BigCount fnk(long n, long k) {
  require(n >= 0, "f(n,k) needs n >= 0");
  require(k >= 0 && k <= n, "f(n,k) needs 0 <= k <= n");
  return power_of_two(k) * binomial(2 * n - k, n);
}

Rat pnk(long n, long k) {
  require(n >= 1, "p(n,k) needs n >= 1");
  require(k >= 0 && k <= n - 1, "p(n,k) needs 0 <= k <= n-1");
  const BigInt num = power_of_two(k + 1) * (k + 1) * factorial(2 * n - k - 2) * factorial(n);
  const BigInt den = factorial(n - k - 1) * factorial(2 * n);
  return make_rat(num, den);
}

Rat pnk_extended(long n, long k) {
  if (k < 0 || k > n - 1) return 0;
  return pnk(n, k);
}

Rat wz_companion(long n, long k) { return -Rat(k + 2) * pnk_extended(n, k) / Rat(2 * n + 1); }

BigCount diag_sum(long n, long k) {
  require(n >= 1, "diagonal sum needs n >= 1");
  require(k >= 0 && k <= n - 2, "diagonal sum needs 0 <= k <= n-2");
  const Rat value = make_rat(power_of_two(k + 1) * (k + 1) * factorial(2 * n - k - 2),
                             factorial(n) * factorial(n - k - 1));
  return require_integer(value, label("diagonal sum", n, 0, k));
}

Rat barrier_formula(long a, long b, long x, const Rat& p) {
  require(a >= 0 && b >= 0 && x >= 0, "a, b, x must be nonnegative");
  check_probability(p);
  const Rat q = Rat(1) - p;
  Rat sum = 0;
  for (long t = 0; t <= x; ++t) {
    sum += Rat(binomial(a + b + x, a + t)) * pow(p, a + t) * pow(q, b + x - t);
  }
  return sum;
}

Rat same_start_formula(long a, long b, const Rat& p) {
  require(a >= 0 && b >= 0, "a, b must be nonnegative");
  check_probability(p);
  return 2 * Rat(binomial(a + b, a)) * pow(p, a + 1) * pow(Rat(1) - p, b + 1);
}

Rat avg_crossings(long n) {
  require(n >= 0, "average crossings needs n >= 0");
  const BigInt nf = factorial(n);
  const BigInt den = power_of_two(2 * n) * nf * nf;
  return make_rat(factorial(2 * n + 1), den) - 1;
}

BigInt vandermonde_sum(long a, long b, long m) {
  BigInt sum = 0;
  for (long i = 0; i <= m; ++i) sum += binomial(a, i) * binomial(b, m - i);
  return sum;
}

BigInt vandermonde_alternating_sum(long a, long c, long m) {
  BigInt sum = 0;
  for (long i = 0; i <= m; ++i) {
    const BigInt term = binomial(a, i) * binomial(c - i, m - i);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace latpair
