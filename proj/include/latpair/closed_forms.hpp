#pragma once

// Exact evaluation of the closed forms. Every integer-valued formula is
// evaluated in rationals and must land on an integer; anything else throws
// IntegralityError.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latpair/numeric.hpp"

namespace latpair {

/// N_k^{n,r}, first form: 2(k+1)/(n-k-1) * sum_i C(k,i) C(n-k+i-1,r) C(n-i-1,n-r).
/// Valid for 0 <= k <= n-2.
BigCount nkr_formula_a(long n, long r, long k);

/// N_k^{n,r}, alternating form with 2(k+1)/r in front. At r = 0 it is taken
/// from the transposed rectangle (r -> n - r).
BigCount nkr_formula_b(long n, long r, long k);

/// N_0^{n,r} / 2 = C(n-1,r) C(n-1,n-r) / (n-1), for n >= 2 and 1 <= r <= n-1.
BigCount narayana(long n, long r);

/// Candidate groupings of the first term's rational factor in the
/// different-endpoint count. `AsPrinted` uses (s-j-r+1+2t)/(n-1-j-2t).
enum class EndpointReading {
  AsPrinted,
  NumeratorWithoutJ,    // (s-r+1+2t)/(n-1-j-2t)
  DenominatorWithoutJ,  // (s-j-r+1+2t)/(n-1-2t)
  NeitherWithJ,         // (s-r+1+2t)/(n-1-2t)
};

inline constexpr EndpointReading kAllEndpointReadings[] = {
    EndpointReading::AsPrinted, EndpointReading::NumeratorWithoutJ,
    EndpointReading::DenominatorWithoutJ, EndpointReading::NeitherWithJ};

std::string to_string(EndpointReading reading);

/// Raw value of the different-endpoint formula under one reading, without
/// an integrality check. Requires 0 <= r <= s <= n and 0 <= k < n.
Rat mrs_formula_raw(long n, long r, long s, long k, EndpointReading reading);

/// M_{r,s}^{n,k}: unordered (r-path, s-path) pairs meeting in k points after
/// the start. For r = s this is N_{k-1}^{n,r}.
BigCount mrs_formula(long n, long r, long s, long k);

/// M_{r,s}^{n,0} = (s-r)/n C(n,r) C(n,s), r < s.
BigCount mrs0(long n, long r, long s);

struct MrsDiscrepancy {
  long n = 0;
  long r = 0;
  long s = 0;
  long k = 0;
  std::string formula;   // "n/d" or "undefined"
  std::string expected;  // oracle or boundary value
  std::string source;    // "oracle", "r=s identity", "k=0 form"
};

struct ReadingReport {
  EndpointReading reading{};
  long instances = 0;
  std::vector<MrsDiscrepancy> discrepancies;

  bool matches() const { return discrepancies.empty(); }
};

struct EndpointResolution {
  std::vector<ReadingReport> readings;
  std::optional<EndpointReading> accepted;
};

/// Evaluates every candidate reading against enumeration for all r < s and
/// 0 <= k < n with n <= n_max, against N_{k-1}^{n,r} for r = s, and against
/// the k = 0 form. The first reading with no discrepancy is accepted.
EndpointResolution resolve_endpoint_reading(int n_max);

/// Thrown by mrs_checked when formula and enumeration disagree.
class FormulaDiscrepancy : public std::runtime_error {
 public:
  explicit FormulaDiscrepancy(MrsDiscrepancy detail);
  const MrsDiscrepancy& detail() const { return detail_; }

 private:
  MrsDiscrepancy detail_;
};

/// mrs_formula, cross-checked against enumeration (n must be within the
/// oracle bound).
BigCount mrs_checked(long n, long r, long s, long k);

/// f(n,k) = 2^k C(2n-k, n), 0 <= k <= n.
BigCount fnk(long n, long k);

/// p(n,k) = 2^{k+1}(k+1)(2n-k-2)! n! / ((n-k-1)! (2n)!), n >= 1, 0 <= k <= n-1.
Rat pnk(long n, long k);

/// p(n,k) extended by zero outside 0 <= k <= n-1 (n >= 1).
Rat pnk_extended(long n, long k);

/// g(n,k) = -(k+2) p(n,k) / (2n+1), with p extended by zero. Satisfies
/// p(n+1,k) - p(n,k) = g(n,k) - g(n,k-1).
Rat wz_companion(long n, long k);

/// sum_{i+j=n} N_k^{n,j} = 2^{k+1}(k+1)(2n-k-2)! / (n! (n-k-1)!), 0 <= k <= n-2.
BigCount diag_sum(long n, long k);

/// sum_{t=0}^{x} C(a+b+x, a+t) p^{a+t} q^{b+x-t}.
Rat barrier_formula(long a, long b, long x, const Rat& p);

/// 2 C(a+b,a) p^{a+1} q^{b+1}.
Rat same_start_formula(long a, long b, const Rat& p);

/// (2n+1)! / (4^n n!^2) - 1.
Rat avg_crossings(long n);

/// Left side of sum_i C(a,i) C(b,m-i) = C(a+b,m).
BigInt vandermonde_sum(long a, long b, long m);

/// Left side of sum_i (-1)^i C(a,i) C(c-i,m-i) = C(c-a,m).
BigInt vandermonde_alternating_sum(long a, long c, long m);

}  // namespace latpair
