#pragma once

// Exact integer and rational arithmetic shared by every module.
//
// Counts are GMP integers and probabilities are GMP rationals kept in
// canonical (lowest-terms, positive denominator) form.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace latpair {

using BigInt = mpz_class;
using BigCount = mpz_class;  // nonnegative by construction at every producer
using Rat = mpq_class;

/// Thrown when an expression that must reduce to an integer does not.
class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binomial coefficient with the "negative factorial vanishes" convention:
/// zero when a < 0, b < 0 or b > a.
BigInt binomial(std::int64_t a, std::int64_t b);

BigInt factorial(std::int64_t n);

BigInt power_of_two(std::int64_t e);

/// a / b as a canonical rational; b must be nonzero.
Rat make_rat(const BigInt& num, const BigInt& den);

Rat pow(const Rat& base, std::int64_t e);

/// Returns the integer value of q, or throws IntegralityError naming `what`.
BigInt require_integer(const Rat& q, std::string_view what);

/// Parses "p/q" or "p" (optional leading '-'); decimal notation is rejected.
Rat parse_rational(std::string_view text);

/// Parses a decimal integer string.
BigInt parse_integer(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rat& q);
std::string to_string(const BigInt& z);

/// True iff 0 <= p <= 1.
bool is_probability(const Rat& p);

}  // namespace latpair
