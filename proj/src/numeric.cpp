#include "latpair/numeric.hpp"

#include <cctype>

namespace latpair {

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return out;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt power_of_two(std::int64_t e) {
  if (e < 0) throw std::domain_error("negative power of two");
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat pow(const Rat& base, std::int64_t e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return pow(Rat(1) / base, -e);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  // base is canonical, so coprime powers stay canonical
  return Rat(num, den);
}

BigInt require_integer(const Rat& value, std::string_view what) {
  // mpq_class(a, b) does not reduce; never trust the caller's form.
  Rat q = value;
  q.canonicalize();
  if (q.get_den() != 1) {
    throw IntegralityError(std::string(what) + " evaluated to non-integer " + to_string(q));
  }
  return q.get_num();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigInt parse_integer(std::string_view text) {
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  BigInt z(std::string(text), 10);
  return negative ? BigInt(-z) : z;
}

Rat parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(trim(den_text))) {
    throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rat(num, den);
}

std::string to_string(const Rat& value) {
  Rat q = value;
  q.canonicalize();
  return q.get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

bool is_probability(const Rat& p) { return p >= 0 && p <= 1; }

}  // namespace latpair
