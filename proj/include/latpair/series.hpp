#pragma once

// Truncated formal power series with exact rational coefficients.
//
// UniSeries is truncated at degree D; BiSeries at total degree D, stored as
// a triangle. Coefficients past the truncation are never consulted, so all
// ring operations are exact up to D. Square roots take the branch with
// constant term 1.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latpair/numeric.hpp"

namespace latpair {

inline constexpr int kDefaultSeriesDegree = 12;

class UniSeries {
 public:
  explicit UniSeries(int degree);
  UniSeries(int degree, std::span<const Rat> coeffs);

  static UniSeries constant(int degree, const Rat& c);
  /// The series x (zero if degree is 0).
  static UniSeries variable(int degree);

  int degree() const { return degree_; }
  const Rat& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  Rat& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  UniSeries& operator+=(const UniSeries& o);
  UniSeries& operator-=(const UniSeries& o);
  UniSeries& operator*=(const Rat& c);

  friend UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
  friend UniSeries operator-(UniSeries a, const UniSeries& b) { return a -= b; }
  friend UniSeries operator*(UniSeries a, const Rat& c) { return a *= c; }
  friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
  friend bool operator==(const UniSeries&, const UniSeries&) = default;

 private:
  int degree_;
  std::vector<Rat> coeffs_;
};

UniSeries pow(const UniSeries& s, int e);

/// Throws std::domain_error unless s[0] == 1.
UniSeries sqrt(const UniSeries& s);

/// Multiplicative inverse; throws std::domain_error if s[0] == 0.
UniSeries inverse(const UniSeries& s);

class BiSeries {
 public:
  explicit BiSeries(int degree);

  static BiSeries constant(int degree, const Rat& c);
  /// The first variable (x, or y in the (y, z) parametrisation).
  static BiSeries first_variable(int degree);
  static BiSeries second_variable(int degree);

  int degree() const { return degree_; }

  /// Coefficient of v1^i v2^j; zero past the truncation.
  Rat coeff(int i, int j) const;
  Rat& at(int i, int j);
  const Rat& at(int i, int j) const;

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  BiSeries& operator*=(const Rat& c);

  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator*(BiSeries a, const Rat& c) { return a *= c; }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend bool operator==(const BiSeries&, const BiSeries&) = default;

  bool is_zero() const;

 private:
  std::size_t index(int i, int j) const;

  int degree_;
  std::vector<Rat> coeffs_;  // row i holds j = 0..degree-i
};

BiSeries pow(const BiSeries& s, int e);
BiSeries sqrt(const BiSeries& s);
BiSeries inverse(const BiSeries& s);

/// u_0(x,y) = 1 - sqrt(1 - 2x(y+1) + x^2(y-1)^2).
BiSeries u0_series(int degree = kDefaultSeriesDegree);

/// u_k = u_0^{k+1}; [x^n y^r] is N_k^{n,r}.
BiSeries uk_series(int k, int degree = kDefaultSeriesDegree);

/// 1 / sqrt(1 - 2x(y+1) + x^2(y-1)^2); [x^n y^r] should be C(n,r)^2.
BiSeries legendre_series(int degree = kDefaultSeriesDegree);

struct SeriesCheck {
  bool passed = true;
  long coefficients = 0;
  std::optional<std::string> first_failure;
};

/// Compares the Legendre-form series against C(n,r)^2 for n + r <= degree.
SeriesCheck legendre_identity_check(int degree = kDefaultSeriesDegree);

/// f(y,z) = ((1-y-z) - sqrt((1-y-z)^2 - 4yz)) / 2.
BiSeries f_series(int degree = kDefaultSeriesDegree);

/// f - (y+f)(z+f), which vanishes up to the truncation.
BiSeries f_residual(int degree = kDefaultSeriesDegree);

/// (y + z + 2f)^{k+1}; [y^r z^{n-r}] is N_k^{n,r}.
BiSeries proposition_series(int k, int degree = kDefaultSeriesDegree);

/// F_k(x) = (1 - sqrt(1-4x))^k / sqrt(1-4x); [x^n] is f(n,k).
UniSeries fk_series(int k, int degree);

/// Phi_k(x) = (1 - sqrt(1-4x))^{k+1}.
UniSeries phik_series(int k, int degree);

/// Polynomial with exact coefficients, lowest degree first.
using Poly = std::vector<Rat>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, int e);
Poly poly_derivative(const Poly& a);
Rat poly_eval(const Poly& a, const Rat& t);

/// [x^n] phi(f) for f = x g(f), via (1/n) [t^{n-1}] phi'(t) g(t)^n.
/// Requires g(0) != 0 and n >= 1.
Rat lagrange_extract(const Poly& phi, const Poly& g, int n);

/// Coefficients c_0..c_{m-1} of the unique polynomial of degree < m through
/// the m points (xs[i], ys[i]); xs must be distinct.
Poly interpolate(std::span<const Rat> xs, std::span<const Rat> ys);

}  // namespace latpair
