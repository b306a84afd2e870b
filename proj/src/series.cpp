#include "latpair/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace latpair {

namespace {

void check_degree(int degree) {
  if (degree < 0) throw std::invalid_argument("truncation degree must be nonnegative");
}

void check_same_degree(int a, int b) {
  if (a != b) throw std::invalid_argument("series truncated at different degrees");
}

}  // namespace

// ---------------------------------------------------------------------------
// UniSeries

UniSeries::UniSeries(int degree) : degree_(degree) {
  check_degree(degree);
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rat(0));
}

UniSeries::UniSeries(int degree, std::span<const Rat> coeffs) : UniSeries(degree) {
  const std::size_t n = std::min(coeffs.size(), coeffs_.size());
  std::copy_n(coeffs.begin(), n, coeffs_.begin());
}

UniSeries UniSeries::constant(int degree, const Rat& c) {
  UniSeries s(degree);
  s[0] = c;
  return s;
}

UniSeries UniSeries::variable(int degree) {
  UniSeries s(degree);
  if (degree >= 1) s[1] = 1;
  return s;
}

UniSeries& UniSeries::operator+=(const UniSeries& o) {
  check_same_degree(degree_, o.degree_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

UniSeries& UniSeries::operator-=(const UniSeries& o) {
  check_same_degree(degree_, o.degree_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

UniSeries& UniSeries::operator*=(const Rat& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
  check_same_degree(a.degree_, b.degree_);
  UniSeries out(a.degree_);
  for (int i = 0; i <= a.degree_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= a.degree_; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

UniSeries pow(const UniSeries& s, int e) {
  if (e < 0) throw std::invalid_argument("negative series power");
  UniSeries result = UniSeries::constant(s.degree(), Rat(1));
  UniSeries base = s;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

UniSeries sqrt(const UniSeries& s) {
  if (s[0] != 1) throw std::domain_error("series square root needs constant term 1");
  // t^2 = s degree by degree: 2 t_m = s_m - sum_{0<i<m} t_i t_{m-i}.
  UniSeries t(s.degree());
  t[0] = 1;
  for (int m = 1; m <= s.degree(); ++m) {
    Rat acc = s[m];
    for (int i = 1; i < m; ++i) acc -= t[i] * t[m - i];
    t[m] = acc / 2;
  }
  return t;
}

UniSeries inverse(const UniSeries& s) {
  if (s[0] == 0) throw std::domain_error("series inverse needs a nonzero constant term");
  UniSeries t(s.degree());
  t[0] = Rat(1) / s[0];
  for (int m = 1; m <= s.degree(); ++m) {
    Rat acc = 0;
    for (int i = 1; i <= m; ++i) acc += s[i] * t[m - i];
    t[m] = -acc / s[0];
  }
  return t;
}

// ---------------------------------------------------------------------------
// BiSeries

BiSeries::BiSeries(int degree) : degree_(degree) {
  check_degree(degree);
  const auto d = static_cast<std::size_t>(degree);
  coeffs_.assign((d + 1) * (d + 2) / 2, Rat(0));
}

std::size_t BiSeries::index(int i, int j) const {
  if (i < 0 || j < 0 || i + j > degree_) throw std::out_of_range("coefficient past truncation");
  // Rows 0..i-1 have lengths D+1, D, ..., D-i+2.
  const auto d = static_cast<std::size_t>(degree_);
  const auto ii = static_cast<std::size_t>(i);
  return ii * (d + 1) - ii * (ii - 1) / 2 + static_cast<std::size_t>(j);
}

Rat BiSeries::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > degree_) return 0;
  return coeffs_[index(i, j)];
}

Rat& BiSeries::at(int i, int j) { return coeffs_[index(i, j)]; }
const Rat& BiSeries::at(int i, int j) const { return coeffs_[index(i, j)]; }

BiSeries BiSeries::constant(int degree, const Rat& c) {
  BiSeries s(degree);
  s.at(0, 0) = c;
  return s;
}

BiSeries BiSeries::first_variable(int degree) {
  BiSeries s(degree);
  if (degree >= 1) s.at(1, 0) = 1;
  return s;
}

BiSeries BiSeries::second_variable(int degree) {
  BiSeries s(degree);
  if (degree >= 1) s.at(0, 1) = 1;
  return s;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  check_same_degree(degree_, o.degree_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  check_same_degree(degree_, o.degree_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

BiSeries& BiSeries::operator*=(const Rat& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  check_same_degree(a.degree_, b.degree_);
  const int d = a.degree_;
  BiSeries out(d);
  for (int i1 = 0; i1 <= d; ++i1) {
    for (int j1 = 0; i1 + j1 <= d; ++j1) {
      const Rat& ca = a.at(i1, j1);
      if (ca == 0) continue;
      for (int i2 = 0; i1 + j1 + i2 <= d; ++i2) {
        for (int j2 = 0; i1 + j1 + i2 + j2 <= d; ++j2) {
          const Rat& cb = b.at(i2, j2);
          if (cb == 0) continue;
          out.at(i1 + i2, j1 + j2) += ca * cb;
        }
      }
    }
  }
  return out;
}

bool BiSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

BiSeries pow(const BiSeries& s, int e) {
  if (e < 0) throw std::invalid_argument("negative series power");
  BiSeries result = BiSeries::constant(s.degree(), Rat(1));
  BiSeries base = s;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

BiSeries sqrt(const BiSeries& s) {
  if (s.at(0, 0) != 1) throw std::domain_error("series square root needs constant term 1");
  const int d = s.degree();
  BiSeries t(d);
  t.at(0, 0) = 1;
  // Fill by increasing total degree; the product sum only touches lower
  // total degrees, all already final.
  for (int total = 1; total <= d; ++total) {
    for (int i = 0; i <= total; ++i) {
      const int j = total - i;
      Rat acc = s.at(i, j);
      for (int a = 0; a <= i; ++a) {
        for (int b = 0; b <= j; ++b) {
          if ((a == 0 && b == 0) || (a == i && b == j)) continue;
          acc -= t.at(a, b) * t.at(i - a, j - b);
        }
      }
      t.at(i, j) = acc / 2;
    }
  }
  return t;
}

BiSeries inverse(const BiSeries& s) {
  const Rat c0 = s.at(0, 0);
  if (c0 == 0) throw std::domain_error("series inverse needs a nonzero constant term");
  const int d = s.degree();
  BiSeries t(d);
  t.at(0, 0) = Rat(1) / c0;
  for (int total = 1; total <= d; ++total) {
    for (int i = 0; i <= total; ++i) {
      const int j = total - i;
      Rat acc = 0;
      for (int a = 0; a <= i; ++a) {
        for (int b = 0; b <= j; ++b) {
          if (a == 0 && b == 0) continue;
          acc += s.at(a, b) * t.at(i - a, j - b);
        }
      }
      t.at(i, j) = -acc / c0;
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Generating functions

namespace {

// 1 - 2x(y+1) + x^2(y-1)^2
BiSeries legendre_radicand(int degree) {
  const BiSeries one = BiSeries::constant(degree, Rat(1));
  const BiSeries x = BiSeries::first_variable(degree);
  const BiSeries y = BiSeries::second_variable(degree);
  const BiSeries ym1 = y - one;
  return one - x * (y + one) * Rat(2) + x * x * ym1 * ym1;
}

}  // namespace

BiSeries u0_series(int degree) {
  return BiSeries::constant(degree, Rat(1)) - sqrt(legendre_radicand(degree));
}

BiSeries uk_series(int k, int degree) {
  if (k < 0) throw std::invalid_argument("u_k needs k >= 0");
  return pow(u0_series(degree), k + 1);
}

BiSeries legendre_series(int degree) { return inverse(sqrt(legendre_radicand(degree))); }

SeriesCheck legendre_identity_check(int degree) {
  const BiSeries s = legendre_series(degree);
  SeriesCheck out;
  for (int n = 0; n <= degree; ++n) {
    for (int r = 0; n + r <= degree; ++r) {
      ++out.coefficients;
      const BigInt b = binomial(n, r);
      const Rat expected(b * b);
      if (s.at(n, r) != expected && !out.first_failure) {
        out.passed = false;
        out.first_failure = "[x^" + std::to_string(n) + " y^" + std::to_string(r) + "] = " +
                            to_string(s.at(n, r)) + ", expected " + to_string(expected);
      }
    }
  }
  return out;
}

BiSeries f_series(int degree) {
  const BiSeries one = BiSeries::constant(degree, Rat(1));
  const BiSeries y = BiSeries::first_variable(degree);
  const BiSeries z = BiSeries::second_variable(degree);
  const BiSeries w = one - y - z;
  const BiSeries root = sqrt(w * w - y * z * Rat(4));
  return (w - root) * Rat(1, 2);
}

BiSeries f_residual(int degree) {
  const BiSeries f = f_series(degree);
  const BiSeries y = BiSeries::first_variable(degree);
  const BiSeries z = BiSeries::second_variable(degree);
  return f - (y + f) * (z + f);
}

BiSeries proposition_series(int k, int degree) {
  if (k < 0) throw std::invalid_argument("proposition series needs k >= 0");
  const BiSeries f = f_series(degree);
  const BiSeries y = BiSeries::first_variable(degree);
  const BiSeries z = BiSeries::second_variable(degree);
  return pow(y + z + f * Rat(2), k + 1);
}

namespace {

UniSeries sqrt_one_minus_4x(int degree) {
  UniSeries s = UniSeries::constant(degree, Rat(1));
  if (degree >= 1) s[1] = -4;
  return sqrt(s);
}

}  // namespace

UniSeries fk_series(int k, int degree) {
  if (k < 0) throw std::invalid_argument("F_k needs k >= 0");
  const UniSeries root = sqrt_one_minus_4x(degree);
  const UniSeries one = UniSeries::constant(degree, Rat(1));
  return pow(one - root, k) * inverse(root);
}

UniSeries phik_series(int k, int degree) {
  if (k < 0) throw std::invalid_argument("Phi_k needs k >= 0");
  const UniSeries one = UniSeries::constant(degree, Rat(1));
  return pow(one - sqrt_one_minus_4x(degree), k + 1);
}

// ---------------------------------------------------------------------------
// Polynomials and Lagrange inversion

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_pow(const Poly& a, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly result{Rat(1)};
  for (int i = 0; i < e; ++i) result = poly_mul(result, a);
  return result;
}

Poly poly_derivative(const Poly& a) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * Rat(static_cast<long>(i));
  return out;
}

Rat poly_eval(const Poly& a, const Rat& t) {
  Rat acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rat lagrange_extract(const Poly& phi, const Poly& g, int n) {
  if (n < 1) throw std::invalid_argument("Lagrange extraction needs n >= 1");
  if (g.empty() || g[0] == 0) throw std::domain_error("Lagrange extraction needs g(0) != 0");
  const Poly prod = poly_mul(poly_derivative(phi), poly_pow(g, n));
  const auto idx = static_cast<std::size_t>(n - 1);
  const Rat c = idx < prod.size() ? prod[idx] : Rat(0);
  return c / Rat(n);
}

Poly interpolate(std::span<const Rat> xs, std::span<const Rat> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolation needs matching sizes");
  const std::size_t m = xs.size();
  // Newton divided differences, then expand the Newton form.
  std::vector<Rat> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      const Rat span = xs[i] - xs[i - level];
      if (span == 0) throw std::invalid_argument("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / span;
    }
  }
  if (m == 0) return {};
  Poly out{dd[m - 1]};
  for (std::size_t i = m - 1; i-- > 0;) {
    // out = out * (t - xs[i]) + dd[i]
    Poly next(out.size() + 1, Rat(0));
    for (std::size_t j = 0; j < out.size(); ++j) {
      next[j + 1] += out[j];
      next[j] -= out[j] * xs[i];
    }
    next[0] += dd[i];
    out = std::move(next);
  }
  out.resize(m, Rat(0));
  return out;
}

}  // namespace latpair
