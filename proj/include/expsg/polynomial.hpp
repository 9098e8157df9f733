#pragma once

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "expsg/matrix.hpp"
#include "expsg/rational.hpp"

namespace expsg {

/// Univariate polynomial over Q, coefficients stored constant term first.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { normalize(); }

  /// x^n
  static Polynomial monomial(std::size_t n) {
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

  bool is_integral() const {
    for (const auto& c : c_)
      if (!c.is_integer()) return false;
    return true;
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> c = p.c_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return a.c_ != b.c_; }

  /// Human-readable form, e.g. "x^2 - 3*x + 2".
  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Rational& a = c_[k];
      if (a.is_zero()) continue;
      const bool negative = a.sign() < 0;
      const Rational mag = negative ? -a : a;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      const bool unit = mag == Rational(1);
      if (k == 0) {
        os << mag;
      } else {
        if (!unit) os << mag << "*";
        os << "x";
        if (k > 1) os << "^" << k;
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Quotient and remainder of a / b over Q.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const long db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (long k = a.degree(); k >= db; --k) {
    const Rational f = rem[static_cast<std::size_t>(k)] / b.leading();
    quo[static_cast<std::size_t>(k - db)] = f;
    if (f.is_zero()) continue;
    for (long i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= f * b.coefficients()[static_cast<std::size_t>(i)];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

/// p(A) by Horner's rule.
inline RationalMatrix evaluate(const Polynomial& p, const RationalMatrix& a) {
  const std::size_t n = a.dim();
  RationalMatrix acc(n, n);
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = mat_mul(acc, a);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k];
  }
  return acc;
}

/// Characteristic polynomial det(xI - A).
///
/// Reduces A to upper Hessenberg form by elementary similarity transforms
/// over Q, then expands the determinant of xI - H along the last column
/// with the standard three-term recurrence. Exact, O(d^3) field operations.
inline Polynomial char_poly(const RationalMatrix& a) {
  const std::size_t n = a.dim();
  RationalMatrix h = a;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const Rational t = h(m, m - 1);
    for (std::size_t r = m + 1; r < n; ++r) {
      if (h(r, m - 1).is_zero()) continue;
      const Rational u = h(r, m - 1) / t;
      for (std::size_t j = 0; j < n; ++j) {
        if (!h(m, j).is_zero()) h(r, j) -= u * h(m, j);
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!h(j, r).is_zero()) h(j, m) += u * h(j, r);
      }
    }
  }

  // p[k] = characteristic polynomial of the leading k x k block.
  std::vector<Polynomial> p;
  p.reserve(n + 1);
  p.emplace_back(std::vector<Rational>{Rational(1)});
  const Polynomial x = Polynomial::monomial(1);
  for (std::size_t m = 1; m <= n; ++m) {
    Polynomial pm = (x - Polynomial({h(m - 1, m - 1)})) * p[m - 1];
    Rational t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t *= h(i, i - 1);
      if (t.is_zero()) break;
      const Rational& him = h(i - 1, m - 1);
      if (!him.is_zero()) pm = pm - (him * t) * p[i - 1];
    }
    p.push_back(std::move(pm));
  }
  return p[n];
}

/// Minimal polynomial: the first linear dependence among vec(I), vec(A),
/// vec(A^2), ..., found by incremental exact Gaussian elimination.
inline Polynomial min_poly(const RationalMatrix& a) {
  const std::size_t n = a.dim();
  const std::size_t len = n * n;
  struct Row {
    std::vector<Rational> v;      // reduced vec(A^k)
    std::vector<Rational> combo;  // coefficients over I, A, ..., A^k
    std::size_t pivot;
  };
  std::vector<Row> rows;
  RationalMatrix power = RationalMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Rational> v = power.data();
    std::vector<Rational> combo(k + 1, Rational(0));
    combo[k] = 1;
    for (const Row& r : rows) {
      if (v[r.pivot].is_zero()) continue;
      const Rational f = v[r.pivot] / r.v[r.pivot];
      for (std::size_t i = 0; i < len; ++i) {
        if (!r.v[i].is_zero()) v[i] -= f * r.v[i];
      }
      for (std::size_t i = 0; i < r.combo.size(); ++i) combo[i] -= f * r.combo[i];
    }
    std::size_t pivot = 0;
    while (pivot < len && v[pivot].is_zero()) ++pivot;
    if (pivot == len) return Polynomial(std::move(combo));
    rows.push_back(Row{std::move(v), std::move(combo), pivot});
    power = mat_mul(power, a);
  }
  throw ArithmeticError("min_poly: no dependence found (unreachable by Cayley-Hamilton)");
}

/// Adjugate via Cayley-Hamilton: with p(x) = x^d + c_{d-1}x^{d-1} + ... + c_0,
/// adj(A) = (-1)^{d+1} (A^{d-1} + c_{d-1}A^{d-2} + ... + c_1 I).
/// Valid for singular A as well.
inline RationalMatrix adjugate(const RationalMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 0) return a;
  const Polynomial p = char_poly(a);
  RationalMatrix q = RationalMatrix::identity(n);
  for (std::size_t k = n - 1; k >= 1; --k) {
    q = mat_mul(q, a);
    for (std::size_t i = 0; i < n; ++i) q(i, i) += p.coefficient(k);
  }
  if (n % 2 == 0) q = scale(q, Rational(-1));
  return q;
}

}  // namespace expsg
