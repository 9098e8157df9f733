#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "expsg/errors.hpp"
#include "expsg/rational.hpp"

namespace expsg {

/// Dense row-major matrix over an exact ring. Square matrices are the common
/// case; the lattice code also needs rectangular integer matrices.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix zero(std::size_t n) { return Matrix(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  /// Side length of a square matrix.
  std::size_t dim() const {
    if (!is_square()) throw DimensionMismatch("matrix is not square");
    return rows_;
  }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const { return data_; }

  Matrix column(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// One bracketed row per line.
template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
    os << "]\n";
  }
  return os;
}

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<BigInt>;

namespace detail {
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const BigInt& z) { return sgn(z) == 0; }
}  // namespace detail

/// Builds a rational matrix from "p/q" strings; handy in tests and fixtures.
inline RationalMatrix make_matrix(std::initializer_list<std::initializer_list<std::string_view>> rows) {
  std::vector<std::vector<std::string_view>> tmp;
  for (const auto& r : rows) tmp.emplace_back(r);
  const std::size_t n = tmp.size();
  const std::size_t c = n == 0 ? 0 : tmp.front().size();
  RationalMatrix m(n, c);
  for (std::size_t i = 0; i < n; ++i) {
    if (tmp[i].size() != c) throw DimensionMismatch("ragged matrix initializer");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational::parse(tmp[i][j]);
  }
  return m;
}

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix<T> c(a.rows(), b.cols());
  // Row-times-row order so that zero entries of a skip whole rows of b.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (detail::is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const T& bkj = b(k, j);
        if (detail::is_zero(bkj)) continue;
        c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  return mat_mul(a, b);
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix addition");
  Matrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix subtraction");
  Matrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

template <class T>
Matrix<T> scale(const Matrix<T>& a, const T& s) {
  Matrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

/// A^n by binary powering; A^0 = I.
template <class T>
Matrix<T> mat_pow(const Matrix<T>& a, unsigned long long n) {
  Matrix<T> result = Matrix<T>::identity(a.dim());
  Matrix<T> base = a;
  while (n > 0) {
    if (n & 1ull) result = mat_mul(result, base);
    n >>= 1;
    if (n > 0) base = mat_mul(base, base);
  }
  return result;
}

inline bool is_integral(const RationalMatrix& a) {
  return std::all_of(a.data().begin(), a.data().end(), [](const Rational& r) { return r.is_integer(); });
}

template <class T>
T trace(const Matrix<T>& a) {
  T t(0);
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

/// Least common multiple of all entry denominators.
inline BigInt denominator_lcm(const RationalMatrix& a) {
  BigInt l = 1;
  for (const auto& r : a.data()) {
    if (!r.is_integer()) l = lcm(l, r.den_ref());
  }
  return l;
}

inline RationalMatrix to_rational(const IntegerMatrix& a) {
  RationalMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

inline IntegerMatrix to_integer(const RationalMatrix& a) {
  IntegerMatrix z(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_integer()) {
        throw ArithmeticError("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") = " + a(i, j).str() +
                              " is not an integer");
      }
      z(i, j) = a(i, j).numerator();
    }
  }
  return z;
}

/// Determinant by Gaussian elimination over Q.
inline Rational det(const RationalMatrix& a) {
  const std::size_t n = a.dim();
  RationalMatrix m = a;
  Rational result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      result = -result;
    }
    const Rational p = m(col, col);
    result *= p;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const Rational f = m(i, col) / p;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return result;
}

/// Fraction-free Bareiss determinant of an integer matrix.
inline BigInt det(const IntegerMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Inverse over Q by Gauss-Jordan; throws ArithmeticError when singular.
inline RationalMatrix inverse(const RationalMatrix& a) {
  const std::size_t n = a.dim();
  RationalMatrix m = a;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw ArithmeticError("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational p = m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      const Rational f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Kronecker product; dimensions multiply.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (detail::is_zero(a(i, j))) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

/// Block-diagonal sum A (+) B; dimensions add. An empty operand is the unit.
template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> s(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, a.cols() + j) = b(i, j);
  return s;
}

/// The d x d matrix with the given entries on the first superdiagonal.
inline RationalMatrix superdiag(const std::vector<Rational>& entries) {
  RationalMatrix m(entries.size() + 1, entries.size() + 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i + 1) = entries[i];
  return m;
}

}  // namespace expsg
