#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "expsg/errors.hpp"
#include "expsg/matrix.hpp"
#include "expsg/rational.hpp"

namespace expsg {

// Hermite normal form convention used throughout: a full-rank lattice in Z^d
// is represented by the d x d basis matrix H whose COLUMNS generate it, with
//   * H lower triangular,
//   * H(i, i) > 0,
//   * 0 <= H(i, j) < H(i, i) for every j < i.
// This form is unique per lattice, so two bases describe the same lattice
// exactly when their HNFs are equal.

namespace detail {

inline void swap_columns(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

inline void negate_column(IntegerMatrix& m, std::size_t c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

// column[dst] -= f * column[src]
inline void axpy_column(IntegerMatrix& m, std::size_t dst, std::size_t src, const BigInt& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, src) != 0) m(i, dst) -= f * m(i, src);
  }
}

}  // namespace detail

/// Result of column-style Hermite reduction: M * U = [H | 0] with U unimodular.
struct HermiteReduction {
  IntegerMatrix h;          ///< rows(M) x rank, lower triangular part in HNF
  IntegerMatrix transform;  ///< cols(M) x cols(M) unimodular U
  std::size_t rank = 0;
};

/// Column Hermite reduction of a d x n integer matrix of full row rank d.
/// The first d columns of M*U hold the HNF; the remaining n - d columns are zero,
/// so the trailing columns of U span the integer kernel of M.
inline HermiteReduction hermite_reduce(const IntegerMatrix& m) {
  const std::size_t d = m.rows();
  const std::size_t n = m.cols();
  IntegerMatrix a = m;
  IntegerMatrix u = IntegerMatrix::identity(n);
  if (n < d) throw RankDeficient("hnf: fewer generators than dimension");

  for (std::size_t i = 0; i < d; ++i) {
    // Euclid on row i over columns i..n-1 until only column i is nonzero.
    while (true) {
      std::size_t best = n;
      for (std::size_t j = i; j < n; ++j) {
        if (a(i, j) == 0) continue;
        if (best == n || abs(a(i, j)) < abs(a(i, best))) best = j;
      }
      if (best == n) throw RankDeficient("hnf: input does not span a full-rank lattice");
      detail::swap_columns(a, i, best);
      detail::swap_columns(u, i, best);
      bool done = true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (a(i, j) == 0) continue;
        const BigInt q = floor_div(a(i, j), a(i, i));
        detail::axpy_column(a, j, i, q);
        detail::axpy_column(u, j, i, q);
        if (a(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (a(i, i) < 0) {
      detail::negate_column(a, i);
      detail::negate_column(u, i);
    }
    for (std::size_t j = 0; j < i; ++j) {
      const BigInt q = floor_div(a(i, j), a(i, i));
      detail::axpy_column(a, j, i, q);
      detail::axpy_column(u, j, i, q);
    }
  }

  HermiteReduction r;
  r.rank = d;
  r.h = IntegerMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) r.h(i, j) = a(i, j);
  r.transform = std::move(u);
  return r;
}

/// Full-rank sublattice of Z^d held by its canonical HNF basis (columns).
class IntegerLattice {
 public:
  /// Lattice spanned by the columns of `generators` (d x n, rank d).
  explicit IntegerLattice(const IntegerMatrix& generators) : basis_(hermite_reduce(generators).h) {}

  static IntegerLattice standard(std::size_t d) { return IntegerLattice(IntegerMatrix::identity(d)); }

  const IntegerMatrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }

  /// Index [Z^d : L], the product of the diagonal.
  BigInt index() const {
    BigInt p = 1;
    for (std::size_t i = 0; i < dim(); ++i) p *= basis_(i, i);
    return p;
  }

  /// Coordinates of v in the basis when v lies in the lattice.
  std::optional<std::vector<BigInt>> coordinates(const std::vector<BigInt>& v) const {
    const std::size_t d = dim();
    std::vector<BigInt> y(d);
    std::vector<BigInt> rest = v;
    for (std::size_t i = 0; i < d; ++i) {
      if (!mpz_divisible_p(rest[i].get_mpz_t(), basis_(i, i).get_mpz_t())) return std::nullopt;
      y[i] = rest[i] / basis_(i, i);
      for (std::size_t r = i; r < d; ++r) rest[r] -= y[i] * basis_(r, i);
    }
    return y;
  }

  bool contains(const std::vector<BigInt>& v) const { return coordinates(v).has_value(); }

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const IntegerLattice& a, const IntegerLattice& b) { return !(a == b); }

 private:
  IntegerMatrix basis_;
};

/// Canonical HNF of the lattice spanned by the columns of m.
inline IntegerLattice hnf(const IntegerMatrix& m) { return IntegerLattice(m); }

/// The lattice {y in Z^d : N y == 0 (mod modulus)} for a d x d integer N.
/// Computed as the projection of the integer kernel of [N | modulus*I].
inline IntegerLattice congruence_kernel(const IntegerMatrix& n, const BigInt& modulus) {
  const std::size_t d = n.rows();
  IntegerMatrix k(d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) k(i, j) = n(i, j);
    k(i, d + i) = modulus;
  }
  const HermiteReduction red = hermite_reduce(k);
  IntegerMatrix y(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) y(i, j) = red.transform(i, d + j);
  return IntegerLattice(y);
}

}  // namespace expsg
