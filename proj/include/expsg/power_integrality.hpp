#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expsg/errors.hpp"
#include "expsg/lattice.hpp"
#include "expsg/matrix.hpp"
#include "expsg/polynomial.hpp"
#include "expsg/rational.hpp"

namespace expsg {

/// Evidence that a matrix is not power integral.
struct Witness {
  enum class Kind { CharPolyCoefficient, Determinant, Trace, RationalEigenvalue };
  Kind kind;
  std::size_t index = 0;  ///< coefficient index, or k for tr(A^k)
  Rational value;

  std::string describe() const {
    switch (kind) {
      case Kind::CharPolyCoefficient:
        return "coefficient of x^" + std::to_string(index) + " in the characteristic polynomial is " + value.str();
      case Kind::Determinant: return "det = " + value.str();
      case Kind::Trace: return "tr(A^" + std::to_string(index) + ") = " + value.str();
      case Kind::RationalEigenvalue: return "rational non-integer eigenvalue " + value.str();
    }
    return {};
  }
};

inline const char* to_string(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::CharPolyCoefficient: return "char_poly_coefficient";
    case Witness::Kind::Determinant: return "determinant";
    case Witness::Kind::Trace: return "trace";
    case Witness::Kind::RationalEigenvalue: return "rational_eigenvalue";
  }
  return "?";
}

/// A = S B S^{-1} with S invertible and both S and B integral.
struct IntegralSimilarity {
  IntegerMatrix s;
  IntegerMatrix b;
};

/// The six equivalent uniform-denominator conditions evaluated side by side.
/// They are necessary for power integrality but not sufficient: [[2, 1/2], [0, 1]]
/// satisfies them all while no positive power is integral.
/// (a), (b), and (d)/(e) come from three independent computations, so their
/// agreement is a meaningful check rather than a tautology.
struct TfaeReport {
  Polynomial char_poly;
  bool char_poly_integral = false;                 ///< (a)
  Polynomial min_poly;
  bool min_poly_integral = false;                  ///< (b)
  std::optional<BigInt> uniform_denominator;       ///< (d): m with m A^n integral for all n
  std::optional<IntegralSimilarity> similarity;    ///< (e)
  std::size_t trace_bound = 0;
  std::size_t trace_integral_upto = 0;             ///< (f), checked for k <= trace_bound
  bool verdict = false;                            ///< equals (a)
  std::vector<Witness> witnesses;
};

/// lcm of the entry denominators of A^0, ..., A^{d-1}. When the
/// characteristic polynomial is integral, m A^n is integral for every n by
/// the Cayley-Hamilton recurrence.
inline BigInt uniform_denominator_candidate(const RationalMatrix& a) {
  const std::size_t d = a.dim();
  BigInt m = 1;
  RationalMatrix p = RationalMatrix::identity(d);
  for (std::size_t k = 1; k < d; ++k) {
    p = mat_mul(p, a);
    m = lcm(m, denominator_lcm(p));
  }
  return m;
}

/// Largest lattice Λ ⊆ Z^d with A^n Λ ⊆ Z^d for all n, as the fixpoint of
/// Λ_0 = Z^d, Λ_{k+1} = {x in Λ_k : A x in Λ_k}, each step in HNF.
///
/// `guard` is a candidate uniform denominator: if some Λ_k stops containing
/// guard * Z^d, no uniform denominator exists and nullopt is returned. One of
/// the two outcomes always happens after at most d * log2(guard) strict
/// descents.
inline std::optional<IntegerLattice> invariant_lattice(const RationalMatrix& a, const BigInt& guard) {
  const std::size_t d = a.dim();
  IntegerLattice lattice = IntegerLattice::standard(d);
  std::vector<BigInt> probe(d, BigInt(0));
  while (true) {
    const RationalMatrix h = to_rational(lattice.basis());
    const RationalMatrix c = mat_mul(mat_mul(inverse(h), a), h);
    const BigInt denom = denominator_lcm(c);
    if (denom == 1) return lattice;
    const IntegerMatrix n = to_integer(scale(c, Rational(denom)));
    const IntegerLattice preimage = congruence_kernel(n, denom);
    IntegerLattice next(mat_mul(lattice.basis(), preimage.basis()));
    for (std::size_t i = 0; i < d; ++i) {
      std::fill(probe.begin(), probe.end(), BigInt(0));
      probe[i] = guard;
      if (!next.contains(probe)) return std::nullopt;
    }
    if (next == lattice) return lattice;
    lattice = std::move(next);
  }
}

/// Integral similarity A = S B S^{-1} where the columns of S are the HNF basis
/// of the invariant lattice.
inline IntegralSimilarity integral_similarity(const RationalMatrix& a) {
  const Polynomial p = char_poly(a);
  if (!p.is_integral()) throw NoIntegralSpectrum("characteristic polynomial " + p.str() + " is not in Z[x]");
  const auto lattice = invariant_lattice(a, uniform_denominator_candidate(a));
  if (!lattice) throw ArithmeticError("invariant lattice lost m*Z^d despite an integral characteristic polynomial");
  IntegralSimilarity sim;
  sim.s = lattice->basis();
  const RationalMatrix s = to_rational(sim.s);
  sim.b = to_integer(mat_mul(mat_mul(inverse(s), a), s));
  return sim;
}

namespace detail {

// Divisors of |n| by trial division, or nullopt when n has a prime factor we
// could not split cheaply.
inline std::optional<std::vector<BigInt>> small_divisors(BigInt n) {
  n = abs(n);
  if (n == 0) return std::nullopt;
  std::vector<std::pair<BigInt, unsigned>> factors;
  for (unsigned long p = 2; p <= 1'000'000 && BigInt(p) * p <= n; ++p) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    factors.emplace_back(BigInt(p), e);
  }
  if (n > 1) {
    if (n > BigInt(1'000'000) * 1'000'000 && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
    factors.emplace_back(n, 1);
  }
  std::vector<BigInt> divisors{BigInt(1)};
  for (const auto& [p, e] : factors) {
    const std::size_t count = divisors.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * pk);
      if (divisors.size() > 200'000) return std::nullopt;
    }
  }
  return divisors;
}

/// A rational root of p that is not an integer, via the rational root test.
inline std::optional<Rational> rational_non_integer_root(const Polynomial& p) {
  if (p.degree() < 1) return std::nullopt;
  BigInt l = 1;
  for (const auto& c : p.coefficients()) l = lcm(l, c.den_ref());
  std::vector<BigInt> q;
  for (const auto& c : p.coefficients()) q.push_back(c.numerator() * (l / c.denominator()));
  std::size_t shift = 0;
  while (shift < q.size() && q[shift] == 0) ++shift;
  if (shift + 1 >= q.size()) return std::nullopt;
  const auto nums = small_divisors(q[shift]);
  const auto dens = small_divisors(q.back());
  if (!nums || !dens) return std::nullopt;
  for (const BigInt& b : *dens) {
    if (b == 1) continue;
    for (const BigInt& a : *nums) {
      if (gcd(a, b) != 1) continue;
      for (int sign : {1, -1}) {
        const Rational r(BigInt(sign * a), b);
        if (p(r).is_zero()) return r;
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Cheap evidence that S(A) = {0}: a non-integral determinant, a rational
/// non-integer eigenvalue, or a non-integral tr(A^k) with k <= d.
inline std::optional<Witness> quick_reject(const RationalMatrix& a) {
  const std::size_t d = a.dim();
  const Rational dt = det(a);
  if (!dt.is_integer()) return Witness{Witness::Kind::Determinant, 0, dt};
  if (auto root = detail::rational_non_integer_root(char_poly(a))) {
    return Witness{Witness::Kind::RationalEigenvalue, 0, *root};
  }
  RationalMatrix p = RationalMatrix::identity(d);
  for (std::size_t k = 1; k <= d; ++k) {
    p = mat_mul(p, a);
    const Rational t = trace(p);
    if (!t.is_integer()) return Witness{Witness::Kind::Trace, k, t};
  }
  return std::nullopt;
}

/// Evaluates conditions (a), (b), (d), (e), (f) independently.
/// `trace_bound` must be at least the dimension.
inline TfaeReport tfae_report(const RationalMatrix& a, std::size_t trace_bound) {
  const std::size_t d = a.dim();
  if (trace_bound < d) {
    throw PreconditionViolation("trace_bound " + std::to_string(trace_bound) + " is below the dimension " +
                                std::to_string(d));
  }
  TfaeReport r;
  r.trace_bound = trace_bound;
  r.char_poly = char_poly(a);
  r.char_poly_integral = r.char_poly.is_integral();
  r.min_poly = min_poly(a);
  r.min_poly_integral = r.min_poly.is_integral();

  const BigInt m = uniform_denominator_candidate(a);
  if (auto lattice = invariant_lattice(a, m)) {
    r.uniform_denominator = m;
    IntegralSimilarity sim;
    sim.s = lattice->basis();
    const RationalMatrix s = to_rational(sim.s);
    sim.b = to_integer(mat_mul(mat_mul(inverse(s), a), s));
    r.similarity = std::move(sim);
  }

  RationalMatrix p = RationalMatrix::identity(d);
  std::optional<Witness> trace_witness;
  r.trace_integral_upto = trace_bound;
  for (std::size_t k = 1; k <= trace_bound; ++k) {
    p = mat_mul(p, a);
    const Rational t = trace(p);
    if (!t.is_integer()) {
      r.trace_integral_upto = k - 1;
      trace_witness = Witness{Witness::Kind::Trace, k, t};
      break;
    }
  }

  r.verdict = r.char_poly_integral;
  if (!r.verdict) {
    const auto& c = r.char_poly.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_integer()) {
        r.witnesses.push_back(Witness{Witness::Kind::CharPolyCoefficient, i, c[i]});
        break;
      }
    }
    if (trace_witness) r.witnesses.push_back(*trace_witness);
    if (auto root = detail::rational_non_integer_root(r.char_poly)) {
      r.witnesses.push_back(Witness{Witness::Kind::RationalEigenvalue, 0, *root});
    }
  }
  return r;
}

}  // namespace expsg
