#pragma once

#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expsg/errors.hpp"
#include "expsg/exponent_semigroup.hpp"
#include "expsg/matrix.hpp"
#include "expsg/rational.hpp"
#include "expsg/semigroup.hpp"

namespace expsg {

/// Exponents x_1..x_g in {-1, 0, 1} for the superdiagonal b^{x_1}, ..., b^{x_g}.
struct SuperdiagonalVector {
  std::vector<int> entries;
  long base = 2;
  SubsemigroupDesc target = SubsemigroupDesc::trivial();
};

struct ConstructionResult {
  RationalMatrix matrix;
  std::optional<SuperdiagonalVector> vector;
  SubsemigroupDesc claimed = SubsemigroupDesc::trivial();
  bool verified = false;
  std::string family;  ///< "nilpotent", "nilpotent+cyclic", "zero", "cyclic", "tail", "two_generator"
  std::optional<ExponentAnalysis> analysis;
};

namespace detail {

inline void check_base(long base) {
  if (base >= -1 && base <= 1) throw PreconditionViolation("base must satisfy |b| >= 2, got " + std::to_string(base));
}

// The tally loop: sigma stays in {0, -1}.
inline std::vector<int> tally_loop(const std::function<bool(Natural)>& member, Natural steps) {
  std::vector<int> x;
  x.reserve(static_cast<std::size_t>(std::max<Natural>(steps, 0)));
  int sigma = 0;
  for (Natural i = 1; i <= steps; ++i) {
    int xi;
    if (member(i)) {
      xi = sigma == -1 ? 1 : 0;
    } else {
      xi = sigma == 0 ? -1 : 0;
    }
    sigma += xi;
    x.push_back(xi);
  }
  return x;
}

inline Rational signed_power(long base, int e) {
  const Rational b{BigInt(base)};
  if (e == 0) return 1;
  return e > 0 ? b : Rational(1) / b;
}

inline ConstructionResult verified_result(RationalMatrix m, std::optional<SuperdiagonalVector> v,
                                          SubsemigroupDesc claimed, std::string family, const StateBudget& budget) {
  ConstructionResult r;
  r.matrix = std::move(m);
  r.vector = std::move(v);
  r.claimed = std::move(claimed);
  r.family = std::move(family);
  r.analysis = exponent_semigroup(r.matrix, budget);
  r.verified = r.analysis->final && *r.analysis->classification == r.claimed;
  return r;
}

}  // namespace detail

/// Superdiagonal exponents for a proper numerical semigroup, one per
/// integer 1..g(S).
inline SuperdiagonalVector find_superdiagonal(const SubsemigroupDesc& s, long base = 2) {
  detail::check_base(base);
  if (s.kind() != SemigroupKind::Numerical) {
    throw PreconditionViolation("find_superdiagonal needs a numerical semigroup other than N, got " + s.str());
  }
  SuperdiagonalVector v;
  v.entries = detail::tally_loop([&](Natural i) { return s.contains(i); }, s.part().frobenius());
  v.base = base;
  v.target = s;
  return v;
}

/// The same loop run against S itself (content d0 >= 2) up to d0 * g(S / d0).
inline SuperdiagonalVector find_superdiagonal_general(const SubsemigroupDesc& s, long base = 2) {
  detail::check_base(base);
  if (s.is_trivial()) throw TrivialSemigroupUnrepresentable("{0} has no superdiagonal representation");
  SuperdiagonalVector v;
  const Natural steps = s.content() * std::max<Natural>(s.part().frobenius(), 0);
  v.entries = detail::tally_loop([&](Natural i) { return s.contains(i); }, steps);
  v.base = base;
  v.target = s;
  return v;
}

/// (g+1) x (g+1) matrix with superdiagonal base^{x_i}; zero elsewhere.
inline RationalMatrix nilpotent_matrix(const SuperdiagonalVector& v) {
  detail::check_base(v.base);
  std::vector<Rational> diag;
  diag.reserve(v.entries.size());
  for (int e : v.entries) {
    if (e < -1 || e > 1) throw PreconditionViolation("superdiagonal exponents must lie in {-1, 0, 1}");
    diag.push_back(detail::signed_power(v.base, e));
  }
  return superdiag(diag);
}

/// A rational matrix whose exponent semigroup is S, verified by the engine.
/// N gives [0]; numerical S gives the nilpotent superdiagonal matrix; content
/// d0 >= 2 gives A' ⊕ [[1, 1/d0], [0, 1]].
inline ConstructionResult represent(const SubsemigroupDesc& s, long base = 2, const StateBudget& budget = {}) {
  detail::check_base(base);
  switch (s.kind()) {
    case SemigroupKind::Trivial:
      throw TrivialSemigroupUnrepresentable("{0} is not realized by this construction; [1/2] is a 1x1 witness");
    case SemigroupKind::FullN:
      return detail::verified_result(RationalMatrix(1, 1), SuperdiagonalVector{{}, base, s}, s, "zero", budget);
    case SemigroupKind::Numerical: {
      SuperdiagonalVector v = find_superdiagonal(s, base);
      RationalMatrix a = nilpotent_matrix(v);
      return detail::verified_result(std::move(a), std::move(v), s, "nilpotent", budget);
    }
    case SemigroupKind::NonNumericalPositive: {
      const Natural d0 = s.content();
      RationalMatrix b = make_matrix({{"1", "1/" + std::to_string(d0)}, {"0", "1"}});
      if (s.part().is_full()) return detail::verified_result(std::move(b), std::nullopt, s, "cyclic", budget);
      SuperdiagonalVector v = find_superdiagonal_general(s, base);
      RationalMatrix a = direct_sum(nilpotent_matrix(v), b);
      return detail::verified_result(std::move(a), std::move(v), s, "nilpotent+cyclic", budget);
    }
  }
  throw std::logic_error("represent: unknown semigroup kind");
}

enum class Family2x2 { Cyclic, TailFrom, TwoGen };

inline const char* to_string(Family2x2 f) {
  switch (f) {
    case Family2x2::Cyclic: return "cyclic";
    case Family2x2::TailFrom: return "tail";
    case Family2x2::TwoGen: return "two_generator";
  }
  return "?";
}

/// Closed-form 2x2 realizations:
///   Cyclic m:   [[1, 1/m], [0, 1]]                    -> ⟨m⟩
///   TailFrom m: [[2, 2^-(m-1)], [0, 0]]               -> {0, m, m+1, ...}
///   TwoGen k:   [[0, 2^-j], [2^(j+1), 0]], j = k / 2  -> ⟨2, k⟩, k odd
inline ConstructionResult family_2x2(Family2x2 kind, Natural param, const StateBudget& budget = {}) {
  RationalMatrix a(2, 2);
  SubsemigroupDesc claimed = SubsemigroupDesc::trivial();
  switch (kind) {
    case Family2x2::Cyclic:
      if (param < 2) throw PreconditionViolation("cyclic family needs m >= 2");
      a = make_matrix({{"1", "1/" + std::to_string(param)}, {"0", "1"}});
      claimed = SubsemigroupDesc::from_generators({param});
      break;
    case Family2x2::TailFrom: {
      if (param < 2) throw PreconditionViolation("tail family needs m >= 2");
      // A^n has top-right entry 2^(n-1) * a(0, 1).
      a(0, 0) = 2;
      a(0, 1) = Rational(BigInt(1), pow_big(BigInt(2), static_cast<unsigned long>(param - 1)));
      std::vector<Natural> gens;
      for (Natural k = param; k < 2 * param; ++k) gens.push_back(k);
      claimed = SubsemigroupDesc::from_generators(gens);
      break;
    }
    case Family2x2::TwoGen: {
      if (param < 3 || param % 2 == 0) throw PreconditionViolation("two-generator family needs k odd and >= 3");
      const auto j = static_cast<unsigned long>(param / 2);
      a(0, 1) = Rational(BigInt(1), pow_big(BigInt(2), j));
      a(1, 0) = Rational(pow_big(BigInt(2), j + 1));
      claimed = SubsemigroupDesc::from_generators({2, param});
      break;
    }
  }
  return detail::verified_result(std::move(a), std::nullopt, std::move(claimed), to_string(kind), budget);
}

/// The 2x2 family realizing S, if any.
inline std::optional<std::pair<Family2x2, Natural>> matching_2x2_family(const SubsemigroupDesc& s) {
  if (s.is_trivial() || s.kind() == SemigroupKind::FullN) return std::nullopt;
  const NumericalData& p = s.part();
  if (s.content() >= 2) {
    if (p.is_full()) return std::make_pair(Family2x2::Cyclic, s.content());
    return std::nullopt;
  }
  const auto& g = p.minimal_generators();
  if (g.size() == 2 && g[0] == 2) return std::make_pair(Family2x2::TwoGen, g[1]);
  if (p.frobenius() == p.multiplicity() - 1) return std::make_pair(Family2x2::TailFrom, p.multiplicity());
  return std::nullopt;
}

}  // namespace expsg
