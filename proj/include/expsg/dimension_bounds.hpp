#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expsg/constructions.hpp"
#include "expsg/errors.hpp"
#include "expsg/semigroup.hpp"

namespace expsg {

enum class BoundRule {
  DimOne,
  DimTwoFamily,
  ConsecutiveRun,
  Symmetric,
  PseudoCaseB,
  PseudoCaseC,
  NilpotentUpper,
  KnownExact,
};

inline const char* to_string(BoundRule r) {
  switch (r) {
    case BoundRule::DimOne: return "DimOne";
    case BoundRule::DimTwoFamily: return "DimTwoFamily";
    case BoundRule::ConsecutiveRun: return "ConsecutiveRun";
    case BoundRule::Symmetric: return "Symmetric";
    case BoundRule::PseudoCaseB: return "PseudoCaseB";
    case BoundRule::PseudoCaseC: return "PseudoCaseC";
    case BoundRule::NilpotentUpper: return "NilpotentUpper";
    case BoundRule::KnownExact: return "KnownExact";
  }
  return "?";
}

struct BoundJustification {
  enum class Side { Lower, Upper, Exact };
  Side side = Side::Lower;
  Natural value = 1;
  BoundRule rule = BoundRule::DimOne;
  std::string cite;
};

inline const char* to_string(BoundJustification::Side s) {
  switch (s) {
    case BoundJustification::Side::Lower: return "lower";
    case BoundJustification::Side::Upper: return "upper";
    case BoundJustification::Side::Exact: return "exact";
  }
  return "?";
}

/// Certified interval for the matricial dimension.
struct DimensionBounds {
  Natural lower = 1;
  Natural upper = 1;
  std::vector<BoundJustification> justifications;

  /// Largest lower bound among the rules other than KnownExact.
  Natural derived_lower() const {
    Natural best = 1;
    for (const auto& j : justifications)
      if (j.side == BoundJustification::Side::Lower) best = std::max(best, j.value);
    return best;
  }
};

/// Semigroups whose matricial dimension is known exactly, keyed by minimal
/// generators: {0} and N (1), ⟨3,5,7⟩ (2), ⟨3,4⟩ (3), ⟨4,6,17⟩ (4),
/// ⟨5,33,52⟩ and ⟨5,7⟩ (5), ⟨6,9,20⟩ (6).
inline const std::map<std::vector<Natural>, Natural>& known_exact_dimensions() {
  static const std::map<std::vector<Natural>, Natural> table{
      {{1}, 1},        {{3, 5, 7}, 2},   {{3, 4}, 3}, {{4, 6, 17}, 4},
      {{5, 33, 52}, 5}, {{5, 7}, 5}, {{6, 9, 20}, 6},
  };
  return table;
}

/// 1 + the longest run of consecutive positive members ending below g(S),
/// and at least 2. A d x d matrix whose exponent semigroup contains d
/// consecutive integers contains every later integer, so such a run of
/// length L forces d > L.
inline Natural consecutive_run_bound(const SubsemigroupDesc& s) {
  if (s.kind() != SemigroupKind::Numerical) {
    throw PreconditionViolation("consecutive_run_bound needs a numerical semigroup other than N");
  }
  const Natural g = s.part().frobenius();
  Natural best = 0;
  Natural run = 0;
  for (Natural k = 1; k < g; ++k) {
    run = s.contains(k) ? run + 1 : 0;
    best = std::max(best, run);
  }
  return std::max<Natural>(2, best + 1);
}

inline DimensionBounds bounds(const SubsemigroupDesc& s) {
  using Side = BoundJustification::Side;
  DimensionBounds b;
  auto add = [&](Side side, Natural v, BoundRule rule, std::string cite) {
    b.justifications.push_back({side, v, rule, std::move(cite)});
  };

  if (s.is_trivial() || s.kind() == SemigroupKind::FullN) {
    add(Side::Exact, 1, BoundRule::DimOne, "{0} = S([1/2]) and N = S([0]); these are the only 1x1 exponent semigroups");
    b.lower = b.upper = 1;
    return b;
  }

  add(Side::Lower, 2, BoundRule::DimOne, "a 1x1 matrix [a] has S = N or {0}");
  const NumericalData& p = s.part();
  const Natural g = p.frobenius();
  const Natural m = p.multiplicity();

  if (s.kind() == SemigroupKind::Numerical) {
    add(Side::Lower, consecutive_run_bound(s), BoundRule::ConsecutiveRun,
        "d consecutive members in S(A) for d x d A force every later integer into S(A)");
    if (is_symmetric(s)) {
      add(Side::Lower, m, BoundRule::Symmetric, "symmetric S: g-1, ..., g-(m-1) lie in S");
    } else if (is_pseudosymmetric(s)) {
      if (m < g && g < 2 * m) {
        add(Side::Lower, m - 1, BoundRule::PseudoCaseB, "pseudosymmetric S with m < g < 2m");
      } else if (g >= 2 * m) {
        add(Side::Lower, m, BoundRule::PseudoCaseC, "pseudosymmetric S with g >= 2m");
      }
    }
  }

  if (auto fam = matching_2x2_family(s)) {
    add(Side::Upper, 2, BoundRule::DimTwoFamily, std::string("explicit 2x2 ") + to_string(fam->first) + " matrix");
  }
  if (s.kind() == SemigroupKind::Numerical) {
    add(Side::Upper, g + 1, BoundRule::NilpotentUpper, "(g+1)x(g+1) superdiagonal nilpotent construction");
  } else if (!p.is_full()) {
    add(Side::Upper, s.content() * g + 3, BoundRule::NilpotentUpper,
        "superdiagonal construction of size d0*g(S')+1 plus the 2x2 block for content d0");
  }

  b.lower = b.derived_lower();
  b.upper = 0;
  for (const auto& j : b.justifications)
    if (j.side == Side::Upper) b.upper = b.upper == 0 ? j.value : std::min(b.upper, j.value);

  const auto& table = known_exact_dimensions();
  if (auto it = table.find(s.minimal_generators()); it != table.end()) {
    add(Side::Exact, it->second, BoundRule::KnownExact, "published exact matricial dimension");
    b.lower = b.upper = it->second;
  }
  if (b.lower > b.upper) throw std::logic_error("dimension bounds crossed for " + s.str());
  return b;
}

}  // namespace expsg
