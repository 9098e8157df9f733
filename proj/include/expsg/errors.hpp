#pragma once

#include <stdexcept>
#include <string>

namespace expsg {

// Exception hierarchy. Every error thrown by the library derives from Error.

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArithmeticError : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct RankDeficient : Error {
  using Error::Error;
};

struct PreconditionViolation : Error {
  using Error::Error;
};

struct InvalidSemigroup : Error {
  using Error::Error;
};

/// integral_similarity called on a matrix whose characteristic polynomial
/// is not in Z[x].
struct NoIntegralSpectrum : Error {
  using Error::Error;
};

struct StateBudgetExceeded : Error {
  using Error::Error;
};

struct TrivialSemigroupUnrepresentable : Error {
  using Error::Error;
};

}  // namespace expsg
