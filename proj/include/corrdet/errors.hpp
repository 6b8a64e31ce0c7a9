#pragma once

#include <stdexcept>
#include <string>

namespace corrdet {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Cholesky pivot fell below tolerance: matrix is singular or indefinite.
struct NotPositiveDefinite : Error {
  using Error::Error;
};

/// Eigenvalue below -tol in a routine requiring positive semidefiniteness.
struct NotPsd : Error {
  using Error::Error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

struct InvalidInputs : Error {
  using Error::Error;
};

struct NonPositiveVariance : Error {
  using Error::Error;
};

/// Infinite fourth moment is only admissible when the kurtosis term vanishes
/// (C = 1, i.e. identity population).
struct InfiniteKurtosisWithoutPivotality : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct DegenerateRow : Error {
  explicit DegenerateRow(int row_index)
      : Error("row " + std::to_string(row_index) +
              " has (near) zero variance"),
        row(row_index) {}
  int row;
};

struct MissingNu6 : Error {
  using Error::Error;
};

struct NumericalBreakdown : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace corrdet
