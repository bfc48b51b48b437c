#pragma once

#include <stdexcept>
#include <string>

namespace rmatrix {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

/// Mixing cyclotomic scalars of different orders (other than order 1).
struct IncompatibleOrders : Error {
  explicit IncompatibleOrders(const std::string& what) : Error(what) {}
};

/// Mismatched ranks n between Lie-algebra values.
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// Invalid slot specification or incompatible slot patterns.
struct SlotError : Error {
  explicit SlotError(const std::string& what) : Error(what) {}
};

/// A linear map that must be invertible is identically singular.
struct SingularMatrix : Error {
  explicit SingularMatrix(const std::string& what) : Error(what) {}
};

/// Evaluation point lies on a designated pole factor.
struct PoleAtPoint : Error {
  explicit PoleAtPoint(const std::string& what) : Error(what) {}
};

/// Pole order along the diagonal exceeds what an operation supports.
struct PoleOrderError : Error {
  explicit PoleOrderError(const std::string& what) : Error(what) {}
};

/// The (y-x) pole of a cobracket does not cancel.
struct NonRegularCobracket : Error {
  explicit NonRegularCobracket(const std::string& what) : Error(what) {}
};

/// The duality pairing of a W-basis is singular.
struct DualityViolated : Error {
  explicit DualityViolated(const std::string& what) : Error(what) {}
};

/// Laurent data does not determine the requested coefficient.
struct TruncationError : Error {
  explicit TruncationError(const std::string& what) : Error(what) {}
};

/// Document schema-version mismatch.
struct SchemaError : Error {
  explicit SchemaError(const std::string& what) : Error(what) {}
};

/// Malformed or non-canonical serialized input.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace rmatrix
