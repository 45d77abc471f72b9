#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tensoralg {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatch in dimension, slot layout, weight or component count.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Multi-index or slot position outside the valid range.
class AddressingError : public Error {
 public:
  using Error::Error;
};

/// Violation of the index conventions (e.g. contracting two upper slots).
class ConventionError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON document (wrong nesting depth, row length, field type).
class DocumentError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in an index expression; `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Semantic rejection of a parsed index expression.
class ExpressionError : public Error {
 public:
  enum class Kind {
    UnboundName,
    ArityMismatch,
    VarianceMismatch,
    RepeatedIndex,   // a letter used three or more times in one term
    VarianceClash,   // dummy pair with equal variance (strict mode)
    FreeIndexMismatch,
    TargetLayout,
    WeightMismatch,
    DimensionMismatch,
    FixedIndexRange,
    BindingMismatch,
  };

  ExpressionError(Kind kind, const std::string& message)
      : Error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(ExpressionError::Kind kind) noexcept;

/// Failures of a numerical precondition. The CLI maps these to exit code 2.
class NumericError : public Error {
 public:
  using Error::Error;
};

class SingularError : public NumericError {
 public:
  SingularError(const std::string& message, double magnitude)
      : NumericError(message), magnitude_(magnitude) {}

  /// |det| of the offending matrix.
  double magnitude() const noexcept { return magnitude_; }

 private:
  double magnitude_;
};

/// A metric that is not symmetric positive-definite.
class MetricError : public NumericError {
 public:
  using NumericError::NumericError;
};

class SuperluminalError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace tensoralg
