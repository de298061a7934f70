#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mctool {

enum class ErrorKind {
  DivisionByZero,
  OrderOverflow,
  NotADivisor,
  ParseError,
  AmbientMismatch,
  DimensionMismatch,
  DimensionTooSmall,
  EigenvalueOutsideCandidates,
  NotInvertible,
  SizeMismatch,
  PunctureMismatch,
  NotIrreducible,
  IndexOutOfRange,
  LambdaIsOne,
  PropertyTFailed,
  HasGlobalSections,
  InternalCheckFailed,
  RankMismatch,
  SchemaError,
  UnknownOp,
  UndefinedName,
  CyclotomicOrderMismatch,
  BadParameters,
  IoError,
  ProductRelationViolated,
  StepFailed,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mctool
