#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace invform {

enum class ErrorKind {
  ZeroInverse,
  MixedFields,
  InvalidInput,
  ParseError,
  NotSquare,
  DimensionMismatch,
  Singular,
  DegreeLimit,
  ZeroConstantTerm,
  NotSelfDual,
  OddDegree,
  NotEvenPolynomial,
  SmallCharacteristic,
  ParityViolation,
  NotDualPair,
  EigenvalueObstruction,
  DecisionFalse,
  NotUnipotentType,
  NotUnipotent,
  UnverifiedForm,
  VerificationFailed,
  RationalsUnsupported,
  Degenerate,
  GroupTooLarge,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

inline std::ostream& operator<<(std::ostream& os, ErrorKind kind) { return os << to_string(kind); }

/// Every failure in the library is reported through this exception type; the
/// kind is machine-readable and maps onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace invform
