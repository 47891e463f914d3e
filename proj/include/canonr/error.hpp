#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace canonr {

enum class ErrorKind {
  DivisionByZero,
  DescriptorMismatch,
  InvalidField,
  ParseError,
  ShapeMismatch,
  AlgebraMismatch,
  FieldMismatch,
  InvalidAlgebra,
  UnvalidatedAlgebra,
  CharacteristicTwo,
  NonInvertibleParameter,
  NonMonicModulus,
  ArityMismatch,
  LegOutOfRange,
  BadPermutation,
  BadSlots,
  NotSquare,
  NonUniqueSolution,
  NotWellDefined,
  NotInvariant,
  UnverifiedCertificate,
  UnsupportedSize,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `location` is filled for parse
/// errors (a JSON-pointer style path into the input document).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string location = {})
      : std::runtime_error(message), kind_(kind), location_(std::move(location)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& location() const noexcept { return location_; }

 private:
  ErrorKind kind_;
  std::string location_;
};

}  // namespace canonr
