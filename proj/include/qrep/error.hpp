#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrep {

enum class Errc {
  NonPrimeP,
  ReducibleModulus,
  NoDefaultModulus,
  FieldTooLarge,
  DivisionByZero,
  MixedFields,
  NotSquare,
  LengthMismatch,
  ShapeMismatch,
  ZeroDimension,
  QuiverMismatch,
  FieldMismatch,
  NotSinkOrSource,
  SelfLoopAtV,
  TooLarge,
  SelfLoopPresent,
  VertexMismatch,
  UnknownVertex,
  ZeroVector,
  NegativeCoordinate,
  NonIntegerResult,
  InsufficientPoints,
  NonIntegerCoefficients,
  Parse,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what) {}

  Errc code() const noexcept { return code_; }
  /// Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace qrep
