#include "qrep/error.hpp"

namespace qrep {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeP: return "NonPrimeP";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::NoDefaultModulus: return "NoDefaultModulus";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::NotSquare: return "NotSquare";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ZeroDimension: return "ZeroDimension";
    case Errc::QuiverMismatch: return "QuiverMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotSinkOrSource: return "NotSinkOrSource";
    case Errc::SelfLoopAtV: return "SelfLoopAtV";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SelfLoopPresent: return "SelfLoopPresent";
    case Errc::VertexMismatch: return "VertexMismatch";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NegativeCoordinate: return "NegativeCoordinate";
    case Errc::NonIntegerResult: return "NonIntegerResult";
    case Errc::InsufficientPoints: return "InsufficientPoints";
    case Errc::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case Errc::Parse: return "Parse";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qrep
