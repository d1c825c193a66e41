#include "qtbraid/error.hpp"

#include <cstdio>

namespace qtb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidTriangulation: return "InvalidTriangulation";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::NotEmbedded: return "NotEmbedded";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::NumericalDegeneracy: return "NumericalDegeneracy";
    case ErrorCode::SingularWeight: return "SingularWeight";
    case ErrorCode::NoSafePath: return "NoSafePath";
    case ErrorCode::SimultaneousEvents: return "SimultaneousEvents";
    case ErrorCode::TrackingMismatch: return "TrackingMismatch";
    case ErrorCode::UnsupportedParameters: return "UnsupportedParameters";
    case ErrorCode::CharacterMismatch: return "CharacterMismatch";
    case ErrorCode::NotScalar: return "NotScalar";
    case ErrorCode::SingularDiagonal: return "SingularDiagonal";
    case ErrorCode::NotIsomorphic: return "NotIsomorphic";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::InternalCheckFailed: return "InternalCheckFailed";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
  }
  return "Unknown";
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace qtb
