#include "measlat/error.hpp"

namespace measlat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::CycleInCovers: return "CycleInCovers";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::NonIntegerEntry: return "NonIntegerEntry";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAMeasure: return "NotAMeasure";
    case ErrorKind::NotANNMeasure: return "NotANNMeasure";
    case ErrorKind::TargetNotBoolean: return "TargetNotBoolean";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotBoolean: return "NotBoolean";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::MethodDisagreement: return "MethodDisagreement";
  }
  return "Unknown";
}

static std::string with_location(const std::string& message, std::size_t line, std::size_t column) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

Error::Error(ErrorKind kind, const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(with_location(message, line, column)), kind_(kind), line_(line), column_(column) {}

}  // namespace measlat
