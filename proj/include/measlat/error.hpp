#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace measlat {

enum class ErrorKind {
  NotALattice,
  NotBounded,
  CycleInCovers,
  DuplicateElement,
  UnknownElement,
  SizeCapExceeded,
  SyntaxError,
  NotAPermutation,
  NotAnAutomorphism,
  NonIntegerEntry,
  DimensionMismatch,
  NotAMeasure,
  NotANNMeasure,
  TargetNotBoolean,
  CapExceeded,
  NotBoolean,
  UnknownName,
  MethodDisagreement,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module. `line`/`column` are 1-based and
/// zero when the error has no source location.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t line = 0, std::size_t column = 0);

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace measlat
