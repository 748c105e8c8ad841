#pragma once

#include <stdexcept>
#include <string>

namespace orbsym {

// Machine-readable failure kinds; the CLI maps these onto exit codes.
enum class ErrorKind {
  BadInput,
  DimensionMismatch,
  ZeroVector,
  NonSquareMatrix,
  NonUnitaryGenerator,
  OrderExceeded,
  AmbiguousIdentification,
  InconsistentForm,
  NotSpanning,
  NotIsometric,
  TooManyPoints,
  SchemaError,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace orbsym
