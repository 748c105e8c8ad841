#include "orbsym/error.hpp"

namespace orbsym {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NonSquareMatrix: return "NonSquareMatrix";
    case ErrorKind::NonUnitaryGenerator: return "NonUnitaryGenerator";
    case ErrorKind::OrderExceeded: return "OrderExceeded";
    case ErrorKind::AmbiguousIdentification: return "AmbiguousIdentification";
    case ErrorKind::InconsistentForm: return "InconsistentForm";
    case ErrorKind::NotSpanning: return "NotSpanning";
    case ErrorKind::NotIsometric: return "NotIsometric";
    case ErrorKind::TooManyPoints: return "TooManyPoints";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + what),
      kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace orbsym
