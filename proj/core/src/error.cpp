#include "icsie/error.hpp"

namespace icsie {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::DistanceTooSmall: return "DistanceTooSmall";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotUnipartite: return "NotUnipartite";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

}  // namespace icsie
