#include "baa/error.hpp"

namespace baa {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InfeasibleTuple: return "InfeasibleTuple";
    case ErrorKind::SimplexNotFound: return "SimplexNotFound";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::RealizationNotFound: return "RealizationNotFound";
    case ErrorKind::NotABasis: return "NotABasis";
    case ErrorKind::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorKind::NotASubcomplex: return "NotASubcomplex";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace baa
