#include "idealforge/error.hpp"

namespace idealforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::DegreeNotOne: return "DegreeNotOne";
    case ErrorKind::SPowerTooSmall: return "SPowerTooSmall";
    case ErrorKind::NotOddPrime: return "NotOddPrime";
    case ErrorKind::SamePrime: return "SamePrime";
    case ErrorKind::DegenerateSum: return "DegenerateSum";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace idealforge
