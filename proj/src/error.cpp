#include "weaknet/error.hpp"

namespace weaknet {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::InvalidPolygon: return "InvalidPolygon";
    case ErrorKind::NotSeparated: return "NotSeparated";
    case ErrorKind::DegenerateOriginTriangle: return "DegenerateOriginTriangle";
    case ErrorKind::EmptyB: return "EmptyB";
    case ErrorKind::NonDisjointBR: return "NonDisjointBR";
    case ErrorKind::ZeroAlpha: return "ZeroAlpha";
    case ErrorKind::ConvexityCheckFailed: return "ConvexityCheckFailed";
    case ErrorKind::BadEpsilon: return "BadEpsilon";
    case ErrorKind::TooManyAdversaryLines: return "TooManyAdversaryLines";
    case ErrorKind::NonpositiveRadius: return "NonpositiveRadius";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::HardeningFailed: return "HardeningFailed";
    case ErrorKind::DegeneratePlacement: return "DegeneratePlacement";
  }
  return "Unknown";
}

}  // namespace weaknet
