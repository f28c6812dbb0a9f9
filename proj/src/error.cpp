#include "brauer_cover/error.hpp"

namespace brauer_cover {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::ElementMismatch: return "ElementMismatch";
    case ErrorCode::InfiniteGroup: return "InfiniteGroup";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::MalformedWord: return "MalformedWord";
    case ErrorCode::InvalidBrauer: return "InvalidBrauer";
    case ErrorCode::UnknownHalfEdge: return "UnknownHalfEdge";
    case ErrorCode::InvalidQuiver: return "InvalidQuiver";
    case ErrorCode::UnknownArrow: return "UnknownArrow";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::WindowRequired: return "WindowRequired";
    case ErrorCode::HasLoops: return "HasLoops";
    case ErrorCode::DeltaNotForest: return "DeltaNotForest";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace brauer_cover
