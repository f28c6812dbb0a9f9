#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brauer_cover {

enum class ErrorCode {
  InvalidGroup,
  ElementMismatch,
  InfiniteGroup,
  UnknownGenerator,
  MalformedWord,
  InvalidBrauer,
  UnknownHalfEdge,
  InvalidQuiver,
  UnknownArrow,
  NotAdmissible,
  NotHomogeneous,
  WindowRequired,
  HasLoops,
  DeltaNotForest,
  TooLarge,
  MalformedInput,
};

std::string_view error_code_name(ErrorCode code);

/// Library error. `witness` names the offending object (half edge, arrow,
/// relation, generator) when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

}  // namespace brauer_cover
