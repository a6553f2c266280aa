#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace moebius {

enum class ErrorCode {
  NonPrimitive,
  ZeroCurve,
  NotOneSidedSlope,
  NotAVertex,
  RootHasNoParent,
  AmbiguousParent,
  InvalidBound,
  UnknownFormat,
  InvalidSpec,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace moebius
