#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace structctl {

enum class ErrorCode {
  DimensionMismatch,
  NegativeCost,
  IndexOutOfRange,
  Infeasible,
  InvalidMatching,
  InvalidCover,
  UncoverableScc,
  NotControllable,
  NotObservable,
  FlowTooSmall,
  TooLarge,
  ParseError,
  IoError,
  BadSpec,
};

std::string_view to_string(ErrorCode code);

/// Every failure the library reports carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace structctl
