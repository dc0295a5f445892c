#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace inthull {

enum class Errc {
  IdenticalPoints,
  Parallel,
  Coincident,
  NotConvexPosition,
  Degenerate,
  EmptySet,
  Unbounded,
  UnboundedInput,
  NoIntegerPoints,
  SegmentNotOnLine,
  BudgetExceeded,
  SweepLimitExceeded,
  Parse,
};

std::string_view errc_name(Errc code) noexcept;

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace inthull
