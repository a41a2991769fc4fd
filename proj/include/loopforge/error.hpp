#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loopforge {

enum class Errc {
  NotLatinSquare,
  NotAssociative,
  NoIdentity,
  NoInverse,
  OrderBoundExceeded,
  NotSubgroup,
  NotNormal,
  NotAnAction,
  NoBuiltinModulus,
  NotTransversal,
  DerivedIntersectsH,
  PreconditionFailed,
  FamilyDoesNotGenerate,
  QTooSmall,
  NotAbelian,
  ChainViolated,
  ShapeViolation,
  NotProper,
  NotPGroup,
  IndexTooSmall,
  IndexTooLarge,
  ConditionFails,
  NotHall,
  NoInvariantSystem,
  InternalTheoremViolation,
  NoIntermediateSubgroup,
  ParseError,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace loopforge
