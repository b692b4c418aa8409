#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nefcone {

enum class Errc {
  EmptyType,
  NonDecreasingSlopes,
  NonPositiveRank,
  InvalidFieldContext,
  CharZeroContext,
  NonPositiveCoverDegree,
  QuotientRankOutOfRange,
  InvalidFlagType,
  DimensionMismatch,
  IndexOutOfRange,
  ParseError,
  ValidationError,
  InternalInvariant,
};

std::string_view to_string(Errc code);

/// Library error. `cause` is set when a ValidationError wraps a lower-level code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<Errc> cause = std::nullopt)
      : std::runtime_error(what), code_(code), cause_(cause) {}

  Errc code() const noexcept { return code_; }
  std::optional<Errc> cause() const noexcept { return cause_; }

 private:
  Errc code_;
  std::optional<Errc> cause_;
};

}  // namespace nefcone
