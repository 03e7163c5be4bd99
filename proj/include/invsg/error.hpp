#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace invsg {

using ElementId = std::uint32_t;

enum class ErrorCode {
  MalformedTable,
  NonAssociative,
  StarNotInvolution,
  StarNotAntiAutomorphism,
  InvalidIdentity,
  InvalidZero,
  LimitExceeded,
  NotAnIdeal,
  NotStarClosed,
  OracleBoundExceeded,
  BoundExceeded,
  GeneratorsDoNotGenerate,
  NotSameDClass,
  NotPrime,
  DivisionByZero,
  MixedFields,
  NoSqrtMinusOne,
  IncompleteSubstitution,
  BudgetExceeded,
  NoStarredLetter,
  SyntaxError,
  UnknownCatalogName,
  InvalidConstruction,
  InconsistentReduct,
  Io,
};

std::string_view to_string(ErrorCode code);

// Every failure the library reports. `witness` carries the offending element
// ids (e.g. the triple for NonAssociative) or a position for SyntaxError.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> witness_;
};

}  // namespace invsg
