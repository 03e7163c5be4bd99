#include "invsg/word.hpp"

#include <algorithm>

#include "invsg/error.hpp"

namespace invsg {

InvWord::InvWord(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw Error(ErrorCode::SyntaxError, "involutory words are nonempty");
  }
}

InvWord InvWord::letter(std::string name, bool starred) {
  return InvWord({Factor{std::move(name), starred}});
}

bool InvWord::has_starred_letter() const noexcept {
  return std::any_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.starred; });
}

std::vector<std::string> InvWord::letters() const {
  std::vector<std::string> out;
  for (const auto& f : factors_) {
    if (std::find(out.begin(), out.end(), f.letter) == out.end()) {
      out.push_back(f.letter);
    }
  }
  return out;
}

InvWord InvWord::operator*(const InvWord& other) const {
  InvWord out = *this;
  out *= other;
  return out;
}

InvWord& InvWord::operator*=(const InvWord& other) {
  factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
  return *this;
}

std::string InvWord::to_string() const {
  std::string out;
  for (const auto& f : factors_) {
    out += f.letter;
    if (f.starred) out += '*';
  }
  return out;
}

std::vector<std::string> Identity::letters() const {
  auto out = lhs.letters();
  for (auto& l : rhs.letters()) {
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  return out;
}

std::string Identity::to_string() const {
  return lhs.to_string() + "=" + rhs.to_string();
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::StarNotInvolution: return "StarNotInvolution";
    case ErrorCode::StarNotAntiAutomorphism: return "StarNotAntiAutomorphism";
    case ErrorCode::InvalidIdentity: return "InvalidIdentity";
    case ErrorCode::InvalidZero: return "InvalidZero";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotStarClosed: return "NotStarClosed";
    case ErrorCode::OracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::GeneratorsDoNotGenerate: return "GeneratorsDoNotGenerate";
    case ErrorCode::NotSameDClass: return "NotSameDClass";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::NoSqrtMinusOne: return "NoSqrtMinusOne";
    case ErrorCode::IncompleteSubstitution: return "IncompleteSubstitution";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NoStarredLetter: return "NoStarredLetter";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorCode::InvalidConstruction: return "InvalidConstruction";
    case ErrorCode::InconsistentReduct: return "InconsistentReduct";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace invsg
