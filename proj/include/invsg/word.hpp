#pragma once

#include <compare>
#include <string>
#include <vector>

namespace invsg {

// One letter occurrence of an involutory word: `x` or `x*`.
struct Factor {
  std::string letter;
  bool starred = false;

  auto operator<=>(const Factor&) const = default;
};

// A nonempty element of the free involutory semigroup, kept in normal form
// (stars pushed onto letters).
class InvWord {
 public:
  InvWord() = default;
  explicit InvWord(std::vector<Factor> factors);

  static InvWord letter(std::string name, bool starred = false);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }
  bool has_starred_letter() const noexcept;

  // Distinct letters in order of first occurrence.
  std::vector<std::string> letters() const;

  InvWord operator*(const InvWord& other) const;
  InvWord& operator*=(const InvWord& other);

  std::string to_string() const;

  auto operator<=>(const InvWord&) const = default;

 private:
  std::vector<Factor> factors_;
};

struct Identity {
  InvWord lhs;
  InvWord rhs;

  bool trivial() const { return lhs == rhs; }
  std::vector<std::string> letters() const;
  std::string to_string() const;

  auto operator<=>(const Identity&) const = default;
};

}  // namespace invsg
