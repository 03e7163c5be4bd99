#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "invsg/semigroup.hpp"
#include "invsg/word.hpp"

namespace invsg {

// (x_1 ... x_m)* = x_m* ... x_1*
InvWord star_word(const InvWord& w);
// Z_1 = x1, Z_{n+1} = Z_n x{n+1} Z_n.
InvWord zimin(std::size_t n);
InvWord power(const InvWord& w, std::size_t k);

// word := factor+; factor := letter "*"?; letter := [a-z][0-9]*.
// Throws SyntaxError with the offending position as witness.
InvWord parse_word(std::string_view text);
Identity parse_identity(std::string_view text);

using Substitution = std::map<std::string, ElementId>;

// Left-to-right product. Throws IncompleteSubstitution. Adds the number of
// multiplications performed to *products when given.
ElementId evaluate(const InvolutorySemigroup& s, const InvWord& w,
                   const Substitution& sigma, std::uint64_t* products = nullptr);

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct SatisfactionResult {
  bool holds = true;
  std::optional<Substitution> counterexample;
  std::uint64_t substitutions = 0;
  std::uint64_t products_evaluated = 0;
};

// Exhaustive over all |S|^v substitutions, odometer order with the last
// letter (in order of first occurrence) fastest. Throws BudgetExceeded when
// |S|^v exceeds budget.
SatisfactionResult satisfies(const InvolutorySemigroup& s, const Identity& id,
                             std::uint64_t budget = kDefaultBudget);

// x^N = (x^N (x^N)*)^N x^N
Identity type_b_identity(std::size_t n);

struct TypeResult {
  enum class Kind { A, B };
  Kind kind = Kind::B;
  ElementId witness = 0;  // type A: idempotent e with e >_J e* e
  std::size_t n = 0;      // type B: exponent for which the identity holds
  std::uint64_t products_evaluated = 0;
};

TypeResult classify_type(const InvolutorySemigroup& s);
// For semigroups without a table. A verified hint short-circuits the scan
// with a single targeted ideal search.
TypeResult classify_type(const OracleSemigroup& s,
                         std::optional<ElementId> hint = std::nullopt);

inline constexpr std::size_t kDivisionCrossCheckLimit = 700;

struct MembershipResult {
  bool member = false;
  std::string certified_by;
  bool cross_checked = false;  // brute-force division agreed
};

// Whether the twisted semilattice lies in the variety of s. Cross-checked
// against divides(tsl(), s) for |s| <= kDivisionCrossCheckLimit; a mismatch
// throws std::logic_error.
MembershipResult tsl_membership(const InvolutorySemigroup& s);

// x^w = (x^w (x^w)*)^w x^w for every element.
bool omega_identity_check(const InvolutorySemigroup& s);
// x = (x x*)^n x for every element.
bool regular_identity_check(const InvolutorySemigroup& s, std::size_t n);

// x* (x x*)^(n-1)
InvWord sandwich_candidate(std::size_t n);

struct SandwichResult {
  std::optional<InvWord> iota;
  std::uint64_t products_evaluated = 0;
};

// Least one-letter word iota in shortlex order (x before x*) with
// S |= x = x iota(x) x, up to length max_len.
SandwichResult find_sandwich_identity(const InvolutorySemigroup& s, std::size_t max_len);

struct IsotermResult {
  bool holds_up_to_bound = true;
  std::optional<Identity> counterexample;
  std::uint64_t candidates = 0;
  std::uint64_t products_evaluated = 0;
};

// Bounded evidence only: tries every involutory word w' != Z_n over
// x1..xn of length <= max_len and reports the first with S |= Z_n = w'.
IsotermResult zimin_isoterm_bounded(const InvolutorySemigroup& s, std::size_t n,
                                    std::size_t max_len,
                                    std::uint64_t budget = kDefaultBudget);

// Value in the twisted semilattice of a word containing a starred letter
// when every letter is sent to e. Always f or 0. Throws NoStarredLetter.
ElementId tsl_star_separation(const InvWord& w);

}  // namespace invsg
