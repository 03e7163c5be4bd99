#include "invsg/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "invsg/catalog.hpp"
#include "invsg/green.hpp"

namespace invsg {

InvWord star_word(const InvWord& w) {
  std::vector<Factor> out(w.factors().rbegin(), w.factors().rend());
  for (auto& f : out) f.starred = !f.starred;
  return InvWord(std::move(out));
}

InvWord zimin(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidConstruction, "Zimin words start at n = 1");
  InvWord z = InvWord::letter("x1");
  for (std::size_t i = 2; i <= n; ++i) {
    z = z * InvWord::letter("x" + std::to_string(i)) * z;
  }
  return z;
}

InvWord power(const InvWord& w, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidConstruction, "words have positive powers");
  InvWord out = w;
  for (std::size_t i = 1; i < k; ++i) out *= w;
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  InvWord word() {
    std::vector<Factor> factors;
    skip_space();
    while (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]))) {
      Factor f;
      f.letter += text_[pos_++];
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        f.letter += text_[pos_++];
      }
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        f.starred = true;
        ++pos_;
        skip_space();
      }
      factors.push_back(std::move(f));
    }
    if (factors.empty()) fail("expected a letter");
    return InvWord(std::move(factors));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(pos_),
                {pos_});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

InvWord parse_word(std::string_view text) {
  Parser p(text);
  InvWord w = p.word();
  p.finish();
  return w;
}

Identity parse_identity(std::string_view text) {
  Parser p(text);
  Identity id;
  id.lhs = p.word();
  p.expect('=');
  id.rhs = p.word();
  p.finish();
  return id;
}

ElementId evaluate(const InvolutorySemigroup& s, const InvWord& w,
                   const Substitution& sigma, std::uint64_t* products) {
  std::optional<ElementId> acc;
  std::uint64_t count = 0;
  for (const auto& f : w.factors()) {
    auto it = sigma.find(f.letter);
    if (it == sigma.end()) {
      throw Error(ErrorCode::IncompleteSubstitution, "no value for letter " + f.letter);
    }
    if (it->second >= s.size()) {
      throw Error(ErrorCode::IncompleteSubstitution, "value out of range for " + f.letter);
    }
    const ElementId v = f.starred ? s.star(it->second) : it->second;
    if (acc) {
      acc = s.product(*acc, v);
      ++count;
    } else {
      acc = v;
    }
  }
  if (!acc) throw Error(ErrorCode::SyntaxError, "empty word");
  if (products != nullptr) *products += count;
  return *acc;
}

namespace {

struct Compiled {
  std::vector<std::uint32_t> letter;
  std::vector<bool> starred;
};

Compiled compile(const InvWord& w, const std::vector<std::string>& letters) {
  Compiled c;
  for (const auto& f : w.factors()) {
    auto it = std::find(letters.begin(), letters.end(), f.letter);
    c.letter.push_back(static_cast<std::uint32_t>(it - letters.begin()));
    c.starred.push_back(f.starred);
  }
  return c;
}

ElementId run(const InvolutorySemigroup& s, const Compiled& c,
              const std::vector<ElementId>& plain, const std::vector<ElementId>& starred) {
  ElementId acc = c.starred[0] ? starred[c.letter[0]] : plain[c.letter[0]];
  for (std::size_t i = 1; i < c.letter.size(); ++i) {
    acc = s.product(acc, c.starred[i] ? starred[c.letter[i]] : plain[c.letter[i]]);
  }
  return acc;
}

std::uint64_t substitution_count(std::size_t size, std::size_t letters) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < letters; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / size) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= size;
  }
  return total;
}

}  // namespace

SatisfactionResult satisfies(const InvolutorySemigroup& s, const Identity& id,
                             std::uint64_t budget) {
  const auto letters = id.letters();
  const std::uint64_t total = substitution_count(s.size(), letters.size());
  if (total > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "identity " + id.to_string() + " needs " + std::to_string(s.size()) + "^" +
                    std::to_string(letters.size()) + " substitutions");
  }
  const Compiled lhs = compile(id.lhs, letters);
  const Compiled rhs = compile(id.rhs, letters);
  const std::uint64_t per = lhs.letter.size() + rhs.letter.size() - 2;
  const std::size_t v = letters.size();
  std::vector<ElementId> plain(v, 0);
  std::vector<ElementId> starred(v, s.star(0));
  SatisfactionResult r;
  while (true) {
    ++r.substitutions;
    r.products_evaluated += per;
    if (run(s, lhs, plain, starred) != run(s, rhs, plain, starred)) {
      r.holds = false;
      Substitution sigma;
      for (std::size_t i = 0; i < v; ++i) sigma[letters[i]] = plain[i];
      r.counterexample = std::move(sigma);
      return r;
    }
    std::size_t i = v;
    while (i > 0 && plain[i - 1] + 1 == s.size()) {
      plain[i - 1] = 0;
      starred[i - 1] = s.star(0);
      --i;
    }
    if (i == 0) return r;
    ++plain[i - 1];
    starred[i - 1] = s.star(plain[i - 1]);
  }
}

Identity type_b_identity(std::size_t n) {
  const InvWord xn = power(InvWord::letter("x"), n);
  return {xn, power(xn * star_word(xn), n) * xn};
}

TypeResult classify_type(const InvolutorySemigroup& s) {
  TypeResult r;
  const GreensData g = greens(s);
  for (ElementId e : idempotents(s)) {
    // e* e always lies in the ideal of e, so strictness is J-inequivalence.
    if (g.j_class[e] != g.j_class[s.product(s.star(e), e)]) {
      r.kind = TypeResult::Kind::A;
      r.witness = e;
      return r;
    }
  }
  r.kind = TypeResult::Kind::B;
  r.n = order_data(s).global_n;
  auto check = satisfies(s, type_b_identity(r.n));
  r.products_evaluated = check.products_evaluated;
  if (!check.holds) {
    throw std::logic_error("no type-A idempotent, yet the type-B identity fails");
  }
  return r;
}

TypeResult classify_type(const OracleSemigroup& s, std::optional<ElementId> hint) {
  TypeResult r;
  if (hint && *hint < s.size() && s.product(*hint, *hint) == *hint &&
      strictly_above_j(s, *hint, s.product(s.star(*hint), *hint))) {
    r.kind = TypeResult::Kind::A;
    r.witness = *hint;
    return r;
  }
  const GreensData g = greens(CayleyGraph::build(s));
  std::vector<ElementId> idem = idempotents(s);
  for (ElementId e : idem) {
    if (g.j_class[e] != g.j_class[s.product(s.star(e), e)]) {
      r.kind = TypeResult::Kind::A;
      r.witness = e;
      return r;
    }
  }
  // Type B: N from the cycle shapes, then the identity checked element-wise.
  std::size_t max_index = 1;
  std::size_t lcm = 1;
  std::vector<ElementId> powers;
  for (ElementId a = 0; a < s.size(); ++a) {
    powers.assign(1, a);
    while (true) {
      ElementId next = s.product(powers.back(), a);
      auto it = std::find(powers.begin(), powers.end(), next);
      if (it != powers.end()) {
        const std::size_t index = static_cast<std::size_t>(it - powers.begin()) + 1;
        max_index = std::max(max_index, index);
        lcm = std::lcm(lcm, powers.size() + 1 - index);
        break;
      }
      powers.push_back(next);
    }
  }
  r.kind = TypeResult::Kind::B;
  r.n = ((max_index + lcm - 1) / lcm) * lcm;
  auto pow = [&](ElementId a, std::size_t k) {
    ElementId acc = a;
    for (std::size_t i = 1; i < k; ++i) acc = s.product(acc, a);
    r.products_evaluated += k - 1;
    return acc;
  };
  for (ElementId a = 0; a < s.size(); ++a) {
    const ElementId xn = pow(a, r.n);
    const ElementId rhs = s.product(pow(s.product(xn, s.star(xn)), r.n), xn);
    r.products_evaluated += 2;
    if (rhs != xn) throw std::logic_error("type-B identity fails on an oracle semigroup");
  }
  return r;
}

MembershipResult tsl_membership(const InvolutorySemigroup& s) {
  MembershipResult m;
  const TypeResult t = classify_type(s);
  m.member = t.kind == TypeResult::Kind::A;
  m.certified_by = m.member ? "type A: idempotent " + s.label(t.witness) + " lies strictly "
                              "J-above e*e"
                            : "type B: x^N = (x^N(x^N)*)^N x^N holds with N = " +
                                  std::to_string(t.n);
  if (s.size() <= kDivisionCrossCheckLimit) {
    const bool d = divides(tsl(), s).divides;
    if (d != m.member) {
      throw std::logic_error("division oracle disagrees with the type test on " + s.name());
    }
    m.cross_checked = true;
  }
  return m;
}

bool omega_identity_check(const InvolutorySemigroup& s) {
  for (ElementId a = 0; a < s.size(); ++a) {
    const ElementId p = omega_power(s, a);
    if (s.product(omega_power(s, s.product(p, s.star(p))), p) != p) return false;
  }
  return true;
}

bool regular_identity_check(const InvolutorySemigroup& s, std::size_t n) {
  for (ElementId a = 0; a < s.size(); ++a) {
    if (s.product(s.power(s.product(a, s.star(a)), n), a) != a) return false;
  }
  return true;
}

InvWord sandwich_candidate(std::size_t n) {
  const InvWord x = InvWord::letter("x");
  const InvWord xs = InvWord::letter("x", true);
  InvWord out = xs;
  if (n > 1) out *= power(x * xs, n - 1);
  return out;
}

namespace {

bool sandwich_holds(const InvolutorySemigroup& s, const InvWord& iota,
                    std::uint64_t& products) {
  const InvWord x = InvWord::letter("x");
  auto r = satisfies(s, Identity{x, x * iota * x});
  products += r.products_evaluated;
  return r.holds;
}

}  // namespace

SandwichResult find_sandwich_identity(const InvolutorySemigroup& s, std::size_t max_len) {
  if (max_len == 0) throw Error(ErrorCode::InvalidConstruction, "max_len must be >= 1");
  SandwichResult r;
  const InvWord candidate = sandwich_candidate(order_data(s).subgroup_exponent);
  const bool candidate_holds = sandwich_holds(s, candidate, r.products_evaluated);
  const std::size_t limit = candidate_holds ? std::min(max_len, candidate.size()) : max_len;
  for (std::size_t len = 1; len <= limit; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::vector<Factor> factors;
      for (std::size_t i = 0; i < len; ++i) {
        factors.push_back({"x", ((bits >> (len - 1 - i)) & 1U) != 0});
      }
      InvWord iota(std::move(factors));
      if (sandwich_holds(s, iota, r.products_evaluated)) {
        r.iota = std::move(iota);
        return r;
      }
    }
  }
  if (candidate_holds) r.iota = candidate;
  return r;
}

IsotermResult zimin_isoterm_bounded(const InvolutorySemigroup& s, std::size_t n,
                                    std::size_t max_len, std::uint64_t budget) {
  const InvWord z = zimin(n);
  std::vector<Factor> symbols;
  for (std::size_t i = 1; i <= n; ++i) {
    symbols.push_back({"x" + std::to_string(i), false});
    symbols.push_back({"x" + std::to_string(i), true});
  }
  IsotermResult r;
  std::uint64_t spent = 0;
  const std::size_t k = symbols.size();
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      std::vector<Factor> factors;
      for (std::size_t d : digits) factors.push_back(symbols[d]);
      InvWord candidate(std::move(factors));
      if (candidate != z) {
        Identity id{z, candidate};
        const std::uint64_t cost = substitution_count(s.size(), id.letters().size());
        if (cost > budget - std::min(budget, spent)) {
          throw Error(ErrorCode::BudgetExceeded,
                      "isoterm search exceeds the budget of " + std::to_string(budget) +
                          " substitutions");
        }
        auto check = satisfies(s, id, budget);
        spent += check.substitutions;
        r.products_evaluated += check.products_evaluated;
        ++r.candidates;
        if (check.holds) {
          r.holds_up_to_bound = false;
          r.counterexample = std::move(id);
          return r;
        }
      }
      std::size_t i = len;
      while (i > 0 && digits[i - 1] + 1 == k) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
  return r;
}

ElementId tsl_star_separation(const InvWord& w) {
  if (!w.has_starred_letter()) {
    throw Error(ErrorCode::NoStarredLetter, w.to_string() + " has no starred letter");
  }
  static const InvolutorySemigroup t = tsl();
  Substitution sigma;
  for (const auto& l : w.letters()) sigma[l] = 0;  // e
  const ElementId v = evaluate(t, w, sigma);
  if (v == 0) throw std::logic_error("a word with a starred letter evaluated to e");
  return v;
}

}  // namespace invsg
