#include "invsg/generate.hpp"

#include <algorithm>

namespace invsg {

ElementId Closure::product(ElementId a, ElementId b) const {
  // Letters of b from last to first, then replay them from the right of a.
  std::vector<std::uint32_t> letters;
  for (ElementId x = b; x != kNoElement; x = parent_[x]) letters.push_back(last_[x]);
  ElementId result = a;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    result = right(result, *it);
  }
  return result;
}

InvWord Closure::word(ElementId a) const {
  std::vector<Factor> factors;
  for (ElementId x = a; x != kNoElement; x = parent_[x]) {
    factors.push_back(seed_factors_[last_[x]]);
  }
  std::reverse(factors.begin(), factors.end());
  return InvWord(std::move(factors));
}

InvolutorySemigroup Closure::tabulate(std::string name,
                                      std::vector<std::string> labels) const {
  const std::size_t n = size();
  std::vector<ElementId> table(n * n);
  // Parents precede children, so column b is derived from column parent(b).
  for (ElementId b = 0; b < n; ++b) {
    const ElementId p = parent_[b];
    const std::uint32_t s = last_[b];
    if (p == kNoElement) {
      for (ElementId a = 0; a < n; ++a) table[a * n + b] = right(a, s);
    } else {
      for (ElementId a = 0; a < n; ++a) table[a * n + b] = right(table[a * n + p], s);
    }
  }
  FiniteSemigroup base(n, std::move(table), std::move(name));
  base.set_identity(base.find_identity());
  base.set_zero(base.find_zero());
  auto s = make_involutory(std::move(base), star_, true).with_generators(seeds_);
  if (!labels.empty()) s = s.with_labels(std::move(labels));
  return s;
}

OracleSemigroup as_oracle(std::shared_ptr<const Closure> closure,
                          std::string name, std::vector<std::string> labels) {
  std::vector<ElementId> star = closure->star_map();
  std::vector<ElementId> gens = closure->seeds();
  return OracleSemigroup(
      std::move(name), std::move(star), std::move(gens),
      [closure](ElementId a, ElementId b) { return closure->product(a, b); },
      std::move(labels));
}

}  // namespace invsg
