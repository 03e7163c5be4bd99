#pragma once

#include <string>
#include <vector>

#include "invsg/analysis.hpp"
#include "invsg/catalog.hpp"
#include "invsg/semigroup.hpp"

namespace invsg::testing {

inline InvolutorySemigroup trivial_semigroup() {
  return from_cayley(1, {0}, {0}, "trivial");
}

// Z/m with star = inversion.
inline InvolutorySemigroup cyclic_group(std::uint32_t m) {
  std::vector<ElementId> table(m * m);
  std::vector<ElementId> star(m);
  for (std::uint32_t a = 0; a < m; ++a) {
    star[a] = (m - a) % m;
    for (std::uint32_t b = 0; b < m; ++b) table[a * m + b] = (a + b) % m;
  }
  return from_cayley(m, std::move(table), std::move(star), "c" + std::to_string(m));
}

// {a, 0} with a^2 = 0.
inline InvolutorySemigroup null_semigroup() {
  return from_cayley(2, {1, 1, 1, 1}, {0, 1}, "null2");
}

// The chain e > f > 0 of idempotents with the identity star.
inline InvolutorySemigroup chain3() {
  // e = 0, f = 1, 0 = 2; product is the meet.
  return from_cayley(3, {0, 1, 2, 1, 1, 2, 2, 2, 2}, {0, 1, 2}, "chain3");
}

// TSL with the identity map as star (commutative, so still involutory).
inline InvolutorySemigroup tsl_plain_star() {
  return from_cayley(3, {0, 2, 2, 2, 1, 2, 2, 2, 2}, {0, 1, 2}, "tsl-id");
}

inline const std::vector<std::string>& matrix_specs() {
  static const std::vector<std::string> specs = {
      "mn:1:5:t",   "mn:2:2:t",   "mn:2:2:skew", "mn:2:3:t",   "mn:2:3:skew",
      "mn:2:4:t",   "mn:2:5:t",   "mn:2:5:skew", "mn:3:2:t",   "mn:3:2:skew",
      "tn:2:2:skew", "tn:2:3:skew", "tn:2:5:skew", "tn:3:2:skew", "tn:3:3:skew",
  };
  return specs;
}

// Every tabulated semigroup the tests sweep over, optionally capped by size.
inline std::vector<InvolutorySemigroup> corpus(std::size_t max_size) {
  std::vector<InvolutorySemigroup> out = {
      trivial_semigroup(), cyclic_group(3), cyclic_group(4), null_semigroup(),
      chain3(),            tsl_plain_star(), tsl(),           b21(),
      tb(),
  };
  for (const auto& spec : matrix_specs()) {
    CatalogEntry e = load_semigroup(spec);
    if (e.tabulated()) out.push_back(*e.table);
  }
  std::erase_if(out, [&](const InvolutorySemigroup& s) { return s.size() > max_size; });
  return out;
}

}  // namespace invsg::testing
