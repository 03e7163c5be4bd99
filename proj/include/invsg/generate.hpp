#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "invsg/error.hpp"
#include "invsg/semigroup.hpp"
#include "invsg/word.hpp"

namespace invsg {

inline constexpr ElementId kNoElement = std::numeric_limits<ElementId>::max();

// Right Cayley graph of a closure with respect to its seeds (the generators
// and their star images). Every non-seed element a was first reached as
// parent(a) * seed(last(a)), so products can be recovered by walking parents
// without touching the underlying element representation.
class Closure {
 public:
  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t seed_count() const noexcept { return seeds_.size(); }
  const std::vector<ElementId>& seeds() const noexcept { return seeds_; }
  const std::vector<ElementId>& star_map() const noexcept { return star_; }
  ElementId star(ElementId a) const noexcept { return star_[a]; }
  ElementId right(ElementId a, std::size_t seed) const noexcept {
    return right_[static_cast<std::size_t>(a) * seeds_.size() + seed];
  }
  ElementId product(ElementId a, ElementId b) const;
  // Witness word of a over the generator names g1, g2, ... (and g_i*).
  InvWord word(ElementId a) const;

  InvolutorySemigroup tabulate(std::string name,
                               std::vector<std::string> labels = {}) const;

 private:
  template <typename T, typename Hash, typename Eq>
  friend class Enumerator;

  std::vector<ElementId> seeds_;
  std::vector<Factor> seed_factors_;
  std::vector<ElementId> parent_;
  std::vector<std::uint32_t> last_;
  std::vector<ElementId> right_;
  std::vector<ElementId> star_;
};

// Opaque generators with their oracles. Equal inputs must give equal outputs.
template <typename T, typename Hash = std::hash<T>,
          typename Eq = std::equal_to<T>>
struct BlackBoxGenerators {
  std::vector<T> generators;
  std::function<T(const T&, const T&)> multiply;
  std::function<T(const T&)> star;
};

template <typename T, typename Hash = std::hash<T>,
          typename Eq = std::equal_to<T>>
struct Enumeration {
  std::shared_ptr<const Closure> closure;
  std::vector<T> elements;
  std::unordered_map<T, ElementId, Hash, Eq> index;

  std::optional<ElementId> find(const T& x) const {
    auto it = index.find(x);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

template <typename T, typename Hash, typename Eq>
class Enumerator {
 public:
  static Enumeration<T, Hash, Eq> run(
      const BlackBoxGenerators<T, Hash, Eq>& gens, std::size_t limit) {
    Enumeration<T, Hash, Eq> out;
    auto closure = std::make_shared<Closure>();
    auto add = [&](T x, ElementId parent, std::uint32_t last) -> ElementId {
      auto [it, inserted] =
          out.index.try_emplace(x, static_cast<ElementId>(out.elements.size()));
      if (inserted) {
        if (out.elements.size() >= limit) {
          throw Error(ErrorCode::LimitExceeded,
                      "closure exceeds " + std::to_string(limit) + " elements");
        }
        out.elements.push_back(std::move(x));
        closure->parent_.push_back(parent);
        closure->last_.push_back(last);
      }
      return it->second;
    };

    for (std::size_t i = 0; i < gens.generators.size(); ++i) {
      const std::string name = "g" + std::to_string(i + 1);
      for (bool starred : {false, true}) {
        T x = starred ? gens.star(gens.generators[i]) : gens.generators[i];
        if (out.index.contains(x)) continue;
        auto seed = static_cast<std::uint32_t>(closure->seeds_.size());
        closure->seeds_.push_back(add(std::move(x), kNoElement, seed));
        closure->seed_factors_.push_back(Factor{name, starred});
      }
    }

    const std::size_t k = closure->seeds_.size();
    std::vector<T> seed_values;
    for (ElementId s : closure->seeds_) seed_values.push_back(out.elements[s]);
    for (std::size_t a = 0; a < out.elements.size(); ++a) {
      for (std::size_t i = 0; i < k; ++i) {
        T x = gens.multiply(out.elements[a], seed_values[i]);
        ElementId id = add(std::move(x), static_cast<ElementId>(a),
                           static_cast<std::uint32_t>(i));
        closure->right_.push_back(id);
      }
    }

    closure->star_.resize(out.elements.size());
    for (std::size_t a = 0; a < out.elements.size(); ++a) {
      auto it = out.index.find(gens.star(out.elements[a]));
      if (it == out.index.end()) {
        throw Error(ErrorCode::StarNotAntiAutomorphism,
                    "star image of element " + std::to_string(a) +
                        " lies outside the closure",
                    {a});
      }
      closure->star_[a] = it->second;
    }
    out.closure = std::move(closure);
    return out;
  }
};

// Breadth-first closure of gens and gens* under multiplication, preserving
// insertion order. Throws LimitExceeded once more than `limit` elements are
// found.
template <typename T, typename Hash, typename Eq>
Enumeration<T, Hash, Eq> enumerate(const BlackBoxGenerators<T, Hash, Eq>& gens,
                                   std::size_t limit) {
  if (limit == 0) {
    throw Error(ErrorCode::LimitExceeded, "limit must be at least 1");
  }
  return Enumerator<T, Hash, Eq>::run(gens, limit);
}

template <typename T, typename Hash, typename Eq>
struct Generated {
  InvolutorySemigroup semigroup;
  Enumeration<T, Hash, Eq> enumeration;
};

template <typename T, typename Hash, typename Eq>
Generated<T, Hash, Eq> generate(const BlackBoxGenerators<T, Hash, Eq>& gens,
                                std::size_t limit, std::string name = {}) {
  auto e = enumerate(gens, limit);
  std::vector<std::string> labels;
  labels.reserve(e.elements.size());
  for (std::size_t a = 0; a < e.elements.size(); ++a) {
    labels.push_back(e.closure->word(static_cast<ElementId>(a)).to_string());
  }
  auto s = e.closure->tabulate(std::move(name), std::move(labels));
  return {std::move(s), std::move(e)};
}

OracleSemigroup as_oracle(std::shared_ptr<const Closure> closure,
                          std::string name,
                          std::vector<std::string> labels = {});

}  // namespace invsg
