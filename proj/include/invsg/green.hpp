#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invsg/semigroup.hpp"

namespace invsg {

// Left and right Cayley graphs with respect to a generator list:
// right(a, i) = a * g_i, left(a, i) = g_i * a.
class CayleyGraph {
 public:
  // Throws GeneratorsDoNotGenerate if the generators miss some element.
  static CayleyGraph build(const InvolutorySemigroup& s,
                           std::span<const ElementId> generators);
  static CayleyGraph build(const OracleSemigroup& s);

  std::size_t size() const noexcept { return size_; }
  const std::vector<ElementId>& generators() const noexcept { return generators_; }
  ElementId right(ElementId a, std::size_t i) const noexcept {
    return right_[static_cast<std::size_t>(a) * generators_.size() + i];
  }
  ElementId left(ElementId a, std::size_t i) const noexcept {
    return left_[static_cast<std::size_t>(a) * generators_.size() + i];
  }

 private:
  std::size_t size_ = 0;
  std::vector<ElementId> generators_;
  std::vector<ElementId> right_;
  std::vector<ElementId> left_;
};

inline constexpr std::size_t kAllElementsGeneratorLimit = 2000;

// Generators recorded at construction, else every element when the
// semigroup is small enough. Throws GeneratorsDoNotGenerate otherwise.
std::vector<ElementId> default_generators(const InvolutorySemigroup& s);

struct GreensData {
  std::vector<std::uint32_t> r_class;
  std::vector<std::uint32_t> l_class;
  std::vector<std::uint32_t> j_class;
  std::vector<std::uint32_t> h_class;
  std::vector<std::uint32_t> d_class;
  std::uint32_t r_count = 0;
  std::uint32_t l_count = 0;
  std::uint32_t j_count = 0;
  std::uint32_t h_count = 0;
  std::uint32_t d_count = 0;
  // (upper, lower) pairs of J-class indices. Covering pairs of the strict
  // J-order when j_order_reduced, otherwise all condensation edges.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> j_order;
  bool j_order_reduced = true;
  std::vector<ElementId> generators;
};

GreensData greens(const CayleyGraph& graph);
GreensData greens(const InvolutorySemigroup& s,
                  std::span<const ElementId> generators = {});

// S^1 a S^1, sorted.
std::vector<ElementId> principal_ideal(const CayleyGraph& graph, ElementId a);
std::vector<ElementId> principal_ideal(const InvolutorySemigroup& s,
                                       std::span<const ElementId> generators,
                                       ElementId a);

bool j_leq(const CayleyGraph& graph, ElementId a, ElementId b);
// a >_J b.
bool strictly_above_j(const CayleyGraph& graph, ElementId a, ElementId b);

// Targeted variants: breadth-first search from one element through the
// oracle, never building the full Cayley graph.
bool j_leq(const OracleSemigroup& s, ElementId a, ElementId b);
bool strictly_above_j(const OracleSemigroup& s, ElementId a, ElementId b);

struct EggboxView {
  std::uint32_t d_class = 0;
  std::vector<std::uint32_t> rows;     // R-class indices
  std::vector<std::uint32_t> columns;  // L-class indices
  // cells[row][column], elements sorted by id
  std::vector<std::vector<std::vector<ElementId>>> cells;
  std::vector<std::vector<bool>> has_idempotent;
};

EggboxView eggbox(const InvolutorySemigroup& s, const GreensData& g,
                  ElementId element);
std::string render_eggbox(const InvolutorySemigroup& s, const EggboxView& view,
                          bool annotate_star = false);

struct StabilityResult {
  bool ok = true;
  std::optional<std::pair<ElementId, ElementId>> violation;
};

StabilityResult stability_check(
    const InvolutorySemigroup& s, const GreensData& g,
    std::span<const std::pair<ElementId, ElementId>> pairs);
StabilityResult stability_check_all(const InvolutorySemigroup& s,
                                    const GreensData& g);

// (ab in R_a cap L_b) <=> (L_a cap R_b contains an idempotent). Throws
// NotSameDClass.
bool miller_clifford_check(const InvolutorySemigroup& s, const GreensData& g,
                           ElementId a, ElementId b);

}  // namespace invsg
