#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invsg/error.hpp"

namespace invsg {

// Dense Cayley table, row-major: table[a * size + b] = a * b.
class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;
  FiniteSemigroup(std::size_t size, std::vector<ElementId> table,
                  std::string name = {});

  std::size_t size() const noexcept { return size_; }
  const std::string& name() const noexcept { return name_; }
  ElementId product(ElementId a, ElementId b) const noexcept {
    return (*table_)[static_cast<std::size_t>(a) * size_ + b];
  }
  const std::vector<ElementId>& table() const noexcept { return *table_; }
  std::optional<ElementId> identity() const noexcept { return identity_; }
  std::optional<ElementId> zero() const noexcept { return zero_; }

  // Searches the table; independent of the stored optional fields.
  std::optional<ElementId> find_identity() const;
  std::optional<ElementId> find_zero() const;

  void set_identity(std::optional<ElementId> e) { identity_ = e; }
  void set_zero(std::optional<ElementId> z) { zero_ = z; }
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  std::size_t size_ = 0;
  std::shared_ptr<const std::vector<ElementId>> table_ =
      std::make_shared<const std::vector<ElementId>>();
  std::optional<ElementId> identity_;
  std::optional<ElementId> zero_;
  std::string name_;
};

// A finite semigroup together with an involutory anti-automorphism.
// Immutable once constructed; copies share the table.
class InvolutorySemigroup {
 public:
  InvolutorySemigroup() = default;

  std::size_t size() const noexcept { return base_.size(); }
  const std::string& name() const noexcept { return base_.name(); }
  const FiniteSemigroup& base() const noexcept { return base_; }
  ElementId product(ElementId a, ElementId b) const noexcept {
    return base_.product(a, b);
  }
  ElementId star(ElementId a) const noexcept { return star_[a]; }
  const std::vector<ElementId>& star_map() const noexcept { return star_; }

  // Generators known from construction (including their star images);
  // empty when the semigroup came from a bare table.
  const std::vector<ElementId>& generators() const noexcept {
    return generators_;
  }
  // Human-readable element names; defaults to the decimal id.
  std::string label(ElementId a) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  ElementId power(ElementId a, std::size_t exponent) const;

  InvolutorySemigroup with_name(std::string name) const;
  InvolutorySemigroup with_labels(std::vector<std::string> labels) const;
  InvolutorySemigroup with_generators(std::vector<ElementId> gens) const;

 private:
  friend InvolutorySemigroup make_involutory(FiniteSemigroup, std::vector<ElementId>,
                                             bool);
  FiniteSemigroup base_;
  std::vector<ElementId> star_;
  std::vector<ElementId> generators_;
  std::vector<std::string> labels_;
};

struct CayleyOptions {
  std::optional<ElementId> identity;
  std::optional<ElementId> zero;
  // Skips the O(size^3) associativity check; for tables produced by closure.
  bool trusted = false;
};

// Validates the table and the involution eagerly. Throws Error with
// MalformedTable, NonAssociative, StarNotInvolution, StarNotAntiAutomorphism,
// InvalidIdentity or InvalidZero.
InvolutorySemigroup from_cayley(std::size_t size, std::vector<ElementId> table,
                                std::vector<ElementId> star, std::string name,
                                const CayleyOptions& options = {});

// Wraps an already validated base semigroup.
InvolutorySemigroup make_involutory(FiniteSemigroup base,
                                    std::vector<ElementId> star,
                                    bool trusted = false);

// Semigroup known only through a multiplication oracle over an enumerated
// element list; used for sizes where a dense table is out of reach.
class OracleSemigroup {
 public:
  using Product = std::function<ElementId(ElementId, ElementId)>;

  OracleSemigroup(std::string name, std::vector<ElementId> star,
                  std::vector<ElementId> generators, Product product,
                  std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return star_.size(); }
  const std::string& name() const noexcept { return name_; }
  ElementId product(ElementId a, ElementId b) const { return product_(a, b); }
  ElementId star(ElementId a) const noexcept { return star_[a]; }
  const std::vector<ElementId>& generators() const noexcept {
    return generators_;
  }
  std::string label(ElementId a) const;

 private:
  std::string name_;
  std::vector<ElementId> star_;
  std::vector<ElementId> generators_;
  Product product_;
  std::vector<std::string> labels_;
};

OracleSemigroup as_oracle(const InvolutorySemigroup& s);

std::vector<ElementId> idempotents(const InvolutorySemigroup& s);
std::vector<ElementId> idempotents(const OracleSemigroup& s);

// First y (by id) with a = a*y*a.
std::optional<ElementId> regularity_witness(const InvolutorySemigroup& s,
                                            ElementId a);
bool is_regular_element(const InvolutorySemigroup& s, ElementId a);
bool is_regular(const InvolutorySemigroup& s);

struct Subsemigroup {
  InvolutorySemigroup semigroup;
  // embedding[i] is the id in the parent of element i of the subsemigroup.
  std::vector<ElementId> embedding;
};

// Closure of gens and their star images; elements in breadth-first order.
Subsemigroup involutory_subsemigroup(const InvolutorySemigroup& s,
                                     std::span<const ElementId> gens);

struct Quotient {
  InvolutorySemigroup semigroup;
  // projection[a] is the image in the quotient of element a of the parent.
  std::vector<ElementId> projection;
  ElementId zero = 0;
};

// Collapses a star-closed two-sided ideal to a zero. Throws NotAnIdeal or
// NotStarClosed.
Quotient rees_quotient(const InvolutorySemigroup& s,
                       std::span<const ElementId> ideal);

struct OrderData {
  std::vector<std::size_t> index;
  std::vector<std::size_t> period;
  // Least N with x^N = x^{2N} for every x.
  std::size_t global_n = 1;
  // lcm of the orders of all subgroups. Every period is the order of a
  // group element, so this is the lcm of all periods and divides global_n.
  std::size_t subgroup_exponent = 1;
};

OrderData order_data(const InvolutorySemigroup& s);
ElementId omega_power(const InvolutorySemigroup& s, ElementId a);

// First y (by id) satisfying the four Penrose equations for a.
std::optional<ElementId> moore_penrose(const InvolutorySemigroup& s,
                                       ElementId a);

bool is_completely_simple(const InvolutorySemigroup& s);
bool has_projection_in_every_regular_l_class(const InvolutorySemigroup& s);
bool has_projection_in_every_regular_r_class(const InvolutorySemigroup& s);

struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<ElementId> bijection;  // element of first -> element of second
};

inline constexpr std::size_t kIsomorphismBound = 10;
IsomorphismResult is_isomorphic(const InvolutorySemigroup& a,
                                const InvolutorySemigroup& b,
                                std::size_t bound = kIsomorphismBound);

struct DivisionWitness {
  std::vector<ElementId> generators;  // in the dividend S
  std::vector<ElementId> subsemigroup;  // elements of U, ids in S
  std::vector<ElementId> morphism;  // morphism[i] = image of subsemigroup[i]
};

struct DivisionResult {
  bool divides = false;
  std::optional<DivisionWitness> witness;
};

inline constexpr std::size_t kDivisionBound = 6;
// Brute-force check that t is a star-respecting homomorphic image of an
// involutory subsemigroup of s. Throws OracleBoundExceeded if |t| > bound.
DivisionResult divides(const InvolutorySemigroup& t,
                       const InvolutorySemigroup& s,
                       std::size_t bound = kDivisionBound);

// Size of a smallest set whose involutory closure is all of t.
std::size_t involutory_rank(const InvolutorySemigroup& t);

}  // namespace invsg
