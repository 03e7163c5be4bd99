#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invsg/error.hpp"

namespace invsg::gf {

class Field;

// An element of GF(p^k): the residue array c_0 + c_1 t + ... + c_{k-1} t^{k-1}
// packed as the base-p integer sum c_i p^i. Numeric order of codes is the
// lexicographic order on coefficients, highest degree first.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field& field, std::uint32_t code);

  const Field& field() const { return *field_; }
  std::uint32_t code() const noexcept { return code_; }
  std::vector<std::uint32_t> coefficients() const;
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& o) const noexcept {
    return field_ == o.field_ && code_ == o.code_;
  }

  std::string to_string() const;

 private:
  void same_field(const FieldElement& o) const;

  const Field* field_ = nullptr;
  std::uint32_t code_ = 0;
};

inline constexpr std::uint64_t kFieldOrderBound = 1U << 16;

// GF(p^k) with the lexicographically least monic irreducible modulus of
// degree k. Instances are interned and live for the whole program.
class Field {
 public:
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }
  // Monic modulus, constant term first; size degree() + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::uint32_t primitive() const noexcept { return primitive_; }

  FieldElement zero() const { return {*this, 0}; }
  FieldElement one() const { return {*this, 1}; }
  FieldElement element(std::uint32_t code) const;
  // The image of an integer under Z -> GF(p).
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_coefficients(const std::vector<std::uint32_t>& c) const;

  // Code-level arithmetic used by the matrix layer.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg(std::uint32_t a) const noexcept;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  std::uint32_t inv(std::uint32_t a) const;

  std::string render(std::uint32_t code) const;
  std::string name() const;

 private:
  friend const Field& field(std::uint32_t p, std::uint32_t k);
  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t primitive_ = 1;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

bool is_prime(std::uint64_t n);

// Throws NotPrime or BoundExceeded.
const Field& field(std::uint32_t p, std::uint32_t k);
// Least (p, k) with p^k = q. Throws NotPrime when q is not a prime power.
const Field& field_of_order(std::uint64_t q);
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

// Polynomials over GF(p), constant term first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p);
Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p);
bool is_irreducible(const Poly& f, std::uint32_t p);

// Least b (by code) with b^2 = a.
std::optional<FieldElement> sqrt(const Field& f, const FieldElement& a);
// Least square root of -1; 1 in characteristic 2.
std::optional<FieldElement> sqrt_minus_one(const Field& f);
// A solution of 1 + x^2 + y^2 = 0, least with y as the major key and x as
// the minor key. Such a pair exists in every finite field.
std::pair<FieldElement, FieldElement> chevalley_warning_witness(const Field& f);

}  // namespace invsg::gf
