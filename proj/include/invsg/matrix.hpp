#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "invsg/gf.hpp"

namespace invsg {

// Square matrix over a finite field. Entries are stored as field element
// codes in row-major order; codes are canonical, so equality and hashing work
// on the flat array.
class Matrix {
 public:
  Matrix(const gf::Field& field, std::uint32_t n);
  Matrix(const gf::Field& field, std::uint32_t n, std::vector<std::uint32_t> codes);

  static Matrix zero(const gf::Field& field, std::uint32_t n);
  static Matrix identity(const gf::Field& field, std::uint32_t n);
  // Matrix unit e_ij, 0-based.
  static Matrix unit(const gf::Field& field, std::uint32_t n, std::uint32_t i,
                     std::uint32_t j);
  // 1s on the secondary diagonal.
  static Matrix anti_identity(const gf::Field& field, std::uint32_t n);
  // Builds from small integers, reduced into GF(p).
  static Matrix from_ints(const gf::Field& field, std::uint32_t n,
                          const std::vector<std::int64_t>& values);

  const gf::Field& field() const noexcept { return *field_; }
  std::uint32_t dim() const noexcept { return n_; }
  const std::vector<std::uint32_t>& codes() const noexcept { return codes_; }
  gf::FieldElement at(std::uint32_t i, std::uint32_t j) const;
  void set(std::uint32_t i, std::uint32_t j, const gf::FieldElement& v);

  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const noexcept {
    return field_ == o.field_ && n_ == o.n_ && codes_ == o.codes_;
  }

  Matrix transpose() const;
  // Reflection in the secondary diagonal: (A^D)_{ij} = A_{n-1-j, n-1-i}.
  Matrix skew_transpose() const;
  std::optional<Matrix> inverse() const;
  bool is_upper_triangular() const;
  bool is_zero() const;

  std::string to_string() const;

 private:
  const gf::Field* field_;
  std::uint32_t n_;
  std::vector<std::uint32_t> codes_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept;
};

}  // namespace invsg
