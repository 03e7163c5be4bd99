#include "invsg/matrix.hpp"

namespace invsg {

Matrix::Matrix(const gf::Field& field, std::uint32_t n)
    : field_(&field), n_(n), codes_(static_cast<std::size_t>(n) * n, 0) {}

Matrix::Matrix(const gf::Field& field, std::uint32_t n, std::vector<std::uint32_t> codes)
    : field_(&field), n_(n), codes_(std::move(codes)) {
  if (codes_.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorCode::InvalidConstruction, "matrix must have n*n entries");
  }
  for (std::uint32_t c : codes_) {
    if (c >= field.order()) {
      throw Error(ErrorCode::MixedFields, "entry is not an element of " + field.name());
    }
  }
}

Matrix Matrix::zero(const gf::Field& field, std::uint32_t n) { return Matrix(field, n); }

Matrix Matrix::identity(const gf::Field& field, std::uint32_t n) {
  Matrix m(field, n);
  for (std::uint32_t i = 0; i < n; ++i) m.codes_[i * n + i] = 1;
  return m;
}

Matrix Matrix::unit(const gf::Field& field, std::uint32_t n, std::uint32_t i,
                    std::uint32_t j) {
  Matrix m(field, n);
  m.codes_[i * n + j] = 1;
  return m;
}

Matrix Matrix::anti_identity(const gf::Field& field, std::uint32_t n) {
  Matrix m(field, n);
  for (std::uint32_t i = 0; i < n; ++i) m.codes_[i * n + (n - 1 - i)] = 1;
  return m;
}

Matrix Matrix::from_ints(const gf::Field& field, std::uint32_t n,
                         const std::vector<std::int64_t>& values) {
  if (values.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorCode::InvalidConstruction, "matrix must have n*n entries");
  }
  Matrix m(field, n);
  for (std::size_t i = 0; i < values.size(); ++i) {
    m.codes_[i] = field.from_int(values[i]).code();
  }
  return m;
}

gf::FieldElement Matrix::at(std::uint32_t i, std::uint32_t j) const {
  return {*field_, codes_[i * n_ + j]};
}

void Matrix::set(std::uint32_t i, std::uint32_t j, const gf::FieldElement& v) {
  if (&v.field() != field_) {
    throw Error(ErrorCode::MixedFields, "entry is not an element of " + field_->name());
  }
  codes_[i * n_ + j] = v.code();
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_ || n_ != o.n_) {
    throw Error(ErrorCode::MixedFields, "matrix shapes or fields differ");
  }
  Matrix out(*field_, n_);
  const gf::Field& f = *field_;
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t k = 0; k < n_; ++k) {
      const std::uint32_t a = codes_[i * n_ + k];
      if (a == 0) continue;
      for (std::uint32_t j = 0; j < n_; ++j) {
        const std::uint32_t b = o.codes_[k * n_ + j];
        if (b == 0) continue;
        std::uint32_t& c = out.codes_[i * n_ + j];
        c = f.add(c, f.mul(a, b));
      }
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(*field_, n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) out.codes_[j * n_ + i] = codes_[i * n_ + j];
  }
  return out;
}

Matrix Matrix::skew_transpose() const {
  Matrix out(*field_, n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) {
      out.codes_[i * n_ + j] = codes_[(n_ - 1 - j) * n_ + (n_ - 1 - i)];
    }
  }
  return out;
}

std::optional<Matrix> Matrix::inverse() const {
  const gf::Field& f = *field_;
  const std::uint32_t n = n_;
  std::vector<std::uint32_t> a = codes_;
  Matrix inv = identity(f, n);
  auto& b = inv.codes_;
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    for (std::uint32_t j = 0; j < n; ++j) {
      std::swap(a[col * n + j], a[pivot * n + j]);
      std::swap(b[col * n + j], b[pivot * n + j]);
    }
    const std::uint32_t scale = f.inv(a[col * n + col]);
    for (std::uint32_t j = 0; j < n; ++j) {
      a[col * n + j] = f.mul(a[col * n + j], scale);
      b[col * n + j] = f.mul(b[col * n + j], scale);
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0) continue;
      const std::uint32_t factor = a[r * n + col];
      for (std::uint32_t j = 0; j < n; ++j) {
        a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
        b[r * n + j] = f.sub(b[r * n + j], f.mul(factor, b[col * n + j]));
      }
    }
  }
  return inv;
}

bool Matrix::is_upper_triangular() const {
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < i; ++j) {
      if (codes_[i * n_ + j] != 0) return false;
    }
  }
  return true;
}

bool Matrix::is_zero() const {
  for (std::uint32_t c : codes_) {
    if (c != 0) return false;
  }
  return true;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (i > 0) out += ";";
    for (std::uint32_t j = 0; j < n_; ++j) {
      if (j > 0) out += " ";
      out += field_->render(codes_[i * n_ + j]);
    }
  }
  return out + "]";
}

std::size_t MatrixHash::operator()(const Matrix& m) const noexcept {
  // FNV-1a over the row-major code bytes.
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint32_t c : m.codes()) {
    for (int shift = 0; shift < 32; shift += 8) {
      h ^= (c >> shift) & 0xFFU;
      h *= 1099511628211ULL;
    }
  }
  return static_cast<std::size_t>(h);
}

}  // namespace invsg
