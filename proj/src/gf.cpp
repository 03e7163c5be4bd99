#include "invsg/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace invsg::gf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), k);
}

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime; Fermat.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

Poly decode(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
  Poly c(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

std::uint32_t encode(const Poly& c, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

}  // namespace

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  Poly mm = m;
  trim(mm);
  trim(a);
  if (mm.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial modulus is zero");
  const std::uint32_t lead_inv = inv_mod(mm.back(), p);
  while (a.size() >= mm.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - mm.size();
    for (std::size_t i = 0; i < mm.size(); ++i) {
      const std::uint64_t sub = factor * mm[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  trim(c);
  return c;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  Poly g = f;
  trim(g);
  const std::size_t k = g.size() - 1;
  if (k == 0) return false;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor = decode(static_cast<std::uint32_t>(code), p, static_cast<std::uint32_t>(d));
      divisor.push_back(1);
      if (poly_mod(g, divisor, p).empty()) return false;
    }
  }
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k; ++i) q_ *= p;
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    Poly prod = poly_mul(decode(a, p_, k_), decode(b, p_, k_), p_);
    Poly r = poly_mod(std::move(prod), modulus_, p_);
    r.resize(k_, 0);
    return encode(r, p_);
  };
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1;
    std::uint32_t order = 0;
    do {
      exp_[order] = x;
      x = slow_mul(x, g);
      ++order;
    } while (x != 1 && order < q_ - 1);
    if (x == 1 && order == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
  for (std::uint32_t i = 0; i + 1 < q_; ++i) log_[exp_[i]] = i;
}

FieldElement Field::element(std::uint32_t code) const {
  if (code >= q_) {
    throw Error(ErrorCode::BoundExceeded, "element code out of range for " + name());
  }
  return {*this, code};
}

FieldElement Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {*this, static_cast<std::uint32_t>(r)};
}

FieldElement Field::from_coefficients(const std::vector<std::uint32_t>& c) const {
  if (c.size() > k_) throw Error(ErrorCode::BoundExceeded, "too many coefficients");
  Poly padded(k_, 0);
  for (std::size_t i = 0; i < c.size(); ++i) padded[i] = c[i] % p_;
  return {*this, encode(padded, p_)};
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const noexcept {
  if (k_ == 1) {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    out += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

std::uint32_t Field::neg(std::uint32_t a) const noexcept {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return out;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const noexcept {
  return add(a, neg(b));
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::string Field::render(std::uint32_t code) const {
  if (k_ == 1) return std::to_string(code);
  Poly c = decode(code, p_, k_);
  std::string out;
  for (std::size_t i = k_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

const Field& field(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::BoundExceeded, "degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kFieldOrderBound) {
      throw Error(ErrorCode::BoundExceeded, "field order exceeds 2^16");
    }
  }
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Field>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, k}];
  if (!slot) {
    std::uint64_t count = q;  // monic candidates of degree k
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly m = decode(static_cast<std::uint32_t>(code), p, k);
      m.push_back(1);
      if (is_irreducible(m, p)) {
        slot.reset(new Field(p, k, std::move(m)));
        break;
      }
    }
  }
  return *slot;
}

const Field& field_of_order(std::uint64_t q) {
  auto pk = prime_power(q);
  if (!pk) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  return field(pk->first, pk->second);
}

FieldElement::FieldElement(const Field& field, std::uint32_t code)
    : field_(&field), code_(code) {}

std::vector<std::uint32_t> FieldElement::coefficients() const {
  return decode(code_, field_->characteristic(), field_->degree());
}

void FieldElement::same_field(const FieldElement& o) const {
  if (field_ != o.field_ || field_ == nullptr) {
    throw Error(ErrorCode::MixedFields, "operands belong to different fields");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  same_field(o);
  return {*field_, field_->add(code_, o.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  same_field(o);
  return {*field_, field_->sub(code_, o.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  same_field(o);
  return {*field_, field_->mul(code_, o.code_)};
}

FieldElement FieldElement::operator-() const { return {*field_, field_->neg(code_)}; }

FieldElement FieldElement::inverse() const { return {*field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = field_->one();
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

std::string FieldElement::to_string() const { return field_->render(code_); }

std::optional<FieldElement> sqrt(const Field& f, const FieldElement& a) {
  for (std::uint32_t b = 0; b < f.order(); ++b) {
    if (f.mul(b, b) == a.code()) return f.element(b);
  }
  return std::nullopt;
}

std::optional<FieldElement> sqrt_minus_one(const Field& f) {
  return sqrt(f, -f.one());
}

std::pair<FieldElement, FieldElement> chevalley_warning_witness(const Field& f) {
  const std::uint32_t minus_one = f.neg(1);
  for (std::uint32_t y = 0; y < f.order(); ++y) {
    const std::uint32_t rest = f.sub(minus_one, f.mul(y, y));
    for (std::uint32_t x = 0; x < f.order(); ++x) {
      if (f.mul(x, x) == rest) return {f.element(x), f.element(y)};
    }
  }
  throw std::logic_error("no solution of 1 + x^2 + y^2 = 0 in " + f.name());
}

}  // namespace invsg::gf
