#include "invsg/catalog.hpp"

#include <random>
#include <regex>

namespace invsg {

std::string to_string(InfbStatus s) {
  switch (s) {
    case InfbStatus::Infb: return "INFB";
    case InfbStatus::NotInfb: return "NotINFB";
    case InfbStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(Involution inv) {
  return inv == Involution::Transpose ? "t" : "skew";
}

Matrix apply(Involution inv, const Matrix& m) {
  return inv == Involution::Transpose ? m.transpose() : m.skew_transpose();
}

std::optional<ElementId> CatalogEntry::find(const Matrix& m) const {
  if (!matrices) return std::nullopt;
  return matrices->find(m);
}

InvolutorySemigroup tsl() {
  // e = 0, f = 1, 0 = 2
  std::vector<ElementId> table = {0, 2, 2,  //
                                  2, 1, 2,  //
                                  2, 2, 2};
  CayleyOptions options;
  options.zero = 2;
  return from_cayley(3, std::move(table), {1, 0, 2}, "tsl", options)
      .with_labels({"e", "f", "0"})
      .with_generators({0, 1});
}

std::vector<Matrix> b21_matrices(const gf::Field& field) {
  return {Matrix::zero(field, 2),     Matrix::unit(field, 2, 0, 0),
          Matrix::unit(field, 2, 0, 1), Matrix::unit(field, 2, 1, 0),
          Matrix::unit(field, 2, 1, 1), Matrix::identity(field, 2)};
}

namespace {

InvolutorySemigroup brandt(Involution inv, std::string name) {
  const gf::Field& f = gf::field(2, 1);
  auto m = b21_matrices(f);
  const std::size_t n = m.size();
  auto index_of = [&](const Matrix& x) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == x) return static_cast<ElementId>(i);
    }
    throw std::logic_error("B21 is not closed");
  };
  std::vector<ElementId> table(n * n);
  std::vector<ElementId> star(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index_of(m[a] * m[b]);
    star[a] = index_of(apply(inv, m[a]));
  }
  CayleyOptions options;
  options.identity = 5;
  options.zero = 0;
  return from_cayley(n, std::move(table), std::move(star), std::move(name), options)
      .with_labels({"0", "E11", "E12", "E21", "E22", "I"})
      .with_generators({2, 3, 5});
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

std::string family_name(MatrixFamily family, std::uint32_t n, const gf::Field& f,
                        Involution inv) {
  return std::string(family == MatrixFamily::Full ? "m" : "t") + std::to_string(n) +
         "-gf" + std::to_string(f.order()) + "-" + to_string(inv);
}

std::string family_spec(MatrixFamily family, std::uint32_t n, const gf::Field& f,
                        Involution inv) {
  return std::string(family == MatrixFamily::Full ? "mn:" : "tn:") + std::to_string(n) +
         ":" + std::to_string(f.order()) + ":" + to_string(inv);
}

CatalogEntry matrix_entry(MatrixFamily family, std::uint32_t n, const gf::Field& field,
                          Involution inv, std::vector<Matrix> gens,
                          const CatalogOptions& options) {
  if (n == 0) throw Error(ErrorCode::InvalidConstruction, "dimension must be positive");
  CatalogEntry entry;
  entry.name = family_name(family, n, field, inv);
  entry.spec = family_spec(family, n, field, inv);
  entry.family = MatrixFamilyInfo{family, n, &field, inv};
  const std::uint64_t cells =
      family == MatrixFamily::Full ? std::uint64_t{n} * n : std::uint64_t{n} * (n + 1) / 2;
  const std::uint64_t expected = checked_power(field.order(), cells);
  entry.size = static_cast<std::size_t>(expected);
  entry.reduct = catalog_reduct_status(entry.name);

  if (family == MatrixFamily::UpperTriangular) {
    for (const auto& g : gens) {
      if (!apply(inv, g).is_upper_triangular()) {
        throw Error(ErrorCode::InvalidConstruction,
                    "upper-triangular matrices are not closed under " +
                        std::string(inv == Involution::Transpose ? "transposition"
                                                                 : "skew transposition"));
      }
    }
  }
  if (expected > options.enumeration_bound) return entry;

  BlackBoxGenerators<Matrix, MatrixHash> bb;
  bb.generators = std::move(gens);
  bb.multiply = [](const Matrix& a, const Matrix& b) { return a * b; };
  bb.star = [inv](const Matrix& a) { return apply(inv, a); };
  auto e = std::make_shared<MatrixEnumeration>(enumerate(bb, options.enumeration_bound));
  if (e->elements.size() != expected) {
    throw std::logic_error("generators of " + entry.name + " reach " +
                           std::to_string(e->elements.size()) + " of " +
                           std::to_string(expected) + " matrices");
  }
  std::vector<std::string> labels;
  labels.reserve(e->elements.size());
  for (const auto& m : e->elements) labels.push_back(m.to_string());
  if (expected <= options.tabulation_bound) {
    entry.table = e->closure->tabulate(entry.name, std::move(labels));
    entry.oracle = as_oracle(*entry.table);
  } else {
    entry.oracle = as_oracle(e->closure, entry.name, std::move(labels));
  }
  entry.matrices = std::move(e);
  return entry;
}

}  // namespace

InvolutorySemigroup b21() { return brandt(Involution::Transpose, "b21-t"); }
InvolutorySemigroup tb() { return brandt(Involution::Skew, "tb"); }

std::vector<Matrix> full_matrix_generators(const gf::Field& field, std::uint32_t n) {
  std::vector<Matrix> gens;
  const std::uint32_t w = field.primitive();
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix t = Matrix::identity(field, n);
      t.set(i, j, field.one());
      gens.push_back(std::move(t));
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    Matrix d = Matrix::identity(field, n);
    d.set(i, i, field.element(w));
    if (!(d == Matrix::identity(field, n))) gens.push_back(std::move(d));
  }
  if (gens.empty()) gens.push_back(Matrix::identity(field, n));
  Matrix rank_drop = Matrix::identity(field, n);
  rank_drop.set(n - 1, n - 1, field.zero());
  gens.push_back(std::move(rank_drop));
  return gens;
}

std::vector<Matrix> triangular_generators(const gf::Field& field, std::uint32_t n) {
  std::vector<Matrix> gens;
  const std::uint32_t w = field.primitive();
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      Matrix t = Matrix::identity(field, n);
      t.set(i, j, field.one());
      gens.push_back(std::move(t));
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    Matrix d = Matrix::identity(field, n);
    d.set(i, i, field.element(w));
    if (!(d == Matrix::identity(field, n))) gens.push_back(std::move(d));
  }
  if (gens.empty()) gens.push_back(Matrix::identity(field, n));
  for (std::uint32_t i = 0; i < n; ++i) {
    Matrix p = Matrix::identity(field, n);
    p.set(i, i, field.zero());
    gens.push_back(std::move(p));
  }
  return gens;
}

CatalogEntry mn(std::uint32_t n, const gf::Field& field, Involution inv,
                const CatalogOptions& options) {
  return matrix_entry(MatrixFamily::Full, n, field, inv,
                      full_matrix_generators(field, n), options);
}

CatalogEntry tn(std::uint32_t n, const gf::Field& field, Involution inv,
                const CatalogOptions& options) {
  return matrix_entry(MatrixFamily::UpperTriangular, n, field, inv,
                      triangular_generators(field, n), options);
}

CatalogEntry entry_from(InvolutorySemigroup s, std::string spec, ReductStatus reduct) {
  CatalogEntry entry;
  entry.name = s.name();
  entry.spec = std::move(spec);
  entry.size = s.size();
  entry.reduct = std::move(reduct);
  entry.oracle = as_oracle(s);
  entry.table = std::move(s);
  return entry;
}

namespace {

InvolutorySemigroup close_matrices(const std::vector<Matrix>& gens, Involution inv,
                                   std::vector<Matrix>& elements, std::string name) {
  BlackBoxGenerators<Matrix, MatrixHash> bb;
  bb.generators = gens;
  bb.multiply = [](const Matrix& a, const Matrix& b) { return a * b; };
  bb.star = [inv](const Matrix& a) { return apply(inv, a); };
  auto e = enumerate(bb, 64);
  std::vector<std::string> labels;
  for (const auto& m : e.elements) labels.push_back(m.to_string());
  elements = e.elements;
  return e.closure->tabulate(std::move(name), std::move(labels));
}

void finish_efg(EfgWitness& w) {
  const Matrix zero = Matrix::zero(w.e.field(), w.e.dim());
  w.relations = {
      {"e^2=e", w.e * w.e == w.e},
      {"f^2=f", w.f * w.f == w.f},
      {"ef=g", w.e * w.f == w.g},
      {"fe=0", w.f * w.e == zero},
      {"e^T=f", w.e.transpose() == w.f},
      {"f^T=e", w.f.transpose() == w.e},
      {"g^T=g", w.g.transpose() == w.g},
      {"g!=0", !w.g.is_zero()},
  };
  w.relations_hold = true;
  for (const auto& r : w.relations) w.relations_hold = w.relations_hold && r.holds;
  if (!w.relations_hold) {
    throw std::logic_error("e, f, g construction failed its relations");
  }
  w.subsemigroup = close_matrices({w.e}, Involution::Transpose, w.elements, "efg");
  std::vector<ElementId> ideal;
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    if (w.elements[i] == w.g || w.elements[i].is_zero()) {
      ideal.push_back(static_cast<ElementId>(i));
    }
  }
  w.quotient = rees_quotient(w.subsemigroup, ideal);
  w.quotient_is_tsl = is_isomorphic(w.quotient.semigroup, tsl()).isomorphic;
}

}  // namespace

EfgWitness efg_witness(std::uint32_t n, const gf::Field& field) {
  if (n < 3) throw Error(ErrorCode::InvalidConstruction, "e, f, g construction needs n >= 3");
  auto [x, y] = gf::chevalley_warning_witness(field);
  Matrix e = Matrix::zero(field, n);
  e.set(0, 0, field.one());
  e.set(1, 0, x);
  e.set(2, 0, y);
  Matrix f = e.transpose();
  Matrix g = e * f;
  EfgWitness w{e, f, g, x, y, {}, false, {}, {}, {}, false};
  finish_efg(w);
  return w;
}

EfgWitness efg2_witness(const gf::Field& field) {
  auto x = gf::sqrt_minus_one(field);
  if (!x) {
    throw Error(ErrorCode::NoSqrtMinusOne, "-1 is not a square in " + field.name());
  }
  Matrix e = Matrix::zero(field, 2);
  e.set(0, 0, field.one());
  e.set(1, 0, *x);
  Matrix f = Matrix::zero(field, 2);
  f.set(0, 0, field.one());
  f.set(0, 1, *x);
  Matrix g = Matrix::zero(field, 2);
  g.set(0, 0, field.one());
  g.set(0, 1, *x);
  g.set(1, 0, *x);
  g.set(1, 1, -field.one());
  EfgWitness w{e, f, g, *x, field.zero(), {}, false, {}, {}, {}, false};
  finish_efg(w);
  return w;
}

TriangularWitness triangular_tsl_witness(std::uint32_t n, const gf::Field& field) {
  if (n < 2) throw Error(ErrorCode::InvalidConstruction, "needs n >= 2");
  TriangularWitness w;
  w.subsemigroup = close_matrices({Matrix::unit(field, n, 0, 0)}, Involution::Skew,
                                  w.elements, "e11-enn");
  w.is_tsl = w.subsemigroup.size() == 3 && is_isomorphic(w.subsemigroup, tsl()).isomorphic;
  return w;
}

std::optional<Conjugator> conjugator_r(std::uint32_t n, const gf::Field& field,
                                       std::uint64_t search_limit, std::size_t samples) {
  const Matrix j = Matrix::anti_identity(field, n);
  const std::uint32_t params = 2 * n - 1;
  const std::uint32_t q = field.order();
  std::vector<std::uint32_t> h(params, 0);
  std::optional<Matrix> found;
  for (std::uint64_t tried = 0; tried < search_limit; ++tried) {
    std::vector<std::uint32_t> codes(static_cast<std::size_t>(n) * n);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) codes[a * n + b] = h[a + b];
    }
    Matrix r(field, n, std::move(codes));
    if (r * r == j) {
      found = r;
      break;
    }
    std::uint32_t i = params;
    while (i > 0 && h[i - 1] + 1 == q) h[--i] = 0;
    if (i == 0) break;
    ++h[i - 1];
  }
  if (!found) return std::nullopt;
  auto r_inv = found->inverse();
  if (!r_inv) return std::nullopt;

  Conjugator c{*found, *r_inv, samples, true, true};
  std::mt19937_64 rng(20120917ULL);
  std::uniform_int_distribution<std::uint32_t> dist(0, q - 1);
  auto random_matrix = [&] {
    std::vector<std::uint32_t> codes(static_cast<std::size_t>(n) * n);
    for (auto& x : codes) x = dist(rng);
    return Matrix(field, n, std::move(codes));
  };
  auto psi = [&](const Matrix& a) { return c.r_inverse * a * c.r; };
  for (std::size_t s = 0; s < samples; ++s) {
    Matrix a = random_matrix();
    Matrix b = random_matrix();
    if (!(psi(a * b) == psi(a) * psi(b))) c.multiplicative = false;
    if (!(psi(a.skew_transpose()) == psi(a).transpose())) c.intertwines_stars = false;
  }
  return c;
}

ReductStatus catalog_reduct_status(const std::string& name) {
  static const std::string brandt_cite =
      "Sapir 1987, Corollary 6.1: the Brandt monoid B2^1 is INFB";
  static const std::regex brandt("b21(-t|-skew)?|tb");
  static const std::regex full("m(\\d+)-gf(\\d+)(-(t|skew))?");
  static const std::regex triangular("t(\\d+)-gf(\\d+)(-(t|skew))?");
  std::smatch m;
  if (std::regex_match(name, brandt)) return {InfbStatus::Infb, brandt_cite};
  if (name == "tsl") {
    return {InfbStatus::NotInfb,
            "user-supplied/classical: the reduct is a commutative band, whose "
            "variety is finitely based and locally finite"};
  }
  if (std::regex_match(name, m, full)) {
    const auto n = std::stoul(m[1]);
    if (n >= 2) {
      return {InfbStatus::Infb,
              "Sapir 1987, Corollary 6.2: M_n(K) is INFB for every n >= 2 and finite field K"};
    }
    return {InfbStatus::Unknown, ""};
  }
  if (std::regex_match(name, m, triangular)) {
    const auto n = std::stoul(m[1]);
    const auto q = std::stoul(m[2]);
    const std::string cite =
        "triangular matrix semigroups (2003): T_n(K) is INFB iff n >= 4 and |K| >= 3";
    if (n >= 4 && q >= 3) return {InfbStatus::Infb, cite};
    return {InfbStatus::NotInfb, cite};
  }
  if (name.rfind("cayley:", 0) == 0 || name == "trivial") return {InfbStatus::Unknown, ""};
  throw Error(ErrorCode::UnknownCatalogName, "no catalog entry named '" + name + "'");
}

}  // namespace invsg
