#include <catch_amalgamated.hpp>

#include <random>

#include "invsg/catalog.hpp"
#include "invsg/green.hpp"

using namespace invsg;

namespace {

Matrix random_matrix(const gf::Field& f, std::uint32_t n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
  std::vector<std::uint32_t> codes(n * n);
  for (auto& c : codes) c = pick(rng);
  return Matrix(f, n, std::move(codes));
}

Matrix random_upper(const gf::Field& f, std::uint32_t n, std::mt19937& rng) {
  Matrix m = random_matrix(f, n, rng);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < i; ++j) m.set(i, j, f.zero());
  }
  return m;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("transpose and skew transpose", "[matrixsg]") {
  const auto& f2 = gf::field(2, 1);
  CHECK(Matrix::unit(f2, 2, 0, 0).skew_transpose() == Matrix::unit(f2, 2, 1, 1));
  const Matrix j2 = Matrix::anti_identity(f2, 2);
  CHECK(j2.skew_transpose() == j2);
  CHECK(j2.transpose() == j2);

  const auto& f3 = gf::field(3, 1);
  std::mt19937 rng(3);
  const Matrix j = Matrix::anti_identity(f3, 3);
  for (int i = 0; i < 200; ++i) {
    const Matrix a = random_matrix(f3, 3, rng);
    const Matrix b = random_matrix(f3, 3, rng);
    const Matrix c = random_matrix(f3, 3, rng);
    CHECK(a.skew_transpose() == j * a.transpose() * j);
    CHECK((a * b).skew_transpose() == b.skew_transpose() * a.skew_transpose());
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK(a.skew_transpose().skew_transpose() == a);
    CHECK((a * b) * c == a * (b * c));
  }
  CHECK(Matrix::from_ints(f3, 2, {1, 2, 0, 1}).to_string() == "[1 2;0 1]");
}

TEST_CASE("upper-triangular matrices are closed under skew transpose only", "[matrixsg]") {
  const auto& f3 = gf::field(3, 1);
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Matrix a = random_upper(f3, 4, rng);
    CHECK(a.skew_transpose().is_upper_triangular());
  }
  CHECK_FALSE(Matrix::unit(f3, 2, 0, 1).transpose().is_upper_triangular());
  CHECK(code_of([&] { tn(2, f3, Involution::Transpose); }) == ErrorCode::InvalidConstruction);
}

TEST_CASE("Brandt monoid with both involutions", "[matrixsg]") {
  const InvolutorySemigroup b = b21();
  const InvolutorySemigroup t = tb();
  CHECK(b.size() == 6);
  CHECK(b.base().table() == t.base().table());
  // ids: 0, E11, E12, E21, E22, I
  CHECK(b.star_map() == std::vector<ElementId>{0, 1, 3, 2, 4, 5});
  CHECK(t.star_map() == std::vector<ElementId>{0, 4, 2, 3, 1, 5});
  CHECK(b.base().identity() == ElementId{5});
  CHECK(b.base().zero() == ElementId{0});
  CHECK(b.label(2) == "E12");

  const auto& f2 = gf::field(2, 1);
  for (const Matrix& m : b21_matrices(f2)) {
    const auto all = b21_matrices(f2);
    CHECK(std::find(all.begin(), all.end(), m.transpose()) != all.end());
    CHECK(std::find(all.begin(), all.end(), m.skew_transpose()) != all.end());
  }
  CHECK(catalog_reduct_status("b21").status == InfbStatus::Infb);
  CHECK(catalog_reduct_status("tb").provenance.find("Corollary 6.1") != std::string::npos);
}

TEST_CASE("twisted semilattice", "[matrixsg]") {
  const InvolutorySemigroup s = tsl();
  CHECK(s.size() == 3);
  CHECK(s.product(0, 1) == 2);
  CHECK(s.product(1, 0) == 2);
  CHECK(s.star(2) == 2);
  CHECK(s.star(0) == 1);
  CHECK(s.label(0) == "e");
  CHECK(s.label(1) == "f");
  CHECK(s.label(2) == "0");
  CHECK_NOTHROW(from_cayley(3, s.base().table(), s.star_map(), "copy"));
}

TEST_CASE("matrix semigroup sizes", "[matrixsg]") {
  CHECK(mn(2, gf::field(5, 1), Involution::Transpose).size == 625);
  CHECK(mn(2, gf::field(2, 1), Involution::Skew).size == 16);
  CHECK(mn(3, gf::field(2, 1), Involution::Transpose).size == 512);
  CHECK(tn(3, gf::field(3, 1), Involution::Skew).size == 729);
  CHECK(tn(2, gf::field(2, 2), Involution::Skew).size == 64);
  CHECK(mn(1, gf::field(2, 1), Involution::Transpose).size == 2);
  CHECK(tn(1, gf::field(2, 1), Involution::Skew).size == 2);

  const CatalogEntry big = tn(4, gf::field(3, 1), Involution::Skew);
  CHECK(big.size == 59049);
  CHECK_FALSE(big.tabulated());
  REQUIRE(big.oracle);
  CHECK(big.oracle->size() == 59049);
  CHECK(big.matrices->elements.size() == 59049);

  CatalogOptions small;
  small.enumeration_bound = 1000;
  const CatalogEntry lazy = mn(3, gf::field(3, 1), Involution::Transpose, small);
  CHECK(lazy.size == 19683);
  CHECK_FALSE(lazy.oracle);
  CHECK_FALSE(lazy.tabulated());
}

TEST_CASE("catalog entries carry matrices consistent with the table", "[matrixsg]") {
  const CatalogEntry e = mn(2, gf::field(3, 1), Involution::Skew);
  REQUIRE(e.tabulated());
  const auto& s = *e.table;
  const auto& ms = e.matrices->elements;
  for (ElementId a = 0; a < s.size(); a += 7) {
    for (ElementId b = 0; b < s.size(); b += 5) {
      CHECK(ms[s.product(a, b)] == ms[a] * ms[b]);
    }
    CHECK(ms[s.star(a)] == ms[a].skew_transpose());
  }
}

TEST_CASE("reduct statuses", "[matrixsg]") {
  CHECK(catalog_reduct_status("t4-gf3").status == InfbStatus::Infb);
  CHECK(catalog_reduct_status("t4-gf3-skew").status == InfbStatus::Infb);
  CHECK(catalog_reduct_status("t3-gf3").status == InfbStatus::NotInfb);
  CHECK(catalog_reduct_status("t4-gf2").status == InfbStatus::NotInfb);
  CHECK(catalog_reduct_status("m2-gf3").status == InfbStatus::Infb);
  CHECK(catalog_reduct_status("m1-gf3").status == InfbStatus::Unknown);
  CHECK(catalog_reduct_status("tsl").status == InfbStatus::NotInfb);
  CHECK(catalog_reduct_status("tsl").provenance.rfind("user-supplied/classical", 0) == 0);
  CHECK(code_of([] { catalog_reduct_status("nonsense"); }) == ErrorCode::UnknownCatalogName);
  for (const char* name : {"b21", "m2-gf3", "t4-gf3", "t3-gf3", "tsl"}) {
    CHECK_FALSE(catalog_reduct_status(name).provenance.empty());
  }
}

TEST_CASE("e, f, g witnesses", "[matrixsg]") {
  const EfgWitness w3 = efg_witness(3, gf::field(2, 1));
  CHECK(w3.x.code() == 1);
  CHECK(w3.y.code() == 0);
  CHECK(w3.relations.size() == 8);
  CHECK(w3.relations_hold);
  CHECK(w3.subsemigroup.size() == 4);
  CHECK(w3.quotient.semigroup.size() == 3);
  CHECK(w3.quotient_is_tsl);

  const EfgWitness w2 = efg2_witness(gf::field(5, 1));
  CHECK(w2.x.code() == 2);
  const auto& f5 = gf::field(5, 1);
  CHECK(w2.e == Matrix::from_ints(f5, 2, {1, 0, 2, 0}));
  CHECK(w2.f == Matrix::from_ints(f5, 2, {1, 2, 0, 0}));
  CHECK(w2.g == Matrix::from_ints(f5, 2, {1, 2, 2, -1}));
  CHECK(w2.relations_hold);
  CHECK(w2.quotient_is_tsl);

  CHECK(code_of([] { efg2_witness(gf::field(3, 1)); }) == ErrorCode::NoSqrtMinusOne);
  CHECK(code_of([] { efg_witness(2, gf::field(3, 1)); }) == ErrorCode::InvalidConstruction);

  for (std::uint32_t n : {3u, 4u}) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 9u}) {
      const EfgWitness w = efg_witness(n, gf::field_of_order(q));
      CAPTURE(n, q);
      CHECK(w.relations_hold);
      CHECK(w.subsemigroup.size() == 4);
      CHECK(w.quotient_is_tsl);
    }
  }
}

TEST_CASE("triangular TSL witness", "[matrixsg]") {
  const TriangularWitness w4 = triangular_tsl_witness(4, gf::field(3, 1));
  CHECK(w4.is_tsl);
  REQUIRE(w4.elements.size() == 3);
  const auto& f3 = gf::field(3, 1);
  CHECK(w4.elements[0] == Matrix::unit(f3, 4, 0, 0));
  CHECK(w4.elements[1] == Matrix::unit(f3, 4, 3, 3));
  CHECK(w4.elements[2].is_zero());
  CHECK(triangular_tsl_witness(2, gf::field(2, 1)).is_tsl);

  const std::vector<ElementId> zero_ideal = {2};
  const Quotient q = rees_quotient(w4.subsemigroup, zero_ideal);
  CHECK(is_isomorphic(q.semigroup, w4.subsemigroup).isomorphic);
}

TEST_CASE("conjugator R", "[matrixsg]") {
  const auto& f17 = gf::field(17, 1);
  const auto r = conjugator_r(2, f17);
  REQUIRE(r);
  CHECK(r->r.transpose() == r->r);
  CHECK(r->r * r->r == Matrix::anti_identity(f17, 2));
  CHECK(r->r * r->r_inverse == Matrix::identity(f17, 2));
  CHECK(r->samples == 100);
  CHECK(r->multiplicative);
  CHECK(r->intertwines_stars);

  const auto r1 = conjugator_r(1, gf::field(5, 1));
  REQUIRE(r1);
  CHECK(r1->r == Matrix::identity(gf::field(5, 1), 1));

  // Characteristic 2: the search is bounded and its outcome is only recorded.
  const auto r2 = conjugator_r(2, gf::field(2, 1));
  if (r2) CHECK(r2->r * r2->r == Matrix::anti_identity(gf::field(2, 1), 2));
}
