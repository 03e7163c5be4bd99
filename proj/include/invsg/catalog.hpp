#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invsg/generate.hpp"
#include "invsg/gf.hpp"
#include "invsg/matrix.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

enum class InfbStatus { Infb, NotInfb, Unknown };

std::string to_string(InfbStatus s);

struct ReductStatus {
  InfbStatus status = InfbStatus::Unknown;
  // Citation or "user-supplied"; required unless status is Unknown.
  std::string provenance;
};

// Reduct status from the built-in table of published results. Accepts
// catalog names such as "b21", "tb", "m2-gf3", "t4-gf3-skew". Throws
// UnknownCatalogName.
ReductStatus catalog_reduct_status(const std::string& name);

enum class Involution { Transpose, Skew };

std::string to_string(Involution inv);
Matrix apply(Involution inv, const Matrix& m);

using MatrixEnumeration = Enumeration<Matrix, MatrixHash>;

enum class MatrixFamily { Full, UpperTriangular };

struct MatrixFamilyInfo {
  MatrixFamily family;
  std::uint32_t n;
  const gf::Field* field;
  Involution involution;
};

inline constexpr std::size_t kTabulationBound = 4096;
inline constexpr std::size_t kEnumerationBound = 200000;

struct CatalogOptions {
  std::size_t tabulation_bound = kTabulationBound;
  std::size_t enumeration_bound = kEnumerationBound;
};

// A named semigroup of the built-in catalog. Small members carry a dense
// table; larger ones only an oracle over an enumerated element list.
struct CatalogEntry {
  std::string name;
  std::string spec;
  std::size_t size = 0;
  std::optional<InvolutorySemigroup> table;
  std::optional<OracleSemigroup> oracle;
  ReductStatus reduct;
  std::optional<MatrixFamilyInfo> family;
  std::shared_ptr<const MatrixEnumeration> matrices;

  bool tabulated() const { return table.has_value(); }
  std::optional<ElementId> find(const Matrix& m) const;
};

// The twisted semilattice {e, f, 0}: ids e = 0, f = 1, zero = 2.
InvolutorySemigroup tsl();

// The six matrices 0, E11, E12, E21, E22, I in that id order.
std::vector<Matrix> b21_matrices(const gf::Field& field);
// Brandt monoid with transposition.
InvolutorySemigroup b21();
// Brandt monoid with the skew transposition.
InvolutorySemigroup tb();

std::vector<Matrix> full_matrix_generators(const gf::Field& field, std::uint32_t n);
std::vector<Matrix> triangular_generators(const gf::Field& field, std::uint32_t n);

// M_n(F) and T_n(F) with the chosen involution. T_n(F) with transposition
// for n >= 2 throws InvalidConstruction (it is not closed).
CatalogEntry mn(std::uint32_t n, const gf::Field& field, Involution inv,
                const CatalogOptions& options = {});
CatalogEntry tn(std::uint32_t n, const gf::Field& field, Involution inv,
                const CatalogOptions& options = {});

CatalogEntry entry_from(InvolutorySemigroup s, std::string spec, ReductStatus reduct);

struct Relation {
  std::string name;
  bool holds = false;
};

// The {e, f, g, 0} construction inside M_n(F) under transposition and its
// Rees quotient by {g, 0}.
struct EfgWitness {
  Matrix e;
  Matrix f;
  Matrix g;
  gf::FieldElement x;
  gf::FieldElement y;
  std::vector<Relation> relations;
  bool relations_hold = false;
  InvolutorySemigroup subsemigroup;  // {e, f, g, 0}
  std::vector<Matrix> elements;
  Quotient quotient;
  bool quotient_is_tsl = false;
};

// n >= 3, (x, y) from chevalley_warning_witness.
EfgWitness efg_witness(std::uint32_t n, const gf::Field& field);
// n = 2, x a square root of -1. Throws NoSqrtMinusOne.
EfgWitness efg2_witness(const gf::Field& field);

// {e_11, e_nn, 0} inside T_n(F) under the skew transposition.
struct TriangularWitness {
  InvolutorySemigroup subsemigroup;
  std::vector<Matrix> elements;
  bool is_tsl = false;
};

TriangularWitness triangular_tsl_witness(std::uint32_t n, const gf::Field& field);

struct Conjugator {
  Matrix r;
  Matrix r_inverse;
  std::size_t samples = 0;
  bool multiplicative = false;    // psi(AB) = psi(A) psi(B) on the sample
  bool intertwines_stars = false;  // psi(A^D) = psi(A)^T on the sample
};

// Searches symmetric Hankel matrices (constant on anti-diagonals) R with
// R^2 = J, then checks A -> R^-1 A R on a fixed pseudo-random sample. An
// empty result only means nothing was found within `search_limit`.
std::optional<Conjugator> conjugator_r(std::uint32_t n, const gf::Field& field,
                                       std::uint64_t search_limit = 5'000'000,
                                       std::size_t samples = 100);

}  // namespace invsg
