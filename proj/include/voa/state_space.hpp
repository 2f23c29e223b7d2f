#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voa/linalg.hpp"
#include "voa/scalar.hpp"

namespace voa {

/// Fock monomial J_{n_1} ... J_{n_s} Omega (x) e^{k alpha}, alpha = sqrt(2N) J.
///
/// `partition` holds the mode indices n_1 <= ... <= n_s < 0 and `charge` the
/// lattice coefficient k. Monomials order by (charge, partition lexicographic).
struct BasisMonomial {
  std::vector<int> partition;
  int charge = 0;

  /// Sorts the modes; throws DomainError on a non-negative mode.
  static BasisMonomial make(std::vector<int> modes, int charge);
  static BasisMonomial vacuum() { return {}; }

  /// Sum of -n_j.
  int oscillator_weight() const;
  /// Multiplicity of the mode J_{-j} (j > 0).
  int multiplicity(int j) const;

  auto operator<=>(const BasisMonomial& o) const {
    if (auto c = charge <=> o.charge; c != 0) return c;
    return partition <=> o.partition;
  }
  bool operator==(const BasisMonomial& o) const = default;

  std::string to_string() const;
};

/// N k^2 - sum n_j.
int weight_of(const BasisMonomial& m, int lattice_n);

/// Squared norm of a monomial under the invariant scalar product:
/// prod_j j^{m_j} m_j! over the part multiplicities m_j.
Rational monomial_norm_squared(const BasisMonomial& m);

/// Sparse combination of basis monomials with exact coefficients.
///
/// Zero coefficients are never stored, so two vectors are equal exactly when
/// their term maps are equal.
class Vector {
 public:
  using Terms = std::map<BasisMonomial, Scalar>;

  explicit Vector(const Field& field) : field_(&field) {}
  static Vector monomial(const Field& field, BasisMonomial m);
  static Vector monomial(const Field& field, BasisMonomial m, const Scalar& c);
  static Vector vacuum(const Field& field) { return monomial(field, BasisMonomial::vacuum()); }

  const Field& field() const noexcept { return *field_; }
  int lattice_n() const noexcept { return field_->lattice_n(); }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  size_t size() const noexcept { return terms_.size(); }

  Scalar coefficient(const BasisMonomial& m) const;
  void add_term(const BasisMonomial& m, const Scalar& c);
  void add_term(BasisMonomial&& m, const Scalar& c);
  /// this += c * v
  void add_scaled(const Vector& v, const Scalar& c);

  Vector operator+(const Vector& o) const;
  Vector operator-(const Vector& o) const;
  Vector operator-() const;
  Vector operator*(const Scalar& c) const;
  Vector operator*(const Rational& q) const;
  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);

  bool operator==(const Vector& o) const;
  bool operator!=(const Vector& o) const { return !(*this == o); }

  /// Homogeneous components keyed by L_0 weight.
  std::map<int, Vector> weight_components() const;
  /// Weight when the vector is nonzero and homogeneous.
  std::optional<int> homogeneous_weight() const;

  /// Same vector with coefficients lifted to a larger conductor.
  Vector lifted(int conductor) const;

  std::string to_string() const;

 private:
  void check_field(const Vector& o) const;

  const Field* field_;
  Terms terms_;
};

inline Vector operator*(const Scalar& c, const Vector& v) { return v * c; }
inline Vector operator*(const Rational& q, const Vector& v) { return v * q; }

/// Subspace truncated at a weight cutoff, stored as a homogeneous basis per
/// weight. Bases produced by this library are in reduced echelon form with
/// respect to the canonical monomial order.
struct GradedSubspace {
  const Field* field = nullptr;
  int cutoff = 0;
  std::map<int, std::vector<Vector>> basis_by_weight;

  int dim(int weight) const;
  std::vector<int> dims() const;
  const std::vector<Vector>& basis(int weight) const;
};

/// Incremental sparse Gauss-Jordan elimination on Vectors.
///
/// Rows are kept fully reduced: each row has coefficient 1 at its pivot (its
/// smallest monomial) and 0 at every other pivot, so the stored basis is the
/// unique reduced echelon basis of the span.
class EchelonBasis {
 public:
  explicit EchelonBasis(const Field& field) : field_(&field) {}

  /// Adds v to the span; returns true when the rank grew.
  bool insert(const Vector& v);
  /// Remainder of v after elimination against the current rows.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const { return reduce(v).is_zero(); }
  size_t rank() const noexcept { return rows_.size(); }
  std::vector<Vector> basis() const;

 private:
  const Field* field_;
  std::map<BasisMonomial, Vector> rows_;
};

/// Partitions of n as ascending lists of negative parts, canonical order.
const std::vector<std::vector<int>>& partitions_of(int n);
/// p(n)
long partition_count(int n);

/// All monomials of the given weight in canonical order.
std::vector<BasisMonomial> enumerate_basis(int lattice_n, int weight);
/// Monomials of weight <= cutoff, grouped by weight.
std::map<int, std::vector<BasisMonomial>> enumerate_graded(int lattice_n, int cutoff);

/// Antilinear PCT involution.
Vector pct(const Vector& v);
/// Linear flip automorphism: same rule without conjugation.
Vector apply_flip(const Vector& v);
/// Torus automorphism at angle 2 pi p / q: multiplies charge-k terms by
/// exp(2 pi i k p / q). Requires q | conductor.
Vector apply_torus(long p, long q, const Vector& v);

/// Sesquilinear product, antilinear in the first argument.
Scalar inner_product(const Vector& u, const Vector& v);

/// Gram matrix over the monomial basis of a weight, or over the basis of
/// `subspace` at that weight when given.
Matrix gram_matrix(const Field& field, int weight, const GradedSubspace* subspace = nullptr);

}  // namespace voa
