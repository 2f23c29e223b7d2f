#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voa/state_space.hpp"
#include "voa/vertex_engine.hpp"

namespace voa {

// ---------------------------------------------------------------------------
// Named states. `m` is a lattice multiple: g = m sqrt(2N).

namespace states {

Vector vacuum(const Field& f);
/// nu = 1/2 J_{-1}^2 Omega, the c = 1 conformal vector.
Vector nu(const Field& f);
/// J_{-1} Omega
Vector current(const Field& f);
/// c Omega (x) e^{k alpha}
Vector exponential(const Field& f, int charge);
/// u = 1/2 J_{-1}^4 - J_{-3} J_{-1} + 3/4 J_{-2}^2, weight-4 primary of M(1).
Vector u4(const Field& f);
/// v_g = g^4/12 J_{-1}^4 + 2g^2/3 J_{-3}J_{-1} + g^2/4 J_{-2}^2.
Vector v_g(const Field& f, int m);
/// e^g_b = Omega (x) (e^{m alpha} + b e^{-m alpha}).
Vector e_g_b(const Field& f, int m, const Scalar& b);
/// omega_t = nu/2 + (e^{it} e^{2J} + e^{-it} e^{-2J})/4 at t = 2 pi p/q; requires N = 2.
Vector omega_t(const Field& f, long p, long q);

/// Resolves nu, vac, j1, u4, omega0, omega_pi, e_plus, e_minus, e_sum, egb, v_g.
std::optional<Vector> by_name(const Field& f, const std::string& name);
std::vector<std::string> names();

}  // namespace states

// ---------------------------------------------------------------------------
// Reports

struct WeightCheck {
  int weight;
  long lhs;
  long rhs;
  bool ok;
};

struct CheckItem {
  std::string name;
  bool ok;
  std::string detail;
};

/// Outcome of a verification: per-weight dimension comparisons and/or named checks.
struct Report {
  std::string check;
  std::map<std::string, std::string> params;
  std::vector<WeightCheck> per_weight;
  std::vector<CheckItem> items;
  bool verdict = true;

  void add(std::string name, bool ok, std::string detail = {});
  void add_weight(int w, long lhs, long rhs);
};

using DecompositionReport = Report;

// ---------------------------------------------------------------------------
// Linear algebra on Vectors

using LinearMap = std::function<Vector(const Vector&)>;

/// Basis of the common kernel of `maps` restricted to span(domain), in reduced
/// echelon form (canonical monomial order).
std::vector<Vector> common_kernel(const Field& f, const std::vector<Vector>& domain, const std::vector<LinearMap>& maps);

/// Coefficients x with sum x_i spanning[i] = target, or nullopt.
std::optional<std::vector<Scalar>> express_in_span(const Vector& target, const std::vector<Vector>& spanning);

/// Monomial basis of a weight as Vectors.
std::vector<Vector> monomial_vectors(const Field& f, int weight);
/// Whole space up to cutoff as a GradedSubspace of monomials.
GradedSubspace full_space(const Field& f, int cutoff);

// ---------------------------------------------------------------------------
// Primary vectors and characters

/// ker L_1 cap ker L_2 on the weight piece (of `ambient`, if given).
std::vector<Vector> primary_basis(const Field& f, int weight, const GradedSubspace* ambient = nullptr);
/// ker L_1 on the weight piece.
std::vector<Vector> quasi_primary_basis(const Field& f, int weight);

/// Graded dimensions of the irreducible Virasoro module L(c, h).
///
/// Supported: c = 1 with h >= 0, and the discrete series c = 1 - 6/(m(m+1))
/// with h in its Kac table. For integer h entry w is the dimension at weight
/// w (w = 0..max_weight); otherwise entry j is the dimension at weight h + j
/// for h + j <= max_weight. Throws DomainError for inadmissible (c, h).
std::vector<long> virasoro_character(const Rational& c, const Rational& h, int max_weight);

enum class SpaceKind { V, M1, VPlus, M1Plus };
SpaceKind parse_space_kind(const std::string& s);
std::string to_string(SpaceKind k);

/// Enumerated graded dimensions against the Virasoro character sum.
DecompositionReport verify_decomposition(SpaceKind which, int lattice_n, int cutoff);

// ---------------------------------------------------------------------------
// Automorphism groups

/// Closed subgroup of D_infinity: Z_k, D_k, D_k^t (t = 2 pi p/q), T, D_infinity.
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, DihedralTwisted, Torus, DInfinity };
  Kind kind = Kind::Cyclic;
  int k = 1;
  long p = 0;
  long q = 1;

  /// Z<k>, D<k>, D<k>^t, T, Dinf; the angle of D<k>^t comes from (p, q).
  static GroupSpec parse(const std::string& s, long p = 0, long q = 1);
  std::string to_string() const;
};

/// Fixed-point subspace, computed as the image of the group average (finite
/// groups) or by charge selection (T, D_infinity).
GradedSubspace fixed_point_subspace(const GroupSpec& g, const Field& f, int cutoff);

// ---------------------------------------------------------------------------
// Subalgebras and conformal vectors

struct ClosureOptions {
  int max_rounds = 64;
};

/// Smallest subspace up to `cutoff` containing Omega and the generators that
/// is closed under theta, L_1 and all products a_(n) b landing at weight <=
/// cutoff. Throws DomainError if `max_rounds` is exceeded.
GradedSubspace close_subalgebra(const std::vector<Vector>& generators, const Field& f, int cutoff,
                                ClosureOptions opts = {});

/// Orthogonal projection of nu onto the weight-2 piece of W.
Vector project_conformal(const GradedSubspace& w);

/// theta(omega) = omega and L^omega_n = L_n on W up to weight cutoff - 2, n in {-1, 0, 1}.
Report check_projection(const GradedSubspace& w, const Vector& omega);

struct VirasoroCounterexample {
  int m;
  int n;
  Vector v;
  Vector residual;
};

struct VirasoroVectorCertificate {
  Vector omega;
  Rational central_charge;
  int cutoff;
  bool certified = false;
  std::vector<std::string> checks;
  std::optional<VirasoroCounterexample> counterexample;
};

/// Checks the Virasoro relations for L^omega_m = omega_(m+1) with
/// m, n in [-range, range] on every basis vector up to `cutoff`, together with
/// L^omega_0 omega = 2 omega and L^omega_1 omega = 0.
VirasoroVectorCertificate certify_virasoro_vector(const Vector& omega, const Rational& c, int cutoff, int range = 3,
                                                  ModeCache* cache = nullptr);

// ---------------------------------------------------------------------------
// The N = 2 weight-2 constraint

/// Polynomial in the unknowns (a, b, bbar) with exponent triples as keys.
struct Poly3 {
  const Field* field;
  std::map<std::array<int, 3>, Scalar> terms;

  explicit Poly3(const Field& f) : field(&f) {}
  void add(std::array<int, 3> e, const Scalar& c);
  Poly3 operator-(const Poly3& o) const;
  bool is_zero() const { return terms.empty(); }
  /// Divides by the coefficient of the largest monomial.
  Poly3 monic() const;
  Scalar evaluate(const Scalar& a, const Scalar& b, const Scalar& bbar) const;
  bool operator==(const Poly3& o) const { return terms == o.terms; }
  std::string to_string() const;
};

/// Vector-valued polynomial in (a, b, bbar).
using PolyVector = std::map<std::array<int, 3>, Vector>;

struct OmegaSample {
  long p;
  long q;
  Scalar a;
  Scalar b;
  bool residual_zero;
  bool direct_zero;  // omega_(1) omega == 2 omega computed by the engine
};

struct OmegaConstraintResult {
  /// Pieces by power of rho = bbar/b.
  std::vector<Vector> c_nu;
  std::vector<Vector> c_e2;
  bool c_nu_matches = false;   // C_{-2,nu} = 2 e^2
  bool c_e2_matches = false;   // C_{-2,e^2} = rho 8 nu
  bool l0_identity = false;    // omega_(1) omega = 2 a omega + a b C_nu + b^2 C_e2
  std::vector<Poly3> equations;  // nonzero coordinates of omega_(1) omega - 2 omega
  bool system_matches = false;
  std::vector<OmegaSample> samples;
  Report report;
};

/// Evaluated coordinates of omega_(1) omega - 2 omega for omega = a nu + b e^{2J} + conj(b) e^{-2J}.
std::vector<Scalar> omega_residual(const Field& f, const Scalar& a, const Scalar& b);

/// Symbolic analysis in V_{L_4} plus sampled solutions a = 1/2, b = zeta_q^p / 4
/// for all p in [0, q) where q is the field's conductor.
OmegaConstraintResult solve_omega_constraint(const Field& f);

/// omega_0 + omega_pi = nu, commuting Virasoro modes, and dims of the phi-fixed
/// space against the convolution of the closure of omega_0 with itself (N = 2).
Report verify_w_tensor_split(int cutoff, int range = 2);

/// N = 1: zero-mode brackets of x+, x-, h against (a_(0) b)_(0) on weight <= cutoff
/// and the sl(2) structure of the bracket table.
Report sl2_zero_mode_check(const Field& f, int cutoff);

}  // namespace voa
