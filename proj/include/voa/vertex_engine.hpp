#pragma once

#include <map>
#include <utility>
#include <vector>

#include "voa/state_space.hpp"

namespace voa {

/// Formal Laurent polynomial in z with vector coefficients: exponent -> vector.
using Series = std::map<int, Vector>;

/// Heisenberg mode J_m (central element K = 1). J_0 acts on charge k by k sqrt(2N).
Vector heis_apply(int m, const Vector& v);

/// Virasoro mode L_m of the c = 1 conformal vector: L_0 by weight, otherwise
/// the finite part of 1/2 sum_j J_j J_{m-j} that acts on each monomial.
Vector virasoro_apply(int m, const Vector& v);

/// One creation-operator word J_{modes...} with its coefficient.
struct CreationWord {
  std::vector<int> modes;  // ascending negative mode indices
  Scalar coeff;
};

/// z^m coefficient of E_+(g J, z) = exp(sum_{j>0} g J_{-j} z^j / j).
std::vector<CreationWord> eplus_coefficient(const Scalar& g, int m);
/// Same for the lattice vector k alpha, i.e. g = k sqrt(2N).
std::vector<CreationWord> eplus_coefficient(const Field& field, int charge, int m);

/// E_+(k alpha, z) v truncated at z^zmax.
Series eplus_apply(int charge, const Vector& v, int zmax);
/// Nonzero z-coefficients of E_-(k alpha, z) v with exponent in [zmin, zmax].
std::vector<std::pair<int, Vector>> eminus_apply(int charge, const Vector& v, int zmin, int zmax);
/// e_{k alpha}: left multiplication by Omega (x) e^{k alpha}.
Vector lattice_shift(int charge, const Vector& v);
/// z^{alpha_0} for alpha = k alpha_gen: exponent of z on each homogeneous charge piece.
Series z_alpha0_apply(int charge, const Vector& v);

/// Memoised monomial-level field expansions for repeated mode requests in one field.
///
/// Not thread safe; use one cache per worker.
class ModeCache {
 public:
  explicit ModeCache(const Field& field) : field_(&field) {}

  /// Y(a, z) b for monomials a, b, all exponents <= zmax.
  const Series& series(const BasisMonomial& a, const BasisMonomial& b, int zmax);

  Vector mode(const Vector& a, int n, const Vector& b);
  /// a_(n) b for n in [nmin, nmax], zero results omitted.
  std::map<int, Vector> modes(const Vector& a, const Vector& b, int nmin, int nmax);

  size_t size() const noexcept { return cache_.size(); }

 private:
  struct Entry {
    int zmax;
    Series series;
  };
  const Field* field_;
  std::map<std::pair<BasisMonomial, BasisMonomial>, Entry> cache_;
};

/// a_(n) b, the coefficient of z^{-n-1} in Y(a, z) b.
Vector vertex_mode(const Vector& a, int n, const Vector& b);
/// a_(n) b for all n in [nmin, nmax].
std::map<int, Vector> vertex_modes(const Vector& a, const Vector& b, int nmin, int nmax);

/// omega_(m+1) v, the action of L^omega_m for a weight-2 vector omega.
Vector virasoro_field_of(const Vector& omega, int m, const Vector& v);

/// Physics convention a_n = a_(n + d_a - 1) for homogeneous a of weight d_a.
Vector physics_mode(const Vector& a, int n, const Vector& b);

/// A fixed mode a_(n) as a linear operator, memoised on basis monomials.
class ModeOperator {
 public:
  ModeOperator(Vector a, int n, ModeCache* cache = nullptr) : a_(std::move(a)), n_(n), cache_(cache) {}

  Vector operator()(const Vector& v);
  const Vector& state() const noexcept { return a_; }
  int index() const noexcept { return n_; }

 private:
  Vector a_;
  int n_;
  ModeCache* cache_;
  std::map<BasisMonomial, Vector> memo_;
};

}  // namespace voa
