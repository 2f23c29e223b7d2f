#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace voa {

/// Raised when values living in different coefficient fields (conductor or
/// lattice parameter) are combined.
class ContextError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for mathematically invalid requests (inverse of zero, bad ranges).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Rational = mpq_class;

/// n/d in lowest terms.
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Coefficient field Q(zeta_n)[sqrt(2N)].
///
/// Fields are interned: `Field::get(n, N)` always returns the same object for
/// the same pair, so field identity is pointer identity. The cyclotomic part
/// is Q[x]/Phi_n(x); the radical is a second component unless sqrt(2N) already
/// lies in Q(zeta_n), in which case it is folded into the cyclotomic part.
class Field {
 public:
  static const Field& get(int conductor, int lattice_n);

  int conductor() const noexcept { return conductor_; }
  int lattice_n() const noexcept { return lattice_n_; }
  /// phi(conductor), the dimension of Q(zeta_n) over Q.
  int degree() const noexcept { return degree_; }
  /// True when sqrt(2N) is represented inside Q(zeta_n).
  bool radical_folded() const noexcept { return radical_in_field_.has_value(); }
  const std::vector<Rational>& radical_in_field() const { return *radical_in_field_; }
  const std::vector<long>& cyclotomic_polynomial() const noexcept { return phi_; }

  /// Coefficients of x^e reduced modulo Phi_n, e taken mod n.
  std::vector<Rational> zeta_power(long e) const;

  // Polynomial arithmetic in Q[x]/Phi_n on trimmed coefficient lists.
  std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
  std::vector<Rational> inv(const std::vector<Rational>& a) const;
  std::vector<Rational> conj(const std::vector<Rational>& a) const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(int conductor, int lattice_n);

  int conductor_;
  int lattice_n_;
  int degree_;
  std::vector<long> phi_;
  // reduction_[j] = x^(degree + j) mod Phi_n for j in [0, degree - 1)
  std::vector<std::vector<Rational>> reduction_;
  std::optional<std::vector<Rational>> radical_in_field_;
};

/// Exact element a + b*sqrt(2N) with a, b in Q(zeta_n).
///
/// Values are immutable and always in canonical form: coefficient lists carry
/// no trailing zeros, and the radical component is empty whenever the field
/// folds sqrt(2N). Structural equality is therefore field equality.
class Scalar {
 public:
  Scalar(const Field& field);  // zero
  Scalar(const Field& field, const Rational& q);
  Scalar(const Field& field, long q) : Scalar(field, Rational(q)) {}
  Scalar(const Field& field, std::vector<Rational> rat, std::vector<Rational> rad);

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return Scalar(f, 1L); }
  static Scalar imaginary_unit(const Field& f);
  static Scalar zeta(const Field& f, long exponent);
  static Scalar sqrt_2n(const Field& f);
  /// exp(2 pi i p / q); q must divide the conductor.
  static Scalar root_of_unity(const Field& f, long p, long q);

  const Field& field() const noexcept { return *field_; }
  const std::vector<Rational>& rat() const noexcept { return rat_; }
  const std::vector<Rational>& rad() const noexcept { return rad_; }

  bool is_zero() const noexcept { return rat_.empty() && rad_.empty(); }
  bool is_one() const;
  /// Rational value if the scalar lies in Q.
  std::optional<Rational> as_rational() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar operator*(const Rational& q) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar conjugate() const;
  Scalar pow(unsigned e) const;
  /// Re-express in Q(zeta_m)[sqrt(2N)] for a multiple m of the conductor.
  Scalar lifted(int conductor) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;
  void normalize();

  const Field* field_;
  std::vector<Rational> rat_;
  std::vector<Rational> rad_;
};

inline Scalar operator*(const Rational& q, const Scalar& s) { return s * q; }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Euler's totient.
int euler_phi(int n);

}  // namespace voa
