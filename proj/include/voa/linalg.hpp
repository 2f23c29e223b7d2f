#pragma once

#include <optional>
#include <vector>

#include "voa/scalar.hpp"

namespace voa {

/// Dense row-major matrix over a coefficient field.
struct Matrix {
  const Field* field;
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Scalar> data;

  Matrix(const Field& f, size_t r, size_t c) : field(&f), rows(r), cols(c), data(r * c, Scalar(f)) {}

  Scalar& at(size_t r, size_t c) { return data[r * cols + c]; }
  const Scalar& at(size_t r, size_t c) const { return data[r * cols + c]; }

  Matrix conjugate_transpose() const;
  bool is_hermitian() const;
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && data == o.data; }
};

struct EchelonForm {
  Matrix reduced;
  std::vector<size_t> pivot_cols;
};

/// Reduced row echelon form by Gauss-Jordan elimination (first nonzero pivot).
EchelonForm rref(Matrix m);
size_t rank(const Matrix& m);

/// Null space basis, one vector per free column, in the standard RREF
/// parametrisation: the free variable is 1, other free variables are 0.
std::vector<std::vector<Scalar>> kernel(const Matrix& m);

/// Some solution of A x = b, or nullopt when inconsistent. Free variables are 0.
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);

Scalar determinant(Matrix m);
/// Determinants of the k x k upper-left blocks, k = 1..n.
std::vector<Scalar> leading_principal_minors(const Matrix& m);

}  // namespace voa
