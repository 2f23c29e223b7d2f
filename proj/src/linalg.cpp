#include "voa/linalg.hpp"

namespace voa {

Matrix Matrix::conjugate_transpose() const {
  Matrix t(*field, cols, rows);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c).conjugate();
  return t;
}

bool Matrix::is_hermitian() const { return rows == cols && conjugate_transpose() == *this; }

EchelonForm rref(Matrix m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t piv = row;
    while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows) continue;
    if (piv != row)
      for (size_t k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(row, k));
    const Scalar inv = m.at(row, col).inverse();
    for (size_t k = col; k < m.cols; ++k)
      if (!m.at(row, k).is_zero()) m.at(row, k) = m.at(row, k) * inv;
    for (size_t r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Scalar f = m.at(r, col);
      for (size_t k = col; k < m.cols; ++k)
        if (!m.at(row, k).is_zero()) m.at(r, k) = m.at(r, k) - f * m.at(row, k);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

std::vector<std::vector<Scalar>> kernel(const Matrix& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t p : e.pivot_cols) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> out;
  for (size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols, Scalar(*m.field));
    v[free] = Scalar::one(*m.field);
    for (size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced.at(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
  if (b.size() != a.rows) throw DomainError("solve: right-hand side has wrong length");
  Matrix aug(*a.field, a.rows, a.cols + 1);
  for (size_t r = 0; r < a.rows; ++r) {
    for (size_t c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols) = b[r];
  }
  const auto e = rref(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols) return std::nullopt;
  std::vector<Scalar> x(a.cols, Scalar(*a.field));
  for (size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = e.reduced.at(i, a.cols);
  return x;
}

Scalar determinant(Matrix m) {
  if (m.rows != m.cols) throw DomainError("determinant of a non-square matrix");
  Scalar det = Scalar::one(*m.field);
  for (size_t col = 0; col < m.cols; ++col) {
    size_t piv = col;
    while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows) return Scalar(*m.field);
    if (piv != col) {
      for (size_t k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(col, k));
      det = -det;
    }
    det *= m.at(col, col);
    const Scalar inv = m.at(col, col).inverse();
    for (size_t r = col + 1; r < m.rows; ++r) {
      if (m.at(r, col).is_zero()) continue;
      const Scalar f = m.at(r, col) * inv;
      for (size_t k = col; k < m.cols; ++k) m.at(r, k) = m.at(r, k) - f * m.at(col, k);
    }
  }
  return det;
}

std::vector<Scalar> leading_principal_minors(const Matrix& m) {
  std::vector<Scalar> out;
  for (size_t k = 1; k <= m.rows; ++k) {
    Matrix sub(*m.field, k, k);
    for (size_t r = 0; r < k; ++r)
      for (size_t c = 0; c < k; ++c) sub.at(r, c) = m.at(r, c);
    out.push_back(determinant(std::move(sub)));
  }
  return out;
}

}  // namespace voa
