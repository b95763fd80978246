#include "nary/linalg.hpp"

#include <algorithm>

#include "nary/error.hpp"
#include "nary/tensor.hpp"

namespace nary {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  check_size_guard(rows == 0 ? 0 : (cols > size_guard() / rows ? size_guard() + 1 : rows * cols));
  data_.resize(rows * cols);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q.is_zero(); });
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j).add_product(aik, b(k, j));
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum: shapes differ");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Rational& c, const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= c;
  return out;
}

Vector operator*(const Matrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw ShapeError("matrix-vector product: dimension mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i].add_product(a(i, j), v[j]);
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Rational trace(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("trace of a non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

Rational trace_of_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw ShapeError("trace_of_product: shapes");
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) t.add_product(a(i, k), b(k, i));
  return t;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) m(pivot, j).swap(m(lead_row, j));
    }
    const Rational inv = Rational(1) / m(lead_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || m(i, col).is_zero()) continue;
      const Rational factor = -m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j).add_product(factor, m(lead_row, j));
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<SparseVector> nullspace(const Matrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<SparseVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    SparseVector v;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const Rational& c = e.reduced(r, free);
      if (!c.is_zero()) v.emplace_back(e.pivots[r], -c);
    }
    v.emplace_back(free, Rational(1));
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(Matrix m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational();
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) m(pivot, j).swap(m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Rational inv = Rational(1) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const Rational factor = -(m(i, col) * inv);
      for (std::size_t j = col; j < n; ++j) m(i, j).add_product(factor, m(col, j));
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Matrix();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw SingularError("matrix is singular");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t length) {
  Vector out(length);
  for (const auto& [i, q] : v) out.at(i) = q;
  return out;
}

Vector EchelonBasis::reduce(std::span<const Rational> v) const {
  if (v.size() != length_) throw ShapeError("EchelonBasis: vector length mismatch");
  Vector w(v.begin(), v.end());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (w[p].is_zero()) continue;
    const Rational factor = -w[p];
    const Vector& row = rows_[r];
    for (std::size_t j = 0; j < length_; ++j) w[j].add_product(factor, row[j]);
  }
  return w;
}

bool EchelonBasis::contains(std::span<const Rational> v) const {
  const Vector w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](const Rational& q) { return q.is_zero(); });
}

bool EchelonBasis::insert(std::span<const Rational> v) {
  Vector w = reduce(v);
  auto it = std::find_if(w.begin(), w.end(), [](const Rational& q) { return !q.is_zero(); });
  if (it == w.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - w.begin());
  const Rational inv = Rational(1) / w[p];
  for (auto& q : w) q *= inv;
  // Keep earlier rows free of the new pivot so insertion-order reduction stays exact.
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  accepted_.emplace_back(v.begin(), v.end());
  return true;
}

}  // namespace nary
