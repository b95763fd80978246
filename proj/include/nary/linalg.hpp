#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "nary/rational.hpp"

namespace nary {

using Vector = std::vector<Rational>;
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Dense row-major matrix over the rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::span<const Rational> data() const noexcept { return data_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] bool is_symmetric() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& c, const Matrix& a);
Vector operator*(const Matrix& a, std::span<const Rational> v);

Matrix transpose(const Matrix& a);
/// ab - ba
Matrix commutator(const Matrix& a, const Matrix& b);
Rational trace(const Matrix& a);
/// tr(ab) without forming the product.
Rational trace_of_product(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<SparseVector> nullspace(const Matrix& m);
Rational determinant(Matrix m);
/// Throws SingularError.
Matrix inverse(const Matrix& m);

Vector to_dense(const SparseVector& v, std::size_t length);

/// Incrementally maintained basis of a subspace of ℚ^n.
///
/// Stored rows are kept in semi-echelon form: each row has a unit pivot and
/// vanishes at the pivots of all earlier rows, so reduction in insertion
/// order is exact.
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t length) : length_(length) {}

  /// Adds v if it is independent of the current span; returns whether it was.
  bool insert(std::span<const Rational> v);
  [[nodiscard]] bool contains(std::span<const Rational> v) const;
  /// Residue of v after reduction against the basis (zero iff v is in the span).
  [[nodiscard]] Vector reduce(std::span<const Rational> v) const;

  [[nodiscard]] std::size_t dimension() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t length() const noexcept { return length_; }
  /// Independent vectors in the order they were accepted, unreduced.
  [[nodiscard]] const std::vector<Vector>& accepted() const noexcept { return accepted_; }

private:
  std::size_t length_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> accepted_;
};

}  // namespace nary
