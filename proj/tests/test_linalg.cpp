#include <doctest.h>

#include "nary/error.hpp"
#include "nary/linalg.hpp"
#include "nary/metric.hpp"
#include "oracles.hpp"

using namespace nary;

namespace {

Matrix random_matrix(oracle::Gen& g, std::size_t r, std::size_t c, double density = 0.6) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (g.coin(density)) m(i, j) = g.rational(5);
  return m;
}

}  // namespace

TEST_CASE("rank, nullspace and rref") {
  oracle::Gen g(21);
  for (int it = 0; it < 200; ++it) {
    const std::size_t r = g.integer(0, 6), c = g.integer(0, 6);
    const Matrix m = random_matrix(g, r, c, g.coin() ? 0.3 : 0.8);
    const auto ns = nullspace(m);
    CHECK(ns.size() + rank(m) == c);
    for (const auto& v : ns) {
      const Vector x = to_dense(v, c);
      for (const auto& y : m * std::span<const Rational>(x)) CHECK(y.is_zero());
    }
    const RowEchelon e = rref(m);
    CHECK(e.pivots.size() == rank(m));
    for (std::size_t k = 0; k < e.pivots.size(); ++k) CHECK(e.reduced(k, e.pivots[k]) == 1);
  }
}

TEST_CASE("inverse and determinant") {
  oracle::Gen g(22);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = g.integer(1, 5);
    const Matrix m = random_matrix(g, n, n, 0.7);
    if (determinant(m).is_zero()) {
      CHECK(rank(m) < n);
      CHECK_THROWS_AS(inverse(m), SingularError);
    } else {
      CHECK(rank(m) == n);
      CHECK(m * inverse(m) == Matrix::identity(n));
      CHECK(determinant(m) * determinant(inverse(m)) == 1);
    }
  }
  CHECK(inverse(Matrix(0, 0)).rows() == 0);
}

TEST_CASE("trace helpers") {
  oracle::Gen g(23);
  for (int it = 0; it < 50; ++it) {
    const Matrix a = random_matrix(g, 4, 4), b = random_matrix(g, 4, 4);
    CHECK(trace_of_product(a, b) == trace(a * b));
    CHECK(trace(commutator(a, b)).is_zero());
    CHECK(transpose(a * b) == transpose(b) * transpose(a));
  }
}

TEST_CASE("echelon basis") {
  oracle::Gen g(24);
  for (int it = 0; it < 50; ++it) {
    const std::size_t len = g.integer(1, 6), count = g.integer(0, 8);
    EchelonBasis basis(len);
    Matrix rows(count, len);
    for (std::size_t k = 0; k < count; ++k) {
      Vector v(len);
      for (auto& x : v)
        if (g.coin(0.4)) x = g.rational(3);
      for (std::size_t j = 0; j < len; ++j) rows(k, j) = v[j];
      const bool was_in = basis.contains(v);
      CHECK(basis.insert(v) == !was_in);
      CHECK(basis.contains(v));
    }
    CHECK(basis.dimension() == rank(rows));
    CHECK(basis.accepted().size() == basis.dimension());
  }
}

TEST_CASE("metric") {
  const Metric eta = Metric::lorentzian(1, 3);
  CHECK(eta.signature() == std::vector<int>{-1, 1, 1, 1});
  CHECK(eta.inverse() == eta.matrix());
  CHECK(Metric::euclidean(3).is_identity());
  CHECK(direct_sum(Metric::euclidean(2), Metric::lorentzian(1, 0)).signature() == std::vector<int>{1, 1, -1});
  Matrix asym(2, 2);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(Metric{asym}, InvalidArgument);
  CHECK_THROWS_AS(Metric{Matrix(2, 2)}, SingularError);
}
