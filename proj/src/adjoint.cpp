#include "nary/adjoint.hpp"

#include <algorithm>

#include "nary/error.hpp"

namespace nary {

namespace {

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.is_zero(); });
}

void check_object(const NaryAlgebra& L, const FundamentalObject& X) {
  if (X.components.size() != L.arity - 1) throw ShapeError("fundamental object must have n-1 components");
  for (const auto& v : X.components)
    if (v.size() != L.dim) throw ShapeError("fundamental object component has the wrong dimension");
}

KernelBasis kernel_over(const NaryAlgebra& L, std::vector<MultiIndex> coordinates, bool alternate) {
  const std::size_t d = L.dim;
  Matrix system(d * d, coordinates.size());
  const std::size_t k = L.arity - 1;
  const PermutationTable& table = permutations(k);
  MultiIndex t(k);
  for (std::size_t col = 0; col < coordinates.size(); ++col) {
    const MultiIndex& a = coordinates[col];
    const std::size_t nperm = alternate ? table.perms.size() : 1;
    for (std::size_t p = 0; p < nperm; ++p) {
      for (std::size_t i = 0; i < k; ++i) t[i] = alternate ? a[table.perms[p][i]] : a[i];
      const Matrix m = ad_basis(L, t);
      const Rational sign = alternate ? Rational(table.signs[p]) : Rational(1);
      for (std::size_t i = 0; i < d * d; ++i)
        if (!m.data()[i].is_zero()) system(i, col) += sign * m.data()[i];
    }
  }
  return KernelBasis{std::move(coordinates), nullspace(system)};
}

}  // namespace

FundamentalObject basis_object(const NaryAlgebra& L, std::span<const std::size_t> a) {
  if (a.size() != L.arity - 1) throw ShapeError("basis_object: need n-1 indices");
  FundamentalObject X;
  for (std::size_t i : a) {
    if (i >= L.dim) throw ShapeError("basis_object: index out of range");
    Vector v(L.dim);
    v[i] = 1;
    X.components.push_back(std::move(v));
  }
  return X;
}

EndoMatrix ad_basis(const NaryAlgebra& L, std::span<const std::size_t> a) {
  if (a.size() != L.arity - 1) throw ShapeError("ad_basis: need n-1 indices");
  const std::size_t d = L.dim;
  MultiIndex idx(a.begin(), a.end());
  idx.push_back(0);
  idx.push_back(0);
  const std::size_t base = d == 0 ? 0 : L.f.offset(idx);
  Matrix m(d, d);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t c = 0; c < d; ++c) m(c, b) = L.f.flat(base + b * d + c);
  return m;
}

EndoMatrix ad_matrix(const NaryAlgebra& L, const FundamentalObject& X) {
  check_object(L, X);
  const std::size_t d = L.dim, k = L.arity - 1;
  Matrix m(d, d);
  for (const auto& v : X.components)
    if (is_zero_vector(v)) return m;
  for (std::size_t off : L.f.nonzero_offsets()) {
    const MultiIndex i = L.f.unravel(off);
    Rational w = L.f.flat(off);
    for (std::size_t r = 0; r < k && !w.is_zero(); ++r) w *= X.components[r][i[r]];
    if (!w.is_zero()) m(i[k + 1], i[k]) += w;
  }
  return m;
}

Vector ad_apply(const NaryAlgebra& L, const FundamentalObject& X, std::span<const Rational> Y) {
  return ad_matrix(L, X) * Y;
}

FormalSum compose(const NaryAlgebra& L, const FundamentalObject& X, const FundamentalObject& Y) {
  check_object(L, X);
  check_object(L, Y);
  FormalSum out;
  const Matrix ad = ad_matrix(L, X);
  for (std::size_t r = 0; r < Y.components.size(); ++r) {
    FundamentalObject term = Y;
    term.components[r] = ad * std::span<const Rational>(Y.components[r]);
    if (std::any_of(term.components.begin(), term.components.end(), is_zero_vector)) continue;
    out.push_back(FormalTerm{Rational(1), std::move(term)});
  }
  return out;
}

FormalSum compose(const NaryAlgebra& L, const FormalSum& X, const FormalSum& Y) {
  FormalSum out;
  for (const auto& x : X) {
    for (const auto& y : Y) {
      const Rational c = x.coeff * y.coeff;
      if (c.is_zero()) continue;
      for (auto& t : compose(L, x.object, y.object)) {
        t.coeff *= c;
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

EndoMatrix ad_of_sum(const NaryAlgebra& L, const FormalSum& terms) {
  Matrix m(L.dim, L.dim);
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    m = m + t.coeff * ad_matrix(L, t.object);
  }
  return m;
}

LieClosure lie_closure(const NaryAlgebra& L) {
  const std::size_t d = L.dim, k = L.arity - 1;
  LieClosure out;
  EchelonBasis basis(d * d);
  MultiIndex a(k, 0);
  const Shape sh(k, d);
  if (d > 0) {
    do {
      ++out.generators_consumed;
      const Matrix m = ad_basis(L, a);
      if (m.is_zero()) continue;
      if (basis.insert(m.data())) out.basis.push_back(m);
    } while (basis.dimension() < d * d && next_index(a, sh));
  }
  // Breadth-first: each new element is bracketed with every earlier one.
  for (std::size_t i = 1; i < out.basis.size(); ++i) {
    for (std::size_t j = 0; j < i && basis.dimension() < d * d; ++j) {
      Matrix c = commutator(out.basis[j], out.basis[i]);
      if (c.is_zero()) continue;
      if (basis.insert(c.data())) out.basis.push_back(std::move(c));
    }
  }
  out.dim = out.basis.size();
  return out;
}

KernelBasis ad_kernel(const NaryAlgebra& L) {
  const std::size_t k = L.arity - 1;
  std::vector<MultiIndex> coords;
  MultiIndex a(k, 0);
  const Shape sh(k, L.dim);
  checked_volume(sh);
  if (L.dim > 0) {
    do coords.push_back(a);
    while (next_index(a, sh));
  }
  return kernel_over(L, std::move(coords), false);
}

KernelBasis ad_kernel_skew(const NaryAlgebra& L) {
  const std::size_t k = L.arity - 1;
  std::vector<MultiIndex> coords;
  MultiIndex a(k, 0);
  const Shape sh(k, L.dim);
  if (L.dim > 0) {
    do {
      bool increasing = true;
      for (std::size_t i = 0; i + 1 < k; ++i)
        if (a[i] >= a[i + 1]) increasing = false;
      if (increasing) coords.push_back(a);
    } while (next_index(a, sh));
  }
  return kernel_over(L, std::move(coords), true);
}

std::vector<Vector> centre(const NaryAlgebra& L) {
  const std::size_t d = L.dim;
  // Rows f_{a…b}^c over b, for every (a…, c); only an independent set is kept.
  EchelonBasis rows(d);
  const std::size_t k = L.arity - 1;
  MultiIndex a(k, 0);
  const Shape sh(k, d);
  if (d > 0) {
    do {
      const Matrix m = ad_basis(L, a);
      for (std::size_t c = 0; c < d && rows.dimension() < d; ++c) {
        const auto row = m.row(c);
        if (std::any_of(row.begin(), row.end(), [](const Rational& q) { return !q.is_zero(); })) rows.insert(row);
      }
    } while (rows.dimension() < d && next_index(a, sh));
  }
  Matrix system(rows.dimension(), d);
  for (std::size_t i = 0; i < rows.dimension(); ++i)
    for (std::size_t j = 0; j < d; ++j) system(i, j) = rows.accepted()[i][j];
  std::vector<Vector> out;
  if (rows.dimension() == 0) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector e(d);
      e[j] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  for (const auto& v : nullspace(system)) out.push_back(to_dense(v, d));
  return out;
}

}  // namespace nary
