#include "nary/derivation.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "nary/error.hpp"
#include "nary/linalg.hpp"

namespace nary {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

void require_same_dim(const NaryAlgebra& L1, const NaryAlgebra& L2) {
  if (L1.dim != L2.dim) throw ShapeError("derivation check: algebras have different dimensions");
}

// Nonzero f_x^l of L1, with x flattened base d.
struct Entries {
  std::vector<std::size_t> x;
  std::vector<std::size_t> last;
  std::vector<Rational> val;
};

Entries entries_of(const Tensor& f, std::size_t d) {
  Entries e;
  for (std::size_t off : f.nonzero_offsets()) {
    e.x.push_back(off / d);
    e.last.push_back(off % d);
    e.val.push_back(f.flat(off));
  }
  return e;
}

using Defect = std::unordered_map<std::size_t, Rational>;

// E(x, s) = Σ_l f_x^l B(l, s) − Σ_r Σ_l B(x_r, l) f_{x_1…l…x_n}^s, keyed by x*d + s.
// B is a d×d block in (input, output) layout, i.e. B(l, s) = h_{y l}^s.
Defect derivation_defect(const Entries& f, std::size_t n, std::size_t d, std::span<const Rational> B) {
  Defect out;
  std::vector<std::size_t> place(n);
  for (std::size_t r = 0; r < n; ++r) place[r] = ipow(d, n - 1 - r);

  // Column lists of B: for each l, the rows x_r with B(x_r, l) != 0.
  std::vector<std::vector<std::size_t>> col(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t l = 0; l < d; ++l)
      if (!B[a * d + l].is_zero()) col[l].push_back(a);

  for (std::size_t k = 0; k < f.val.size(); ++k) {
    const std::size_t x = f.x[k], l = f.last[k];
    const Rational& v = f.val[k];
    for (std::size_t s = 0; s < d; ++s) {
      const Rational& b = B[l * d + s];
      if (!b.is_zero()) out[x * d + s].add_product(v, b);
    }
    // Same entry read as f_z^s with z = (x_1…l…x_n).
    const std::size_t s = l;
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t zr = (x / place[r]) % d;
      for (std::size_t a : col[zr]) {
        const std::size_t key = (x + a * place[r] - zr * place[r]) * d + s;
        out[key].add_product(-B[a * d + zr], v);
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

Rational derivation_residual_entry(const NaryAlgebra& L1, const NaryAlgebra& L2,
                                   std::span<const std::size_t> index) {
  require_same_dim(L1, L2);
  const std::size_t n = L1.arity, m = L2.arity, d = L1.dim;
  if (index.size() != n + m) throw ShapeError("derivation_residual_entry: index length must be n+m");
  for (std::size_t i : index)
    if (i >= d) throw ShapeError("derivation_residual_entry: index out of range");

  MultiIndex fx(index.begin(), index.begin() + n);
  fx.push_back(0);
  MultiIndex hy(index.begin() + n, index.begin() + n + m - 1);
  hy.push_back(0);
  hy.push_back(0);
  const std::size_t s = index[n + m - 1];

  Rational r;
  for (std::size_t l = 0; l < d; ++l) {
    fx[n] = l;
    const Rational& a = L1.f[fx];
    if (a.is_zero()) continue;
    hy[m - 1] = l;
    hy[m] = s;
    r.add_product(a, L2.f[hy]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    hy[m - 1] = index[k];
    MultiIndex z(index.begin(), index.begin() + n);
    z.push_back(s);
    for (std::size_t l = 0; l < d; ++l) {
      hy[m] = l;
      const Rational& c = L2.f[hy];
      if (c.is_zero()) continue;
      z[k] = l;
      r.add_product(-c, L1.f[z]);
    }
  }
  return r;
}

Tensor derivation_residual(const NaryAlgebra& L1, const NaryAlgebra& L2) {
  require_same_dim(L1, L2);
  const std::size_t n = L1.arity, m = L2.arity, d = L1.dim;
  Tensor out = Tensor::cube(n + m, d);
  if (d == 0) return out;
  const Entries f = entries_of(L1.f, d);
  const std::size_t ny = ipow(d, m - 1);
  const std::span<const Rational> h = L2.f.data();
  for (std::size_t y = 0; y < ny; ++y) {
    const auto slice = h.subspan(y * d * d, d * d);
    if (std::all_of(slice.begin(), slice.end(), [](const Rational& q) { return q.is_zero(); })) continue;
    for (const auto& [key, v] : derivation_defect(f, n, d, slice)) {
      const std::size_t x = key / d, s = key % d;
      out.flat((x * ny + y) * d + s) = v;
    }
  }
  return out;
}

Tensor filippov_residual(const NaryAlgebra& L) { return derivation_residual(L, L); }

CheckReport check_derivation(const NaryAlgebra& L1, const NaryAlgebra& L2) {
  require_same_dim(L1, L2);
  const std::size_t n = L1.arity, m = L2.arity, d = L1.dim;
  const std::string property = "derivation";
  if (d == 0) return passed(property);

  // Basis of the span of the acting slices, kept as original slices.
  EchelonBasis basis(d * d);
  const std::size_t ny = ipow(d, m - 1);
  const std::span<const Rational> h = L2.f.data();
  for (std::size_t y = 0; y < ny && basis.dimension() < d * d; ++y) {
    const auto slice = h.subspan(y * d * d, d * d);
    if (std::all_of(slice.begin(), slice.end(), [](const Rational& q) { return q.is_zero(); })) continue;
    basis.insert(slice);
  }

  const Entries f = entries_of(L1.f, d);
  std::size_t min_key = std::numeric_limits<std::size_t>::max();
  for (const Vector& B : basis.accepted()) {
    for (const auto& kv : derivation_defect(f, n, d, B)) min_key = std::min(min_key, kv.first);
  }
  if (min_key == std::numeric_limits<std::size_t>::max())
    return passed(property, "acting span dimension " + std::to_string(basis.dimension()));

  // Some slice fails at x = min_key / d; the lexicographically first entry has this x.
  const std::size_t x = min_key / d;
  MultiIndex index(n + m);
  for (std::size_t r = 0; r < n; ++r) index[r] = (x / ipow(d, n - 1 - r)) % d;
  MultiIndex y(m - 1, 0);
  const Shape ys(m - 1, d);
  do {
    std::copy(y.begin(), y.end(), index.begin() + n);
    for (std::size_t s = 0; s < d; ++s) {
      index[n + m - 1] = s;
      Rational r = derivation_residual_entry(L1, L2, index);
      if (!r.is_zero()) return failed(property, Witness{index, r});
    }
  } while (next_index(y, ys));
  throw Error("check_derivation: inconsistent defect computation");
}

CheckReport check_filippov(const NaryAlgebra& L) {
  CheckReport r = check_derivation(L, L);
  r.property = "filippov";
  return r;
}

}  // namespace nary
