#include "nary/forms.hpp"

#include <numeric>

#include "nary/error.hpp"
#include "nary/linalg.hpp"

namespace nary {

TraceForm mixed_trace(const NaryAlgebra& L1, const NaryAlgebra& L2) {
  if (L1.dim != L2.dim) throw ShapeError("mixed_trace: algebras have different dimensions");
  const std::size_t n = L1.arity, m = L2.arity;
  // Pair f's last input with h's output and f's output with h's last input.
  const std::size_t s1[] = {n - 1, n};
  const std::size_t s2[] = {m, m - 1};
  Tensor k = contract(L1.f, s1, L2.f, s2);
  std::string name = L1.name == L2.name ? "kasymov(" + L1.name + ")" : "trace(" + L1.name + "," + L2.name + ")";
  return TraceForm{std::move(name), L1.dim, n, m, std::move(k)};
}

TraceForm kasymov(const NaryAlgebra& L) { return mixed_trace(L, L); }

CheckReport nondegenerate(const TraceForm& k) {
  const std::size_t d = k.dim;
  if (d == 0) return passed("nondegenerate", "rank 0 of 0");
  const std::size_t cols = k.k.size() / d;
  // rank K = rank K Kᵀ over ℚ; the Gram matrix is only d×d.
  Matrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Rational s;
      for (std::size_t c = 0; c < cols; ++c) s.add_product(k.k.flat(i * cols + c), k.k.flat(j * cols + c));
      gram(i, j) = s;
      gram(j, i) = s;
    }
  }
  const auto radical = nullspace(gram);
  const std::string detail = "rank " + std::to_string(d - radical.size()) + " of " + std::to_string(d);
  if (radical.empty()) return passed("nondegenerate", detail);
  // The first radical vector names a direction X with k(X, …) = 0.
  const auto& [index, value] = radical.front().front();
  return failed("nondegenerate", Witness{{index}, value}, detail);
}

CheckReport block_exchange_symmetric(const TraceForm& k) {
  if (k.n != k.m) throw ShapeError("block exchange needs equal block sizes");
  const std::size_t b = k.n - 1;
  SlotPermutation p(2 * b);
  std::iota(p.begin(), p.begin() + b, b);
  std::iota(p.begin() + b, p.end(), 0);
  if (auto w = first_violation(k.k, {p}, 1)) return failed("block-exchange", *w);
  return passed("block-exchange");
}

}  // namespace nary
