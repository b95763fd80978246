#include "nary/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "nary/derivation.hpp"
#include "nary/error.hpp"

namespace nary {

NaryAlgebra::NaryAlgebra(std::string name_, std::size_t dim_, std::size_t arity_, Tensor f_,
                         std::optional<Metric> metric_)
    : name(std::move(name_)), dim(dim_), arity(arity_), f(std::move(f_)), metric(std::move(metric_)) {
  if (arity < 2) throw ShapeError("arity must be at least 2");
  if (f.shape() != Shape(arity + 1, dim)) throw ShapeError("structure constants must have arity+1 slots of size dim");
  if (metric && metric->dim() != dim) throw ShapeError("metric dimension differs from algebra dimension");
}

CheckReport passed(std::string property, std::string detail) {
  return CheckReport{std::move(property), true, std::nullopt, std::move(detail)};
}

CheckReport failed(std::string property, Witness w, std::string detail) {
  return CheckReport{std::move(property), false, std::move(w), std::move(detail)};
}

NaryAlgebra simple_filippov(std::size_t n, const std::vector<int>& signature) {
  if (n < 2) throw InvalidArgument("simple_filippov: arity must be at least 2");
  if (signature.size() != n + 1) throw InvalidArgument("simple_filippov: signature needs n+1 entries");
  std::vector<Rational> diag;
  std::size_t negatives = 0;
  bool negatives_first = true;
  for (std::size_t i = 0; i < signature.size(); ++i) {
    const int s = signature[i];
    if (s != 1 && s != -1) throw InvalidArgument("simple_filippov: signature entries must be +1 or -1");
    if (s < 0) {
      if (negatives != i) negatives_first = false;
      ++negatives;
    }
    diag.emplace_back(s);
  }
  Metric eta = Metric::diagonal(diag);
  Tensor f = raise_lower(levi_civita(n + 1), n, eta, IndexMove::Raise);

  std::string name = "A" + std::to_string(n + 1);
  if (negatives > 0) {
    if (negatives_first) {
      name = "A" + std::to_string(negatives) + "+" + std::to_string(n + 1 - negatives);
    } else {
      name += "(";
      for (std::size_t i = 0; i < signature.size(); ++i) name += signature[i] > 0 ? "+" : "-";
      name += ")";
    }
  }
  return NaryAlgebra(std::move(name), n + 1, n, std::move(f), std::move(eta));
}

NaryAlgebra zero_algebra(std::size_t d, std::size_t n) {
  return NaryAlgebra("zero(" + std::to_string(d) + "," + std::to_string(n) + ")", d, n,
                     Tensor::cube(n + 1, d), Metric::euclidean(d));
}

NaryAlgebra direct_sum(const NaryAlgebra& a, const NaryAlgebra& b) {
  if (a.arity != b.arity) throw ShapeError("direct_sum: arities differ");
  const std::size_t d = a.dim + b.dim;
  Tensor f = Tensor::cube(a.arity + 1, d);
  for (std::size_t off : a.f.nonzero_offsets()) f[a.f.unravel(off)] = a.f.flat(off);
  for (std::size_t off : b.f.nonzero_offsets()) {
    MultiIndex idx = b.f.unravel(off);
    for (auto& i : idx) i += a.dim;
    f[idx] = b.f.flat(off);
  }
  std::optional<Metric> metric;
  if (a.metric && b.metric) metric = direct_sum(*a.metric, *b.metric);
  return NaryAlgebra(a.name + "+" + b.name, d, a.arity, std::move(f), std::move(metric));
}

const Metric& resolve_metric(const NaryAlgebra& L, const Metric* override_metric) {
  if (override_metric) {
    if (override_metric->dim() != L.dim) throw ShapeError("metric dimension differs from algebra dimension");
    return *override_metric;
  }
  if (!L.metric) throw InvalidArgument("algebra '" + L.name + "' has no metric and none was supplied");
  return *L.metric;
}

Tensor lowered(const NaryAlgebra& L, const Metric& metric) {
  return raise_lower(L.f, L.arity, metric, IndexMove::Lower);
}

std::optional<Witness> first_violation(const Tensor& t, const std::vector<SlotPermutation>& perms,
                                       int sign) {
  // Only indices where t or its permuted image is nonzero can violate.
  const std::vector<std::size_t> nz = t.nonzero_offsets();
  std::vector<std::size_t> candidates = nz;
  for (const auto& p : perms) {
    for (std::size_t off : nz) {
      const MultiIndex k = t.unravel(off);
      std::size_t target = 0;
      for (std::size_t s = 0; s < k.size(); ++s) target += k[s] * t.strides()[p[s]];
      candidates.push_back(target);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  const Rational sgn(sign);
  for (std::size_t off : candidates) {
    const MultiIndex i = t.unravel(off);
    for (const auto& p : perms) {
      std::size_t image = 0;
      for (std::size_t s = 0; s < i.size(); ++s) image += i[p[s]] * t.strides()[s];
      Rational residual = t.flat(off);
      residual -= sgn * t.flat(image);
      if (!residual.is_zero()) return Witness{i, residual};
    }
  }
  return std::nullopt;
}

std::vector<SlotPermutation> adjacent_transpositions(std::size_t rank, std::size_t first, std::size_t last) {
  std::vector<SlotPermutation> out;
  for (std::size_t s = first; s + 1 < last; ++s) {
    SlotPermutation p(rank);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[s], p[s + 1]);
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

std::string range_label(std::size_t first, std::size_t last) {
  return "slots " + std::to_string(first + 1) + ".." + std::to_string(last);
}

CheckReport from_violation(std::string property, const std::optional<Witness>& w, std::string detail) {
  if (w) return failed(std::move(property), *w, std::move(detail));
  return passed(std::move(property), std::move(detail));
}

CheckReport arity_failure(std::string property, std::string detail) {
  return failed(std::move(property), Witness{{}, Rational()}, std::move(detail));
}

CheckReport skew_of(const Tensor& t, std::size_t first, std::size_t last, std::string property) {
  return from_violation(std::move(property), first_violation(t, adjacent_transpositions(t.rank(), first, last), -1),
                        range_label(first, last));
}

// Swap slot blocks [a, a+len) and [b, b+len).
SlotPermutation block_swap(std::size_t rank, std::size_t a, std::size_t b, std::size_t len) {
  SlotPermutation p(rank);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t j = 0; j < len; ++j) std::swap(p[a + j], p[b + j]);
  return p;
}

// Prefix a sub-check failure so the combined report says which condition broke.
CheckReport relabel(CheckReport sub, std::string property, const std::string& what) {
  sub.property = std::move(property);
  sub.detail = sub.detail.empty() ? what : what + ": " + sub.detail;
  return sub;
}

}  // namespace

CheckReport check_skew(const NaryAlgebra& L, std::size_t first, std::size_t last) {
  if (first > last || last > L.arity) throw ShapeError("check_skew: slot range outside the bracket inputs");
  return skew_of(L.f, first, last, "skew");
}

CheckReport check_metricity(const NaryAlgebra& L, const Metric* metric) {
  const Tensor low = lowered(L, resolve_metric(L, metric));
  return skew_of(low, L.arity - 1, L.arity + 1, "metricity");
}

CheckReport check_full_antisym_lowered(const NaryAlgebra& L, const Metric* metric) {
  const Tensor low = lowered(L, resolve_metric(L, metric));
  return skew_of(low, 0, L.arity + 1, "fullanti");
}

CheckReport check_symmetry_property(const NaryAlgebra& L, const Metric* metric) {
  if (L.arity < 3) return arity_failure("symmetry", "arity " + std::to_string(L.arity) + " is below 3");
  const Tensor low = lowered(L, resolve_metric(L, metric));
  const std::size_t r = low.rank();
  return from_violation("symmetry", first_violation(low, {block_swap(r, r - 4, r - 2, 2)}, 1),
                        "swap of the last two index pairs");
}

CheckReport check_generalized_metric_l(const NaryAlgebra& L, const Metric* metric) {
  const std::size_t l = L.arity;
  if (l < 3 || l % 2 == 0) return arity_failure("genmetric", "arity " + std::to_string(l) + " is not 2n-3 with n >= 3");
  const std::size_t n = (l + 3) / 2;
  const Metric& g = resolve_metric(L, metric);

  if (auto r = check_skew(L, 0, n - 1); !r.pass) return relabel(r, "genmetric", "skew");
  if (auto r = check_skew(L, n - 1, l); !r.pass) return relabel(r, "genmetric", "skew");
  const Tensor low = lowered(L, g);
  if (auto w = first_violation(low, adjacent_transpositions(low.rank(), l - 1, l + 1), -1))
    return failed("genmetric", *w, "metricity");
  if (auto w = first_violation(low, {block_swap(low.rank(), 0, n - 1, n - 1)}, 1))
    return failed("genmetric", *w, "pair-block symmetry");
  if (auto r = check_filippov(L); !r.pass) return relabel(r, "genmetric", "filippov");
  return passed("genmetric", "n = " + std::to_string(n));
}

Tensor cyclic_sum(const NaryAlgebra& L) {
  const std::size_t n = L.arity;
  std::vector<SlotPermutation> rotations;
  for (std::size_t k = 0; k < n; ++k) {
    SlotPermutation p(n + 1);
    for (std::size_t s = 0; s < n; ++s) p[s] = (s + k) % n;
    p[n] = n;
    rotations.push_back(std::move(p));
  }
  return permutation_sum(L.f, rotations, std::vector<Rational>(n, Rational(1)));
}

Tensor full_antisymmetrization(const NaryAlgebra& L) {
  std::vector<std::size_t> slots(L.arity);
  std::iota(slots.begin(), slots.end(), 0);
  return antisymmetrize(L.f, slots, false);
}

std::optional<Witness> first_nonzero(const Tensor& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!t.flat(i).is_zero()) return Witness{t.unravel(i), t.flat(i)};
  return std::nullopt;
}

CheckReport check_cyclic(const NaryAlgebra& L) {
  const bool anti_zero = full_antisymmetrization(L).is_zero();
  const std::string detail = std::string("full antisymmetrization ") + (anti_zero ? "vanishes" : "does not vanish");
  return from_violation("cyclic", first_nonzero(cyclic_sum(L)), detail);
}

CheckReport is_lie_triple(const NaryAlgebra& L) {
  if (L.arity != 3) return arity_failure("triple", "arity " + std::to_string(L.arity) + ", expected 3");
  if (auto r = check_skew(L, 0, 2); !r.pass) return relabel(r, "triple", "skew");
  if (auto r = check_filippov(L); !r.pass) return relabel(r, "triple", "filippov");
  if (auto r = check_cyclic(L); !r.pass) return relabel(r, "triple", "cyclic");
  return passed("triple");
}

CheckReport is_lie_nple(const NaryAlgebra& L) {
  const std::size_t n = L.arity;
  if (auto r = check_skew(L, 0, n - 1); !r.pass) return relabel(r, "nple", "skew");
  if (auto r = check_filippov(L); !r.pass) return relabel(r, "nple", "filippov");
  if (auto r = check_cyclic(L); !r.pass) return relabel(r, "nple", "cyclic");
  return passed("nple", "n = " + std::to_string(n));
}

}  // namespace nary
