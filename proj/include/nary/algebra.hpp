#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nary/metric.hpp"
#include "nary/tensor.hpp"

namespace nary {

/// Structure constants f_{a1…an}^b of an n-ary bracket on a d-dimensional
/// space. Slots 0..n-1 of f are the bracket inputs, slot n the output.
struct NaryAlgebra {
  std::string name;
  std::size_t dim = 0;
  std::size_t arity = 2;
  Tensor f;
  std::optional<Metric> metric;
  // Built with precondition checks bypassed.
  bool unverified = false;

  /// Validates that f has arity+1 slots of dimension dim.
  NaryAlgebra(std::string name, std::size_t dim, std::size_t arity, Tensor f,
              std::optional<Metric> metric = std::nullopt);

  friend bool operator==(const NaryAlgebra&, const NaryAlgebra&) = default;
};

struct Witness {
  MultiIndex index;  // 0-based
  Rational residual;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckReport {
  std::string property;
  bool pass = true;
  std::optional<Witness> witness;
  std::string detail;
};

CheckReport passed(std::string property, std::string detail = {});
CheckReport failed(std::string property, Witness w, std::string detail = {});

// Builders

/// A_{n+1} with metric diag(signature): f_{a1…an}^b = η^{bc} ε_{a1…an c}.
NaryAlgebra simple_filippov(std::size_t n, const std::vector<int>& signature);
NaryAlgebra zero_algebra(std::size_t d, std::size_t n);
/// Block sum; metrics are summed when both are present.
NaryAlgebra direct_sum(const NaryAlgebra& a, const NaryAlgebra& b);

/// The algebra's own metric, or the override if given. Throws if neither exists.
const Metric& resolve_metric(const NaryAlgebra& L, const Metric* override_metric);
/// f with its output slot lowered.
Tensor lowered(const NaryAlgebra& L, const Metric& metric);

// Symmetry checks. Slot ranges are half-open and 0-based over the input slots.

/// First index i (lexicographic) with t(i) != sign * t(P i) for some P, where
/// (P i)[s] = i[p[s]].
std::optional<Witness> first_violation(const Tensor& t, const std::vector<SlotPermutation>& perms,
                                       int sign);
/// Adjacent transpositions of slots first..last-1 within rank slots.
std::vector<SlotPermutation> adjacent_transpositions(std::size_t rank, std::size_t first,
                                                     std::size_t last);

CheckReport check_skew(const NaryAlgebra& L, std::size_t first, std::size_t last);
CheckReport check_metricity(const NaryAlgebra& L, const Metric* metric = nullptr);
CheckReport check_full_antisym_lowered(const NaryAlgebra& L, const Metric* metric = nullptr);
CheckReport check_symmetry_property(const NaryAlgebra& L, const Metric* metric = nullptr);
CheckReport check_generalized_metric_l(const NaryAlgebra& L, const Metric* metric = nullptr);

/// Σ over the n cyclic rotations of the input slots.
Tensor cyclic_sum(const NaryAlgebra& L);
/// Unnormalized signed sum over all n! input-slot permutations.
Tensor full_antisymmetrization(const NaryAlgebra& L);

CheckReport check_cyclic(const NaryAlgebra& L);
CheckReport is_lie_triple(const NaryAlgebra& L);
CheckReport is_lie_nple(const NaryAlgebra& L);

/// First nonzero entry, lexicographically.
std::optional<Witness> first_nonzero(const Tensor& t);

}  // namespace nary
