#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nary/algebra.hpp"

namespace nary {

/// Non-increasing list of positive row lengths.
using Partition = std::vector<std::size_t>;

/// Two columns of lengths l-r and r, i.e. the partition (2^r, 1^{l-2r}).
struct YoungShape {
  std::size_t l = 0;
  std::size_t r = 0;
  [[nodiscard]] Partition partition() const;
};

/// Two-column tableau over labels 0..l-1. Row i pairs col1[i] with col2[i].
struct Tableau {
  std::vector<std::size_t> col1;
  std::vector<std::size_t> col2;
  [[nodiscard]] YoungShape shape() const { return {col1.size() + col2.size(), col2.size()}; }
  /// Columns 0..l-r-1 and l-r..l-1.
  static Tableau canonical(const YoungShape& shape);
};

std::vector<Partition> partitions_of(std::size_t l);
/// Cycle type of a permutation, sorted non-increasing.
Partition cycle_type(std::span<const std::size_t> p);

/// χ^shape(σ) for σ of the given cycle type (Murnaghan–Nakayama).
std::int64_t character(const Partition& shape, const Partition& cycle_type);
/// Number of standard tableaux (hook-length formula).
std::int64_t standard_tableaux_count(const Partition& shape);

/// C(d+1, r) C(d, l-r) (l-2r+1)/(l-r+1); zero when l-r > d.
std::int64_t gl_dimension(const YoungShape& shape, std::size_t d);

struct ProjectionOptions {
  // Bound on l! × (nonzero entries of t), the number of scatter updates.
  std::size_t budget = 200'000'000;
  bool allow_large = false;
};

/// (χ(id)/l!) Σ_σ χ(σ) σ·t over the l listed slots.
Tensor isotypic_project(const Tensor& t, std::span<const std::size_t> slots, const Partition& shape,
                        const ProjectionOptions& opts = {});
Tensor isotypic_project(const Tensor& t, std::span<const std::size_t> slots, const YoungShape& shape,
                        const ProjectionOptions& opts = {});

/// Symmetrize each row pair, then antisymmetrize each column; normalized.
/// Tableau labels index into slots.
Tensor primitive_project(const Tensor& t, std::span<const std::size_t> slots, const Tableau& tab);

struct Component {
  std::size_t r = 0;
  bool nonzero = false;
  std::int64_t gl_dim = 0;
};
struct Classification {
  std::size_t l = 0;
  std::vector<Component> components;
};

/// Isotypic content of the bracket inputs for every two-column shape with l-r <= d.
Classification classify_bracket(const NaryAlgebra& L, const ProjectionOptions& opts = {});

/// Odd arity l = 2n-3: skew in slots 1..n-1 and n..l, Filippov identity, and
/// isotypic content only in the shape with columns n-1 and n-2. Throws
/// InvalidArgument for even arity.
CheckReport is_lie_lple(const NaryAlgebra& L, const ProjectionOptions& opts = {});

}  // namespace nary
