#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nary/algebra.hpp"
#include "nary/linalg.hpp"

namespace nary {

/// Endomorphisms use the operator convention: M(c, b) is the e_c coefficient of M e_b.
using EndoMatrix = Matrix;

/// An (n-1)-tuple of vectors; acts through the bracket's first n-1 slots.
struct FundamentalObject {
  std::vector<Vector> components;
  friend bool operator==(const FundamentalObject&, const FundamentalObject&) = default;
};

struct FormalTerm {
  Rational coeff;
  FundamentalObject object;
  friend bool operator==(const FormalTerm&, const FormalTerm&) = default;
};
using FormalSum = std::vector<FormalTerm>;

/// (e_{a_1}, …, e_{a_{n-1}}).
FundamentalObject basis_object(const NaryAlgebra& L, std::span<const std::size_t> a);

/// (ad_a)(c, b) = f_{a_1…a_{n-1} b}^c.
EndoMatrix ad_basis(const NaryAlgebra& L, std::span<const std::size_t> a);
EndoMatrix ad_matrix(const NaryAlgebra& L, const FundamentalObject& X);
/// ad_X Y = [X_1, …, X_{n-1}, Y].
Vector ad_apply(const NaryAlgebra& L, const FundamentalObject& X, std::span<const Rational> Y);

/// X·Y = Σ_r (Y_1, …, ad_X Y_r, …, Y_{n-1}); terms with a zero component are dropped.
FormalSum compose(const NaryAlgebra& L, const FundamentalObject& X, const FundamentalObject& Y);
/// Bilinear extension of compose to formal sums.
FormalSum compose(const NaryAlgebra& L, const FormalSum& X, const FormalSum& Y);
EndoMatrix ad_of_sum(const NaryAlgebra& L, const FormalSum& terms);

struct LieClosure {
  std::vector<EndoMatrix> basis;
  std::size_t dim = 0;
  std::size_t generators_consumed = 0;
};

/// Span of all basis ad matrices, closed under commutators. Generators are
/// inserted in lexicographic tuple order, then commutators breadth-first.
LieClosure lie_closure(const NaryAlgebra& L);

/// Kernel of X ↦ ad_X. coordinates[i] lists the tuple of the i-th unknown;
/// each vector is sparse over those unknowns.
struct KernelBasis {
  std::vector<MultiIndex> coordinates;
  std::vector<SparseVector> vectors;
};
/// Unknowns are all d^{n-1} basis tuples of the full tensor power.
KernelBasis ad_kernel(const NaryAlgebra& L);
/// Unknowns are e_{a_1} ∧ … ∧ e_{a_{n-1}} for increasing tuples.
KernelBasis ad_kernel_skew(const NaryAlgebra& L);

/// Basis of {Y : ad_X Y = 0 for all X}.
std::vector<Vector> centre(const NaryAlgebra& L);

}  // namespace nary
