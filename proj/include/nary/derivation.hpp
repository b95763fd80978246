#pragma once

#include <cstddef>
#include <span>

#include "nary/algebra.hpp"

namespace nary {

// The identity shared by the Filippov identity and the derivation property:
// for every (m-1)-tuple y of L2, D_y = ad²_y must act on L1 as a derivation.
//
//   R(x, y, s) = Σ_l f_x^l h_{y l}^s − Σ_r Σ_l h_{y x_r}^l f_{x_1…l…x_n}^s
//
// with x an n-tuple of L1 inputs. The Filippov identity of L is R for L1 = L2 = L.

/// Single entry R(x, y, s); index = (x…, y…, s), 0-based.
Rational derivation_residual_entry(const NaryAlgebra& L1, const NaryAlgebra& L2,
                                   std::span<const std::size_t> index);

/// Dense residual of rank n+m, slot order (x, y, s).
Tensor derivation_residual(const NaryAlgebra& L1, const NaryAlgebra& L2);
/// Dense residual of rank 2n.
Tensor filippov_residual(const NaryAlgebra& L);

/// Exact check without materializing R. R vanishes iff every matrix in the
/// span of the slices D_y acts as a derivation, so only a basis of that span
/// is tested. The witness is the lexicographically first nonzero entry of R.
CheckReport check_derivation(const NaryAlgebra& L1, const NaryAlgebra& L2);
CheckReport check_filippov(const NaryAlgebra& L);

}  // namespace nary
