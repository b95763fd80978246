#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nary/adjoint.hpp"
#include "nary/algebra.hpp"
#include "nary/error.hpp"

namespace nary {

/// A construction refused its input; carries the failing check.
class PreconditionError : public Error {
public:
  PreconditionError(const std::string& what, CheckReport report)
      : Error(what), report_(std::move(report)) {}
  [[nodiscard]] const CheckReport& report() const noexcept { return report_; }

private:
  CheckReport report_;
};

struct ConstructionOptions {
  Rational prefactor = 1;
  // Skip precondition checks; the result is marked unverified.
  bool force = false;
};

/// (n+m-3)-Leibniz algebra with lowered constants
///   g_{a_1…a_{n-1} b_1…b_{m-2} d} = prefactor · f_{a_1…a_{n-1}}^{uv} h_{b_1…b_{m-2} d v u},
/// u and v raised with the metric.
///
/// Requires the symmetry property, metricity and Filippov identity of L2 and
/// that L2 acts on L1 by derivations.
NaryAlgebra associated_leibniz(const NaryAlgebra& L1, const NaryAlgebra& L2, const Metric& metric,
                               const ConstructionOptions& opts = {});

/// associated_leibniz(L, L) for a metric L skew in its first n-1 slots with
/// the symmetry property; arity 2n-3.
NaryAlgebra corollary_self(const NaryAlgebra& L, const Metric& metric, const ConstructionOptions& opts = {});

/// associated_leibniz(L1, cs3) for a metric 3-Leibniz cs3 with the symmetry
/// property; arity n.
NaryAlgebra corollary_cs3(const NaryAlgebra& L1, const NaryAlgebra& cs3, const Metric& metric,
                          const ConstructionOptions& opts = {});

/// R_{b…s a_1…a_n} = h_b^l_s ε_{a l} − Σ_i h_b^l_{a_i} ε_{a_1…s…a_n l} − h_b^l_l ε_{a s},
/// the expanded antisymmetrization over (s, a_1…a_n, l) with n = d-1.
/// Slot order: the m-1 inputs b of h, then s, then a_1…a_n.
Tensor schouten_residual(const NaryAlgebra& h, const Metric& metric);
/// Same identity checked without the dense residual.
CheckReport check_schouten(const NaryAlgebra& h, const Metric& metric);

/// Generators are indexed by pairs (a_1, a_2) in lexicographic order (d² of
/// them); form(i, j) is the bilinear form on generators i and j. The result
/// has lowered constants g_{a_1 a_2 b_1 b_2} = form((a_1,a_2), (b_1,b_2)).
NaryAlgebra triple_from_lie(const std::vector<EndoMatrix>& generators, const Matrix& form, const Metric& metric,
                            std::string name = "triple");

/// L_{a_1 a_2} e_b = −(δ_{a_1 b} e_{a_2} − δ_{a_2 b} e_{a_1}), all d² pairs.
std::vector<EndoMatrix> rotation_generators(std::size_t d);
/// prefactor · Tr(L_i L_j).
Matrix killing_form(const std::vector<EndoMatrix>& generators, const Rational& prefactor);
/// ε_{a_1 a_2 b_1 b_2} on pairs; d = 4.
Matrix epsilon_form();

/// [e_{a_1}, e_{a_2}, e_{b}] = −(δ_{a_1 b} e_{a_2} − δ_{a_2 b} e_{a_1}) on ℚ⁴.
NaryAlgebra cs_so4();

/// "A{k}", "A{p}+{q}", "cs-so4", "a4-sum-a4", "seven-leibniz", "zero(d,n)".
NaryAlgebra builtin(const std::string& name);

}  // namespace nary
