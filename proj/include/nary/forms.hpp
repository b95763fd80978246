#pragma once

#include <cstddef>
#include <string>

#include "nary/algebra.hpp"

namespace nary {

/// Trace form k(X, Y) = Tr(ad¹_X ad²_Y) in coordinates: the first n-1 slots
/// index X, the remaining m-1 index Y.
struct TraceForm {
  std::string name;
  std::size_t dim = 0;
  std::size_t n = 2;
  std::size_t m = 2;
  Tensor k;

  friend bool operator==(const TraceForm&, const TraceForm&) = default;
};

/// k_{a…b…} = f_{a_1…a_{n-1} c}^e h_{b_1…b_{m-1} e}^c. No ½.
TraceForm mixed_trace(const NaryAlgebra& L1, const NaryAlgebra& L2);
TraceForm kasymov(const NaryAlgebra& L);

/// k(X, 𝔊, …) = 0 ⇒ X = 0, i.e. the first slot has full rank.
CheckReport nondegenerate(const TraceForm& k);

/// k(X, Y) = k(Y, X) for a form with n = m.
CheckReport block_exchange_symmetric(const TraceForm& k);

}  // namespace nary
