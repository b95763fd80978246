#include <doctest.h>

#include "nary/construct.hpp"
#include "nary/forms.hpp"
#include "oracles.hpp"

using namespace nary;

namespace {

// every entry of the form by explicit matrix traces
void check_against_traces(const NaryAlgebra& L1, const NaryAlgebra& L2, const TraceForm& k) {
  const std::size_t n = L1.arity, m = L2.arity, d = L1.dim;
  REQUIRE(k.k.rank() == n + m - 2);
  for (std::size_t flat = 0; flat < k.k.size(); ++flat) {
    const MultiIndex i = k.k.unravel(flat);
    const MultiIndex a(i.begin(), i.begin() + (n - 1)), b(i.begin() + (n - 1), i.end());
    CHECK(k.k.flat(flat) == oracle::trace_form(L1.f, L2.f, a, b));
  }
  (void)d;
}

}  // namespace

TEST_CASE("Kasymov form of A4") {
  const NaryAlgebra a4 = builtin("A4");
  const TraceForm k = kasymov(a4);
  CHECK(k.k.at({0, 1, 0, 1}) == -2);
  check_against_traces(a4, a4, k);
  CHECK(block_exchange_symmetric(k).pass);
  CHECK(is_zero(kasymov(zero_algebra(3, 3)).k));
}

TEST_CASE("trace forms match explicit traces on random algebras") {
  oracle::Gen g(61);
  for (int it = 0; it < 30; ++it) {
    const std::size_t d = g.integer(1, 3), n = g.integer(2, 3), m = g.integer(2, 3);
    const NaryAlgebra L1("f", d, n, g.tensor(Shape(n + 1, d), 0.5));
    const NaryAlgebra L2("h", d, m, g.tensor(Shape(m + 1, d), 0.5));
    check_against_traces(L1, L2, mixed_trace(L1, L2));
    if (n == m) CHECK(block_exchange_symmetric(kasymov(L1)).pass);
  }
}

TEST_CASE("mixed trace with the sum of two A4") {
  const NaryAlgebra a8 = builtin("A8"), s = builtin("a4-sum-a4");
  const TraceForm k = mixed_trace(a8, s);
  const MultiIndex i{0, 1, 4, 5, 6, 7, 0, 1};
  CHECK(k.k[i] == -2);
  CHECK(k.k[i] == oracle::trace_form(a8.f, s.f, {0, 1, 4, 5, 6, 7}, {0, 1}));
  CHECK(is_zero(mixed_trace(a8, zero_algebra(8, 3)).k));
}

TEST_CASE("non-degeneracy") {
  CHECK(nondegenerate(kasymov(builtin("A4"))).pass);
  CHECK_FALSE(nondegenerate(kasymov(zero_algebra(3, 3))).pass);
  const CheckReport r = nondegenerate(kasymov(direct_sum(builtin("A4"), zero_algebra(1, 3))));
  CHECK_FALSE(r.pass);
  CHECK(r.witness.has_value());
}
