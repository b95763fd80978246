#include <doctest.h>

#include <map>

#include "nary/construct.hpp"
#include "nary/error.hpp"
#include "nary/linalg.hpp"
#include "nary/young.hpp"
#include "oracles.hpp"

using namespace nary;

namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// matrix of the projector on (ℚ^d)^{⊗l}, one column per basis tensor
Matrix projector_matrix(std::size_t l, std::size_t d, const Partition& shape) {
  const std::size_t N = checked_volume(Shape(l, d));
  std::vector<std::size_t> slots(l);
  std::iota(slots.begin(), slots.end(), 0);
  Matrix P(N, N);
  for (std::size_t c = 0; c < N; ++c) {
    Tensor e = Tensor::cube(l, d);
    e.flat(c) = 1;
    const Tensor col = isotypic_project(e, slots, shape);
    for (std::size_t r = 0; r < N; ++r) P(r, c) = col.flat(r);
  }
  return P;
}

}  // namespace

TEST_CASE("characters") {
  CHECK(character({2, 1}, {1, 1, 1}) == 2);
  CHECK(character({2, 2, 1}, {1, 1, 1, 1, 1}) == 5);
  CHECK(standard_tableaux_count({2, 2, 1}) == 5);
  for (std::size_t l = 1; l <= 6; ++l)
    for (const auto& p : oracle::all_perms(l)) CHECK(character(Partition(l, 1), cycle_type(p)) == oracle::inversion_sign(p));
}

TEST_CASE("character orthogonality") {
  for (std::size_t l = 1; l <= 6; ++l) {
    const auto perms = oracle::all_perms(l);
    std::map<Partition, std::size_t> classes;
    for (const auto& p : perms) ++classes[cycle_type(p)];
    const auto shapes = partitions_of(l);
    std::int64_t dims2 = 0;
    for (const auto& a : shapes) {
      CHECK(character(a, Partition(l, 1)) == standard_tableaux_count(a));
      dims2 += standard_tableaux_count(a) * standard_tableaux_count(a);
      for (const auto& b : shapes) {
        std::int64_t s = 0;
        for (const auto& [ct, size] : classes) s += static_cast<std::int64_t>(size) * character(a, ct) * character(b, ct);
        CHECK(s == (a == b ? static_cast<std::int64_t>(factorial(l)) : 0));
      }
    }
    CHECK(dims2 == static_cast<std::int64_t>(factorial(l)));
  }
}

TEST_CASE("GL dimensions") {
  CHECK(gl_dimension({3, 1}, 4) == 20);
  CHECK(gl_dimension({3, 0}, 4) == 4);
  CHECK(gl_dimension({5, 2}, 5) == 75);
  for (std::size_t l = 1; l <= 7; ++l)
    for (std::size_t r = 0; 2 * r <= l; ++r)
      for (std::size_t d = 0; d <= 6; ++d) CHECK((gl_dimension({l, r}, d) == 0) == (l - r > d));
}

TEST_CASE("isotypic projectors: rank, idempotence, partition of unity") {
  for (std::size_t d : {3u, 4u}) {
    for (std::size_t r : {0u, 1u}) {
      const Partition shape = YoungShape{3, r}.partition();
      const Matrix P = projector_matrix(3, d, shape);
      CHECK(P * P == P);
      CHECK(rank(P) == static_cast<std::size_t>(gl_dimension({3, r}, d) * character(shape, {1, 1, 1})));
    }
  }
  CHECK(rank(projector_matrix(3, 4, {2, 1})) == 40);

  oracle::Gen g(81);
  const std::vector<std::size_t> slots{0, 1, 2};
  for (int it = 0; it < 15; ++it) {
    const std::size_t d = g.integer(1, 4);
    const Tensor t = g.tensor(Shape(3, d));
    Tensor sum(t.shape());
    for (const auto& shape : partitions_of(3)) {
      const Tensor p = isotypic_project(t, slots, shape);
      CHECK(isotypic_project(p, slots, shape) == p);
      for (const auto& perm : oracle::all_perms(3)) {
        const SlotPermutation sp(perm.begin(), perm.end());
        CHECK(permute(p, sp) == isotypic_project(permute(t, sp), slots, shape));
      }
      sum = add(sum, p);
    }
    CHECK(sum == t);
  }
}

TEST_CASE("primitive projector on the ternary fixtures") {
  const std::vector<std::size_t> in{0, 1, 2};
  const Tableau tab = Tableau::canonical({3, 1});
  CHECK(tab.col1 == std::vector<std::size_t>{0, 1});
  CHECK(tab.col2 == std::vector<std::size_t>{2});
  CHECK(is_zero(primitive_project(builtin("A4").f, in, tab)));
  CHECK_FALSE(is_zero(primitive_project(cs_so4().f, in, tab)));
  CHECK(is_zero(antisymmetrize(cs_so4().f, in, false)));
  CHECK(is_zero(primitive_project(Tensor::cube(4, 3), in, tab)));
}

TEST_CASE("isotypic content of the ternary fixtures") {
  const std::vector<std::size_t> in{0, 1, 2};
  const NaryAlgebra a4 = builtin("A4"), cs = cs_so4();
  CHECK(isotypic_project(a4.f, in, YoungShape{3, 0}) == a4.f);
  CHECK(is_zero(isotypic_project(a4.f, in, YoungShape{3, 1})));
  CHECK(isotypic_project(cs.f, in, YoungShape{3, 1}) == cs.f);
  CHECK(is_zero(isotypic_project(cs.f, in, YoungShape{3, 0})));
}

TEST_CASE("classification and l-ple systems") {
  auto nonzero = [](const Classification& c) {
    std::vector<std::size_t> rs;
    for (const auto& comp : c.components)
      if (comp.nonzero) rs.push_back(comp.r);
    return rs;
  };
  const NaryAlgebra a4 = builtin("A4");
  CHECK(nonzero(classify_bracket(a4)) == std::vector<std::size_t>{0});
  CHECK(nonzero(classify_bracket(cs_so4())) == std::vector<std::size_t>{1});
  CHECK(nonzero(classify_bracket(corollary_self(a4, *a4.metric))) == std::vector<std::size_t>{1});  // 2 × cs-so4

  CHECK(is_lie_lple(cs_so4()).pass);
  CHECK(is_lie_lple(cs_so4()).pass == is_lie_triple(cs_so4()).pass);
  const CheckReport r = is_lie_lple(a4);
  CHECK_FALSE(r.pass);
  CHECK(r.witness.has_value());
  CHECK_THROWS_AS(is_lie_lple(builtin("A5")), InvalidArgument);  // even arity
}

TEST_CASE("primitive projection of the delta bracket selects the a-slots as first column") {
  for (std::size_t n : {3u, 4u}) {
    const std::size_t d = n + 1, l = 2 * n - 3;
    const NaryAlgebra A = simple_filippov(n, std::vector<int>(d, 1));
    ConstructionOptions half;
    half.prefactor = Rational(1, 2);
    const NaryAlgebra L = corollary_self(A, *A.metric, half);
    const Tensor low = lowered(L, *A.metric);
    CHECK(low == oracle::signed_delta(d, n - 1, -1));

    std::vector<std::size_t> slots(l);
    std::iota(slots.begin(), slots.end(), 0);
    // canonical tableau: column 1 = the n-1 a-slots, column 2 = b-slots
    CHECK_FALSE(is_zero(primitive_project(L.f, slots, Tableau::canonical({l, n - 2}))));
    // moving one b-slot into the first column (rows stay column-sorted)
    Tableau mixed;
    for (std::size_t k = 0; k + 1 < n - 1; ++k) mixed.col1.push_back(k);
    mixed.col1.push_back(n - 1);
    mixed.col2.push_back(n - 2);
    for (std::size_t k = n; k < l; ++k) mixed.col2.push_back(k);
    CHECK(is_zero(primitive_project(L.f, slots, mixed)));
  }
}

TEST_CASE("budget") {
  ProjectionOptions tight;
  tight.budget = 10;
  const std::vector<std::size_t> in{0, 1, 2};
  CHECK_THROWS_AS(isotypic_project(builtin("A4").f, in, YoungShape{3, 1}, tight), BudgetError);
  tight.allow_large = true;
  CHECK_NOTHROW(isotypic_project(builtin("A4").f, in, YoungShape{3, 1}, tight));
}
