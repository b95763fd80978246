#include <doctest.h>

#include "nary/error.hpp"
#include "nary/metric.hpp"
#include "nary/tensor.hpp"
#include "oracles.hpp"

using namespace nary;

TEST_CASE("levi-civita values") {
  const Tensor e3 = levi_civita(3);
  CHECK(e3.at({0, 1, 2}) == 1);
  CHECK(e3.at({1, 0, 2}) == -1);
  CHECK(e3.at({0, 0, 1}) == 0);
  CHECK(levi_civita(4).at({0, 1, 3, 2}) == -1);
  const Tensor e8 = levi_civita(8);
  const MultiIndex i{0, 1, 4, 5, 6, 7, 2, 3};
  CHECK(e8[i] == oracle::inversion_sign(i));
  CHECK(e8[i] == 1);
}

TEST_CASE("levi-civita and generalized delta against oracles") {
  for (std::size_t d = 1; d <= 5; ++d) CHECK(levi_civita(d) == oracle::epsilon(d));
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::size_t k = 1; k <= 3; ++k) CHECK(generalized_delta(d, k) == oracle::signed_delta(d, k, 1));
  CHECK(kronecker(3) == oracle::signed_delta(3, 1, 1));
}

TEST_CASE("contraction") {
  const Tensor e = levi_civita(4);
  const std::vector<std::size_t> s{2, 3};
  const Tensor ee = contract(e, s, e, s);
  CHECK(ee.at({0, 1, 0, 1}) == 2);
  CHECK(ee == oracle::contract(e, {2, 3}, e, {2, 3}));

  CHECK(is_zero(contract(e, s, Tensor::cube(4, 4), s)));
  const std::vector<std::size_t> one{1}, zero{0};
  CHECK(contract(kronecker(3), one, kronecker(3), zero) == kronecker(3));
}

TEST_CASE("contraction matches brute force on random tensors") {
  oracle::Gen g(11);
  for (int it = 0; it < 60; ++it) {
    const std::size_t d = g.integer(1, 3);
    const std::size_t r1 = g.integer(1, 4), r2 = g.integer(1, 4);
    const std::size_t k = g.integer(0, std::min(r1, r2));
    const Tensor a = g.tensor(Shape(r1, d), 0.6), b = g.tensor(Shape(r2, d), 0.6);
    // distinct random slots on each side
    auto pick = [&](std::size_t r) {
      std::vector<std::size_t> all(r);
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), g.rng);
      all.resize(k);
      return all;
    };
    const auto s1 = pick(r1), s2 = pick(r2);
    CHECK(contract(a, s1, b, s2) == oracle::contract(a, s1, b, s2));
  }
}

TEST_CASE("metric contraction weights the pairs") {
  oracle::Gen g(12);
  const Metric eta = Metric::lorentzian(1, 2);
  const Tensor a = g.tensor({3, 3}), b = g.tensor({3, 3});
  const std::vector<std::size_t> s1{1}, s2{0};
  // a_{i u} g^{...}: weighted sum equals contracting through the metric matrix
  Tensor gm = Tensor::cube(2, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) gm.at({i, j}) = eta.matrix()(i, j);
  const Tensor via = oracle::contract(oracle::contract(a, {1}, gm, {0}), {1}, b, {0});
  CHECK(contract(a, s1, b, s2, &eta) == via);
}

TEST_CASE("antisymmetrize and symmetrize") {
  const std::vector<std::size_t> first2{0, 1}, all3{0, 1, 2};
  const Tensor dd = outer(kronecker(2), kronecker(2));
  const Tensor a = antisymmetrize(dd, first2, true);
  CHECK(a.at({0, 0, 1, 1}) == 0);
  CHECK(antisymmetrize(a, first2, true) == a);
  CHECK(antisymmetrize(levi_civita(3), all3, true) == levi_civita(3));
  CHECK(is_zero(antisymmetrize(Tensor::cube(3, 2), all3, false)));
  oracle::Gen g(3);
  CHECK(is_zero(antisymmetrize(g.tensor(Shape(3, 2)), all3, true)));  // 3 slots > d = 2

  CHECK(is_zero(symmetrize(levi_civita(3), first2, false)));
  CHECK(symmetrize(kronecker(3), first2, true) == kronecker(3));
  Tensor single = Tensor::cube(2, 2);
  single.at({0, 1}) = 1;
  const Tensor s = symmetrize(single, first2, true);
  CHECK(s.at({0, 1}) == Rational(1, 2));
  CHECK(s.at({1, 0}) == Rational(1, 2));
}

TEST_CASE("projectors are idempotent and agree with explicit permutation sums") {
  oracle::Gen g(99);
  for (int it = 0; it < 40; ++it) {
    const std::size_t d = g.integer(1, 3), r = g.integer(2, 4);
    const Tensor t = g.tensor(Shape(r, d));
    std::vector<std::size_t> slots(r);
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), g.rng);
    slots.resize(g.integer(1, r));
    const Tensor a = antisymmetrize(t, slots, true);
    CHECK(antisymmetrize(a, slots, true) == a);
    const Tensor s = symmetrize(t, slots, true);
    CHECK(symmetrize(s, slots, true) == s);

    // explicit: Σ_σ sgn σ · (σ on the chosen slots)
    Tensor expect(t.shape()), sym(t.shape());
    for (const auto& p : oracle::all_perms(slots.size())) {
      std::vector<std::size_t> image(slots.size());
      for (std::size_t k = 0; k < slots.size(); ++k) image[k] = slots[p[k]];
      const Tensor moved = permute(t, slot_permutation(r, slots, image));
      expect = add(expect, scale(moved, oracle::inversion_sign(p)));
      sym = add(sym, moved);
    }
    CHECK(antisymmetrize(t, slots, false) == expect);
    CHECK(symmetrize(t, slots, false) == sym);
  }
}

TEST_CASE("permute") {
  const Tensor e = levi_civita(3);
  CHECK(permute(e, {1, 0, 2}) == scale(e, -1));
  CHECK(permute(e, {0, 1, 2}) == e);
  CHECK(is_zero(add(e, scale(e, -1))));

  oracle::Gen g(5);
  const Tensor t = g.tensor({2, 3, 4});
  const Tensor p = permute(t, {2, 0, 1});
  // result(i0, i1, i2) = t(i_{p0}, i_{p1}, i_{p2}) reads t at (i2, i0, i1)
  CHECK(p.shape() == Shape{4, 2, 3});
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 4; ++c) CHECK(p.at({c, a, b}) == t.at({a, b, c}));
}

TEST_CASE("raise and lower") {
  const Metric eta = Metric::lorentzian(1, 3);
  Tensor e1 = Tensor::cube(1, 4);
  e1.at({0}) = 1;
  CHECK(raise_lower(e1, 0, eta, IndexMove::Lower).at({0}) == -1);

  oracle::Gen g(8);
  const Matrix m = [&] {
    Matrix x(3, 3);
    x(0, 0) = 2, x(1, 1) = 3, x(2, 2) = -1, x(0, 1) = x(1, 0) = 1, x(1, 2) = x(2, 1) = Rational(1, 2);
    return x;
  }();
  const Metric gm(m);
  for (int it = 0; it < 10; ++it) {
    const Tensor t = g.tensor({3, 3, 3});
    const std::size_t slot = g.integer(0, 2);
    CHECK(raise_lower(raise_lower(t, slot, gm, IndexMove::Lower), slot, gm, IndexMove::Raise) == t);
  }
}

TEST_CASE("size guard") {
  const std::size_t old = size_guard();
  set_size_guard(1000);
  CHECK_THROWS_AS(Tensor::cube(4, 6), SizeGuardError);
  CHECK_NOTHROW(Tensor::cube(3, 10));
  set_size_guard(old);
  CHECK(Tensor::cube(2, 0).size() == 0);
}

TEST_CASE("shape errors") {
  const std::vector<std::size_t> s{0};
  CHECK_THROWS_AS(contract(Tensor::cube(1, 2), s, Tensor::cube(1, 3), s), ShapeError);
  CHECK_THROWS(permute(Tensor::cube(2, 2), {0, 0}));
}
