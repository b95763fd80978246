#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "nary/rational.hpp"

namespace nary {

class Metric;
class Matrix;

using Shape = std::vector<std::size_t>;
using MultiIndex = std::vector<std::size_t>;

// Entry cap for any dense allocation. Defaults to 3e8.
std::size_t size_guard() noexcept;
void set_size_guard(std::size_t entries) noexcept;
/// Throws SizeGuardError if entries exceeds the cap.
void check_size_guard(std::size_t entries);
/// Product of the shape, saturating; throws SizeGuardError past the cap.
std::size_t checked_volume(const Shape& shape);

/// Dense row-major tensor of exact rationals. Slots and indices are 0-based.
class Tensor {
public:
  Tensor() : Tensor(Shape{}) {}
  explicit Tensor(Shape shape);
  /// rank slots, every one of dimension d.
  static Tensor cube(std::size_t rank, std::size_t d) { return Tensor(Shape(rank, d)); }

  [[nodiscard]] const Shape& shape() const noexcept { return shape_; }
  [[nodiscard]] std::size_t rank() const noexcept { return shape_.size(); }
  [[nodiscard]] std::size_t dim(std::size_t slot) const { return shape_.at(slot); }
  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& strides() const noexcept { return strides_; }

  [[nodiscard]] std::size_t offset(std::span<const std::size_t> index) const;
  [[nodiscard]] MultiIndex unravel(std::size_t flat) const;

  Rational& operator[](std::span<const std::size_t> index) { return data_[offset(index)]; }
  const Rational& operator[](std::span<const std::size_t> index) const { return data_[offset(index)]; }
  Rational& at(std::initializer_list<std::size_t> index) {
    return (*this)[std::span<const std::size_t>(index.begin(), index.size())];
  }
  [[nodiscard]] const Rational& at(std::initializer_list<std::size_t> index) const {
    return (*this)[std::span<const std::size_t>(index.begin(), index.size())];
  }

  Rational& flat(std::size_t i) { return data_[i]; }
  [[nodiscard]] const Rational& flat(std::size_t i) const { return data_[i]; }
  [[nodiscard]] std::span<const Rational> data() const noexcept { return data_; }
  [[nodiscard]] std::span<Rational> data() noexcept { return data_; }

  [[nodiscard]] bool is_zero() const;
  /// Flat offsets of nonzero entries, ascending (i.e. lexicographic index order).
  [[nodiscard]] std::vector<std::size_t> nonzero_offsets() const;

  friend bool operator==(const Tensor&, const Tensor&) = default;

private:
  Shape shape_;
  std::vector<std::size_t> strides_;
  std::vector<Rational> data_;
};

/// Odometer step over a shape; returns false after the last index.
bool next_index(MultiIndex& index, const Shape& shape);

/// Lexicographic list of all permutations of 0..k-1 with their signs.
struct PermutationTable {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<int> signs;
};
const PermutationTable& permutations(std::size_t k);
int permutation_sign(std::span<const std::size_t> p);

Tensor levi_civita(std::size_t d);
/// δ_ab, rank 2.
Tensor kronecker(std::size_t d);
/// δ^{a1…ak}_{b1…bk} = Σ_σ sgn σ Π δ_{a_i b_σ(i)}, rank 2k with the a-block first.
Tensor generalized_delta(std::size_t d, std::size_t k);

/// Sum over paired slots. With a metric, the pair (a, b) is weighted by g_ab.
Tensor contract(const Tensor& t1, std::span<const std::size_t> slots1, const Tensor& t2,
                std::span<const std::size_t> slots2, const Metric* metric = nullptr);
Tensor outer(const Tensor& a, const Tensor& b);

/// result(i_0, …, i_{r-1}) = t(i_{p[0]}, …, i_{p[r-1]}); p is a permutation of all slots.
using SlotPermutation = std::vector<std::size_t>;
Tensor permute(const Tensor& t, const SlotPermutation& p);
/// Full-rank permutation that acts as image[j] on slots[j] and fixes the rest.
SlotPermutation slot_permutation(std::size_t rank, std::span<const std::size_t> slots,
                                 std::span<const std::size_t> image);

/// Σ_k w_k · (P_k t) over full-rank slot permutations, scattered from the
/// nonzero entries of t.
Tensor permutation_sum(const Tensor& t, const std::vector<SlotPermutation>& perms,
                       const std::vector<Rational>& weights);

Tensor antisymmetrize(const Tensor& t, std::span<const std::size_t> slots, bool normalized);
Tensor symmetrize(const Tensor& t, std::span<const std::size_t> slots, bool normalized);

Tensor scale(const Tensor& t, const Rational& c);
Tensor add(const Tensor& a, const Tensor& b);
Tensor subtract(const Tensor& a, const Tensor& b);
bool is_zero(const Tensor& t);

/// result(…a…) = Σ_b m(a, b) t(…b…) on one slot.
Tensor apply_matrix_on_slot(const Tensor& t, std::size_t slot, const Matrix& m);

enum class IndexMove { Lower, Raise };
Tensor raise_lower(const Tensor& t, std::size_t slot, const Metric& metric, IndexMove move);

}  // namespace nary
