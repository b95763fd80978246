#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nary/linalg.hpp"

namespace nary {

/// Symmetric non-degenerate bilinear form with its inverse cached.
class Metric {
public:
  /// Throws InvalidArgument if g is not symmetric, SingularError if degenerate.
  explicit Metric(Matrix g);

  static Metric euclidean(std::size_t d);
  static Metric diagonal(const std::vector<Rational>& entries);
  /// p entries −1 followed by q entries +1.
  static Metric lorentzian(std::size_t p, std::size_t q);

  [[nodiscard]] std::size_t dim() const noexcept { return g_.rows(); }
  [[nodiscard]] const Matrix& matrix() const noexcept { return g_; }
  [[nodiscard]] const Matrix& inverse() const noexcept { return inv_; }
  [[nodiscard]] bool is_diagonal() const;
  [[nodiscard]] bool is_identity() const;
  /// Diagonal ±1 entries, if the metric has that form.
  [[nodiscard]] std::optional<std::vector<int>> signature() const;

  friend bool operator==(const Metric& a, const Metric& b) { return a.g_ == b.g_; }

private:
  Matrix g_;
  Matrix inv_;
};

Metric direct_sum(const Metric& a, const Metric& b);

}  // namespace nary
