#include "nary/metric.hpp"

#include "nary/error.hpp"

namespace nary {

Metric::Metric(Matrix g) : g_(std::move(g)) {
  if (!g_.is_square()) throw InvalidArgument("metric must be a square matrix");
  if (!g_.is_symmetric()) throw InvalidArgument("metric must be symmetric");
  inv_ = nary::inverse(g_);
}

Metric Metric::euclidean(std::size_t d) { return Metric(Matrix::identity(d)); }

Metric Metric::diagonal(const std::vector<Rational>& entries) {
  Matrix g(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
  return Metric(std::move(g));
}

Metric Metric::lorentzian(std::size_t p, std::size_t q) {
  std::vector<Rational> diag(p, Rational(-1));
  diag.insert(diag.end(), q, Rational(1));
  return diagonal(diag);
}

bool Metric::is_diagonal() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (i != j && !g_(i, j).is_zero()) return false;
  return true;
}

bool Metric::is_identity() const { return g_ == Matrix::identity(dim()); }

std::optional<std::vector<int>> Metric::signature() const {
  if (!is_diagonal()) return std::nullopt;
  std::vector<int> sig;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (g_(i, i) == Rational(1))
      sig.push_back(1);
    else if (g_(i, i) == Rational(-1))
      sig.push_back(-1);
    else
      return std::nullopt;
  }
  return sig;
}

Metric direct_sum(const Metric& a, const Metric& b) {
  const std::size_t n = a.dim() + b.dim();
  Matrix g(n, n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) g(i, j) = a.matrix()(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) g(a.dim() + i, a.dim() + j) = b.matrix()(i, j);
  return Metric(std::move(g));
}

}  // namespace nary
