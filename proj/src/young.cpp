#include "nary/young.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "nary/derivation.hpp"
#include "nary/error.hpp"

namespace nary {

namespace {

// χ via beta-sets: removing a rim hook of length h moves one bead from β to
// β−h; the sign counts beads jumped over.
std::int64_t mn(const std::vector<std::size_t>& beta, const Partition& mu, std::size_t pos,
                std::map<std::pair<std::vector<std::size_t>, std::size_t>, std::int64_t>& memo) {
  if (pos == mu.size()) return 1;
  const auto key = std::make_pair(beta, pos);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const std::size_t h = mu[pos];
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] < h) continue;
    const std::size_t target = beta[i] - h;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (std::size_t b : beta)
      if (b > target && b < beta[i]) ++jumped;
    std::vector<std::size_t> next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    const std::int64_t sub = mn(next, mu, pos + 1, memo);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  memo.emplace(key, total);
  return total;
}

void check_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && p[i] > p[i - 1]) throw InvalidArgument("partition must be non-increasing");
  }
}

std::size_t total(const Partition& p) { return std::accumulate(p.begin(), p.end(), std::size_t{0}); }

Rational binomial(std::size_t n, std::size_t k) {
  if (k > n) return Rational();
  Rational r = 1;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * Rational(static_cast<std::int64_t>(n - k + i)) / Rational(static_cast<std::int64_t>(i));
  return r;
}

}  // namespace

Partition YoungShape::partition() const {
  if (2 * r > l) throw InvalidArgument("Young shape needs r <= l/2");
  Partition p(r, 2);
  p.insert(p.end(), l - 2 * r, 1);
  return p;
}

Tableau Tableau::canonical(const YoungShape& shape) {
  (void)shape.partition();  // validates r <= l/2
  Tableau t;
  for (std::size_t i = 0; i < shape.l - shape.r; ++i) t.col1.push_back(i);
  for (std::size_t i = shape.l - shape.r; i < shape.l; ++i) t.col2.push_back(i);
  return t;
}

std::vector<Partition> partitions_of(std::size_t l) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(l, l);
  return out;
}

Partition cycle_type(std::span<const std::size_t> p) {
  std::vector<bool> seen(p.size(), false);
  Partition out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::int64_t character(const Partition& shape, const Partition& ct) {
  check_partition(shape);
  Partition mu = ct;
  std::sort(mu.begin(), mu.end(), std::greater<>());
  check_partition(mu);
  if (total(shape) != total(mu)) throw InvalidArgument("character: shape and cycle type have different sizes");
  static std::mutex mu_lock;
  static std::map<std::pair<Partition, Partition>, std::int64_t> cache;
  std::lock_guard lock(mu_lock);
  if (auto it = cache.find({shape, mu}); it != cache.end()) return it->second;
  std::vector<std::size_t> beta(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) beta[i] = shape[i] + (shape.size() - 1 - i);
  std::map<std::pair<std::vector<std::size_t>, std::size_t>, std::int64_t> memo;
  const std::int64_t value = mn(beta, mu, 0, memo);
  cache.emplace(std::make_pair(shape, mu), value);
  return value;
}

std::int64_t standard_tableaux_count(const Partition& shape) {
  check_partition(shape);
  Rational count = 1;
  std::size_t n = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (std::size_t j = 0; j < shape[i]; ++j) {
      std::size_t below = 0;
      for (std::size_t k = i + 1; k < shape.size() && shape[k] > j; ++k) ++below;
      const std::size_t hook = (shape[i] - j - 1) + below + 1;
      ++n;
      count = count * Rational(static_cast<std::int64_t>(n)) / Rational(static_cast<std::int64_t>(hook));
    }
  }
  return count.small_numerator();
}

std::int64_t gl_dimension(const YoungShape& shape, std::size_t d) {
  const std::size_t l = shape.l, r = shape.r;
  (void)shape.partition();  // validates r <= l/2
  if (l - r > d) return 0;
  const Rational v = binomial(d + 1, r) * binomial(d, l - r) * Rational(static_cast<std::int64_t>(l - 2 * r + 1)) /
                     Rational(static_cast<std::int64_t>(l - r + 1));
  if (!v.is_integer() || v.is_big()) throw Error("gl_dimension: result is not a machine integer");
  return v.small_numerator();
}

Tensor isotypic_project(const Tensor& t, std::span<const std::size_t> slots, const Partition& shape,
                        const ProjectionOptions& opts) {
  check_partition(shape);
  const std::size_t l = slots.size();
  if (total(shape) != l) throw ShapeError("isotypic_project: shape size differs from slot count");
  if (l > 10) throw BudgetError("isotypic_project: more than 10 slots");
  const PermutationTable& table = permutations(l);
  const std::size_t nnz = t.nonzero_offsets().size();
  if (!opts.allow_large && nnz > 0 && table.perms.size() > opts.budget / nnz) {
    throw BudgetError("isotypic_project: " + std::to_string(table.perms.size()) + " permutations on " +
                      std::to_string(nnz) + " nonzero entries exceeds the budget");
  }
  const Rational dim = Rational(character(shape, Partition(l, 1)));
  Rational fact = 1;
  for (std::size_t i = 2; i <= l; ++i) fact *= Rational(static_cast<std::int64_t>(i));
  std::vector<SlotPermutation> perms;
  std::vector<Rational> weights;
  std::vector<std::size_t> image(l);
  for (const auto& p : table.perms) {
    const std::int64_t chi = character(shape, cycle_type(p));
    if (chi == 0) continue;
    for (std::size_t j = 0; j < l; ++j) image[j] = slots[p[j]];
    perms.push_back(slot_permutation(t.rank(), slots, image));
    weights.push_back(dim * Rational(chi) / fact);
  }
  return permutation_sum(t, perms, weights);
}

Tensor isotypic_project(const Tensor& t, std::span<const std::size_t> slots, const YoungShape& shape,
                        const ProjectionOptions& opts) {
  return isotypic_project(t, slots, shape.partition(), opts);
}

Tensor primitive_project(const Tensor& t, std::span<const std::size_t> slots, const Tableau& tab) {
  const std::size_t l = slots.size();
  if (tab.col1.size() + tab.col2.size() != l) throw ShapeError("primitive_project: tableau size differs from slot count");
  if (tab.col2.size() > tab.col1.size()) throw ShapeError("primitive_project: second column longer than the first");
  std::vector<bool> seen(l, false);
  for (const auto* col : {&tab.col1, &tab.col2})
    for (std::size_t x : *col) {
      if (x >= l || seen[x]) throw ShapeError("primitive_project: tableau filling is not a bijection");
      seen[x] = true;
    }
  Tensor out = t;
  for (std::size_t i = 0; i < tab.col2.size(); ++i) {
    const std::size_t pair[] = {slots[tab.col1[i]], slots[tab.col2[i]]};
    out = symmetrize(out, pair, true);
  }
  for (const auto* col : {&tab.col1, &tab.col2}) {
    std::vector<std::size_t> s;
    for (std::size_t x : *col) s.push_back(slots[x]);
    out = antisymmetrize(out, s, true);
  }
  return out;
}

Classification classify_bracket(const NaryAlgebra& L, const ProjectionOptions& opts) {
  Classification c;
  c.l = L.arity;
  std::vector<std::size_t> slots(L.arity);
  std::iota(slots.begin(), slots.end(), 0);
  for (std::size_t r = 0; 2 * r <= c.l; ++r) {
    if (c.l - r > L.dim) continue;
    const YoungShape shape{c.l, r};
    const bool nonzero = !isotypic_project(L.f, slots, shape, opts).is_zero();
    c.components.push_back(Component{r, nonzero, gl_dimension(shape, L.dim)});
  }
  return c;
}

CheckReport is_lie_lple(const NaryAlgebra& L, const ProjectionOptions& opts) {
  const std::size_t l = L.arity;
  if (l < 3 || l % 2 == 0) throw InvalidArgument("lple: arity " + std::to_string(l) + " is not 2n-3 with n >= 3");
  const std::size_t n = (l + 3) / 2;
  auto relabel = [](CheckReport r, const std::string& what) {
    r.property = "lple";
    r.detail = r.detail.empty() ? what : what + ": " + r.detail;
    return r;
  };
  if (auto r = check_skew(L, 0, n - 1); !r.pass) return relabel(r, "skew");
  if (auto r = check_skew(L, n - 1, l); !r.pass) return relabel(r, "skew");
  if (auto r = check_filippov(L); !r.pass) return relabel(r, "filippov");
  std::vector<std::size_t> slots(l);
  std::iota(slots.begin(), slots.end(), 0);
  for (std::size_t r = 0; 2 * r <= l; ++r) {
    if (r == n - 2 || l - r > L.dim) continue;
    const Tensor p = isotypic_project(L.f, slots, YoungShape{l, r}, opts);
    if (auto w = first_nonzero(p)) return failed("lple", *w, "component r=" + std::to_string(r) + " present");
  }
  return passed("lple", "n = " + std::to_string(n));
}

}  // namespace nary
