#include "nary/tensor.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "nary/error.hpp"
#include "nary/linalg.hpp"
#include "nary/metric.hpp"

namespace nary {

namespace {

std::atomic<std::size_t> g_size_guard{300'000'000};

void check_slots(const Tensor& t, std::span<const std::size_t> slots, const char* what) {
  std::vector<bool> seen(t.rank(), false);
  for (std::size_t s : slots) {
    if (s >= t.rank()) throw ShapeError(std::string(what) + ": slot out of range");
    if (seen[s]) throw ShapeError(std::string(what) + ": repeated slot");
    seen[s] = true;
  }
}

std::size_t common_dim(const Tensor& t, std::span<const std::size_t> slots, const char* what) {
  if (slots.empty()) return 0;
  const std::size_t d = t.dim(slots[0]);
  for (std::size_t s : slots)
    if (t.dim(s) != d) throw ShapeError(std::string(what) + ": slot dimensions differ");
  return d;
}

Rational factorial(std::size_t k) {
  Rational f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= Rational(static_cast<std::int64_t>(i));
  return f;
}

// Shared body of (anti)symmetrization. Evaluates the signed permutation sum
// only at index tuples whose designated slots are sorted (strictly for the
// antisymmetric case) and scatters the value to every permuted position.
Tensor project_slots(const Tensor& t, std::span<const std::size_t> slots, bool normalized,
                     bool alternating) {
  const char* what = alternating ? "antisymmetrize" : "symmetrize";
  check_slots(t, slots, what);
  const std::size_t d = common_dim(t, slots, what);
  const std::size_t k = slots.size();
  Tensor out(t.shape());
  if (k <= 1) return t;
  if (alternating && k > d) return out;

  const PermutationTable& table = permutations(k);
  const Rational norm = normalized ? Rational(1) / factorial(k) : Rational(1);
  const auto& strides = t.strides();

  MultiIndex idx(t.rank(), 0);
  std::vector<std::size_t> vals(k);
  if (t.size() == 0) return out;
  do {
    bool sorted = true;
    for (std::size_t j = 0; j + 1 < k; ++j) {
      const std::size_t a = idx[slots[j]], b = idx[slots[j + 1]];
      if (alternating ? a >= b : a > b) {
        sorted = false;
        break;
      }
    }
    if (!sorted) continue;
    const std::size_t base_off = t.offset(idx);
    std::size_t base = base_off;
    for (std::size_t j = 0; j < k; ++j) {
      vals[j] = idx[slots[j]];
      base -= vals[j] * strides[slots[j]];
    }
    Rational v;
    for (std::size_t p = 0; p < table.perms.size(); ++p) {
      std::size_t off = base;
      for (std::size_t j = 0; j < k; ++j) off += vals[table.perms[p][j]] * strides[slots[j]];
      const Rational& x = t.flat(off);
      if (x.is_zero()) continue;
      if (alternating && table.signs[p] < 0)
        v -= x;
      else
        v += x;
    }
    if (v.is_zero()) continue;
    v *= norm;
    for (std::size_t p = 0; p < table.perms.size(); ++p) {
      std::size_t off = base;
      for (std::size_t j = 0; j < k; ++j) off += vals[table.perms[p][j]] * strides[slots[j]];
      out.flat(off) = (alternating && table.signs[p] < 0) ? -v : v;
    }
  } while (next_index(idx, t.shape()));
  return out;
}

}  // namespace

std::size_t size_guard() noexcept { return g_size_guard.load(); }
void set_size_guard(std::size_t entries) noexcept { g_size_guard.store(entries); }

void check_size_guard(std::size_t entries) {
  if (entries > size_guard()) {
    throw SizeGuardError("object of " + std::to_string(entries) + " entries exceeds the size guard of " +
                         std::to_string(size_guard()));
  }
}

std::size_t checked_volume(const Shape& shape) {
  std::size_t v = 1;
  for (std::size_t s : shape) {
    if (s == 0) return 0;
  }
  for (std::size_t s : shape) {
    if (v > size_guard() / s) {
      throw SizeGuardError("tensor shape exceeds the size guard of " + std::to_string(size_guard()) +
                           " entries");
    }
    v *= s;
  }
  check_size_guard(v);
  return v;
}

Tensor::Tensor(Shape shape) : shape_(std::move(shape)), strides_(shape_.size(), 1) {
  const std::size_t n = checked_volume(shape_);
  for (std::size_t i = shape_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * shape_[i];
  data_.resize(n);
}

std::size_t Tensor::offset(std::span<const std::size_t> index) const {
  if (index.size() != shape_.size()) throw ShapeError("index rank does not match tensor rank");
  std::size_t off = 0;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] >= shape_[i]) throw ShapeError("index out of range");
    off += index[i] * strides_[i];
  }
  return off;
}

MultiIndex Tensor::unravel(std::size_t flat) const {
  MultiIndex idx(shape_.size());
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    idx[i] = flat / strides_[i];
    flat %= strides_[i];
  }
  return idx;
}

bool Tensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q.is_zero(); });
}

std::vector<std::size_t> Tensor::nonzero_offsets() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!data_[i].is_zero()) out.push_back(i);
  return out;
}

bool next_index(MultiIndex& index, const Shape& shape) {
  for (std::size_t i = index.size(); i-- > 0;) {
    if (++index[i] < shape[i]) return true;
    index[i] = 0;
  }
  return false;
}

int permutation_sign(std::span<const std::size_t> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

const PermutationTable& permutations(std::size_t k) {
  static std::mutex mu;
  static std::map<std::size_t, PermutationTable> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  if (k > 10) throw BudgetError("permutation tables are limited to 10 elements");
  PermutationTable table;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    table.perms.push_back(p);
    table.signs.push_back(permutation_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return cache.emplace(k, std::move(table)).first->second;
}

Tensor levi_civita(std::size_t d) {
  if (d == 0) throw ShapeError("levi_civita: dimension must be positive");
  Tensor eps = Tensor::cube(d, d);
  const PermutationTable& table = permutations(d);
  for (std::size_t p = 0; p < table.perms.size(); ++p) eps[table.perms[p]] = table.signs[p];
  return eps;
}

Tensor kronecker(std::size_t d) {
  Tensor delta = Tensor::cube(2, d);
  for (std::size_t a = 0; a < d; ++a) delta.at({a, a}) = 1;
  return delta;
}

Tensor generalized_delta(std::size_t d, std::size_t k) {
  Tensor out = Tensor::cube(2 * k, d);
  if (k > d) return out;
  const PermutationTable& table = permutations(k);
  // Walk injective a-tuples; the b-tuple is a permutation of the a-tuple.
  MultiIndex a(k, 0), full(2 * k);
  const Shape sh(k, d);
  do {
    bool injective = true;
    for (std::size_t i = 0; i < k && injective; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (a[i] == a[j]) {
          injective = false;
          break;
        }
    if (!injective) continue;
    for (std::size_t p = 0; p < table.perms.size(); ++p) {
      for (std::size_t i = 0; i < k; ++i) {
        full[i] = a[i];
        full[k + table.perms[p][i]] = a[i];
      }
      out[full] = table.signs[p];
    }
  } while (k > 0 && next_index(a, sh));
  if (k == 0) out.flat(0) = 1;
  return out;
}

Tensor permute(const Tensor& t, const SlotPermutation& p) {
  if (p.size() != t.rank()) throw ShapeError("permute: permutation length differs from rank");
  check_slots(t, p, "permute");
  Shape shape(t.rank());
  for (std::size_t s = 0; s < t.rank(); ++s) shape[s] = t.dim(p[s]);
  Tensor out(shape);
  if (out.size() == 0) return out;
  // Source stride seen by each result slot.
  std::vector<std::size_t> src_stride(t.rank());
  for (std::size_t s = 0; s < t.rank(); ++s) src_stride[s] = t.strides()[p[s]];
  MultiIndex idx(t.rank(), 0);
  std::size_t flat = 0;
  do {
    std::size_t off = 0;
    for (std::size_t s = 0; s < idx.size(); ++s) off += idx[s] * src_stride[s];
    out.flat(flat++) = t.flat(off);
  } while (next_index(idx, shape));
  return out;
}

SlotPermutation slot_permutation(std::size_t rank, std::span<const std::size_t> slots,
                                 std::span<const std::size_t> image) {
  if (slots.size() != image.size()) throw ShapeError("slot_permutation: length mismatch");
  SlotPermutation p(rank);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t j = 0; j < slots.size(); ++j) {
    if (slots[j] >= rank || image[j] >= rank) throw ShapeError("slot_permutation: slot out of range");
    p[slots[j]] = image[j];
  }
  std::vector<std::size_t> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < rank; ++i)
    if (sorted[i] != i) throw ShapeError("slot_permutation: not a bijection on the slots");
  return p;
}

Tensor contract(const Tensor& t1, std::span<const std::size_t> slots1, const Tensor& t2,
                std::span<const std::size_t> slots2, const Metric* metric) {
  if (slots1.size() != slots2.size()) throw ShapeError("contract: slot lists differ in length");
  check_slots(t1, slots1, "contract");
  check_slots(t2, slots2, "contract");
  for (std::size_t j = 0; j < slots1.size(); ++j) {
    if (t1.dim(slots1[j]) != t2.dim(slots2[j])) throw ShapeError("contract: paired slot dimensions differ");
    if (metric && metric->dim() != t1.dim(slots1[j])) throw ShapeError("contract: metric dimension");
  }

  const Tensor* right = &t2;
  Tensor weighted;
  if (metric && !metric->is_identity()) {
    weighted = t2;
    for (std::size_t s : slots2) weighted = apply_matrix_on_slot(weighted, s, metric->matrix());
    right = &weighted;
  }

  auto order = [](const Tensor& t, std::span<const std::size_t> contracted, bool contracted_first) {
    std::vector<bool> used(t.rank(), false);
    for (std::size_t s : contracted) used[s] = true;
    SlotPermutation p;
    if (contracted_first) p.assign(contracted.begin(), contracted.end());
    for (std::size_t s = 0; s < t.rank(); ++s)
      if (!used[s]) p.push_back(s);
    if (!contracted_first) p.insert(p.end(), contracted.begin(), contracted.end());
    return p;
  };
  const SlotPermutation p1 = order(t1, slots1, false);
  const SlotPermutation p2 = order(*right, slots2, true);
  const Tensor a = permute(t1, p1);
  const Tensor b = permute(*right, p2);

  Shape shape;
  std::size_t inner = 1;
  for (std::size_t j = 0; j < t1.rank() - slots1.size(); ++j) shape.push_back(a.dim(j));
  for (std::size_t j = slots2.size(); j < b.rank(); ++j) shape.push_back(b.dim(j));
  for (std::size_t s : slots1) inner *= t1.dim(s);
  Tensor out(shape);
  if (out.size() == 0 || inner == 0) return out;
  const std::size_t rows = out.size() == 0 ? 0 : a.size() / inner;
  const std::size_t cols = b.size() / inner;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      const Rational& x = a.flat(i * inner + k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        const Rational& y = b.flat(k * cols + j);
        if (!y.is_zero()) out.flat(i * cols + j).add_product(x, y);
      }
    }
  }
  return out;
}

Tensor outer(const Tensor& a, const Tensor& b) {
  Shape shape = a.shape();
  shape.insert(shape.end(), b.shape().begin(), b.shape().end());
  Tensor out(shape);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.flat(i).is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b.flat(j).is_zero()) out.flat(i * b.size() + j) = a.flat(i) * b.flat(j);
  }
  return out;
}

Tensor permutation_sum(const Tensor& t, const std::vector<SlotPermutation>& perms,
                       const std::vector<Rational>& weights) {
  if (perms.size() != weights.size()) throw ShapeError("permutation_sum: weight count");
  for (const auto& p : perms) {
    if (p.size() != t.rank()) throw ShapeError("permutation_sum: permutation length differs from rank");
    check_slots(t, p, "permutation_sum");
    for (std::size_t s = 0; s < t.rank(); ++s)
      if (t.dim(p[s]) != t.dim(s)) throw ShapeError("permutation_sum: permuted slots differ in dimension");
  }
  Tensor out(t.shape());
  MultiIndex j;
  for (std::size_t off : t.nonzero_offsets()) {
    j = t.unravel(off);
    const Rational& x = t.flat(off);
    for (std::size_t k = 0; k < perms.size(); ++k) {
      if (weights[k].is_zero()) continue;
      // (P t)(i) = t(j) where j[s] = i[p[s]], i.e. i[p[s]] = j[s].
      std::size_t target = 0;
      for (std::size_t s = 0; s < j.size(); ++s) target += j[s] * t.strides()[perms[k][s]];
      out.flat(target).add_product(weights[k], x);
    }
  }
  return out;
}

Tensor antisymmetrize(const Tensor& t, std::span<const std::size_t> slots, bool normalized) {
  return project_slots(t, slots, normalized, true);
}

Tensor symmetrize(const Tensor& t, std::span<const std::size_t> slots, bool normalized) {
  return project_slots(t, slots, normalized, false);
}

Tensor scale(const Tensor& t, const Rational& c) {
  Tensor out = t;
  if (c.is_one()) return out;
  for (auto& x : out.data()) x *= c;
  return out;
}

Tensor add(const Tensor& a, const Tensor& b) {
  if (a.shape() != b.shape()) throw ShapeError("add: shapes differ");
  Tensor out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out.flat(i) += b.flat(i);
  return out;
}

Tensor subtract(const Tensor& a, const Tensor& b) {
  if (a.shape() != b.shape()) throw ShapeError("subtract: shapes differ");
  Tensor out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out.flat(i) -= b.flat(i);
  return out;
}

bool is_zero(const Tensor& t) { return t.is_zero(); }

Tensor apply_matrix_on_slot(const Tensor& t, std::size_t slot, const Matrix& m) {
  if (slot >= t.rank()) throw ShapeError("apply_matrix_on_slot: slot out of range");
  if (m.rows() != t.dim(slot) || m.cols() != t.dim(slot)) throw ShapeError("apply_matrix_on_slot: dimension");
  const std::size_t d = t.dim(slot);
  const std::size_t stride = t.strides()[slot];
  Tensor out(t.shape());
  // Split offsets as outer * (d * stride) + a * stride + inner.
  const std::size_t block = d * stride;
  const std::size_t outer_count = d == 0 ? 0 : t.size() / block;
  for (std::size_t o = 0; o < outer_count; ++o) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t in = 0; in < stride; ++in) {
        const Rational& x = t.flat(o * block + b * stride + in);
        if (x.is_zero()) continue;
        for (std::size_t a = 0; a < d; ++a) {
          const Rational& g = m(a, b);
          if (!g.is_zero()) out.flat(o * block + a * stride + in).add_product(g, x);
        }
      }
    }
  }
  return out;
}

Tensor raise_lower(const Tensor& t, std::size_t slot, const Metric& metric, IndexMove move) {
  if (slot >= t.rank()) throw ShapeError("raise_lower: slot out of range");
  if (t.dim(slot) != metric.dim()) throw ShapeError("raise_lower: metric dimension differs from slot");
  if (metric.is_identity()) return t;
  return apply_matrix_on_slot(t, slot, move == IndexMove::Lower ? metric.matrix() : metric.inverse());
}

}  // namespace nary
