#include "nary/construct.hpp"

#include <algorithm>
#include <limits>
#include <regex>
#include <unordered_map>

#include "nary/derivation.hpp"

namespace nary {

namespace {

void require(const CheckReport& r, const std::string& what) {
  if (!r.pass) throw PreconditionError(what + " fails " + r.property + (r.detail.empty() ? "" : " (" + r.detail + ")"), r);
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Nonzero entries of the Schouten residual keyed by flat (b…, s, a…).
std::unordered_map<std::size_t, Rational> schouten_terms(const NaryAlgebra& h, const Metric& metric) {
  const std::size_t d = h.dim, m = h.arity;
  if (d < 2) throw ShapeError("schouten: dimension must be at least 2");
  if (metric.dim() != d) throw ShapeError("schouten: metric dimension differs");
  const std::size_t n = d - 1;

  // P(b…, l, s) = h_{b…}^l_s: output lowered, last input raised.
  const Tensor P = raise_lower(raise_lower(h.f, m, metric, IndexMove::Lower), m - 1, metric, IndexMove::Raise);

  // ε entries grouped by their last index.
  struct Eps {
    MultiIndex a;
    int sign;
  };
  std::vector<std::vector<Eps>> eps(d);
  const PermutationTable& table = permutations(d);
  for (std::size_t p = 0; p < table.perms.size(); ++p) {
    const auto& perm = table.perms[p];
    eps[perm[n]].push_back(Eps{MultiIndex(perm.begin(), perm.begin() + n), table.signs[p]});
  }

  const std::size_t a_span = ipow(d, n);
  auto a_flat = [d](const MultiIndex& a) {
    std::size_t off = 0;
    for (std::size_t x : a) off = off * d + x;
    return off;
  };
  auto key = [&](std::size_t b, std::size_t s, std::size_t a) { return (b * d + s) * a_span + a; };

  std::unordered_map<std::size_t, Rational> out;
  std::vector<Rational> trace(ipow(d, m - 1));
  for (std::size_t off : P.nonzero_offsets()) {
    const std::size_t t = off % d, l = (off / d) % d, b = off / (d * d);
    const Rational& v = P.flat(off);
    if (l == t) trace[b] += v;
    for (const Eps& e : eps[l]) {
      const Rational w = v * Rational(e.sign);
      // h_b^l_t ε_{a l} with s = t.
      out[key(b, t, a_flat(e.a))] += w;
      // −h_b^l_{a_i} ε_{a_1…s…a_n l}: here a_i = t and s sits in slot i of e.a.
      for (std::size_t i = 0; i < n; ++i) {
        MultiIndex a = e.a;
        const std::size_t s = a[i];
        a[i] = t;
        out[key(b, s, a_flat(a))] -= w;
      }
    }
  }
  for (std::size_t b = 0; b < trace.size(); ++b) {
    if (trace[b].is_zero()) continue;
    for (std::size_t s = 0; s < d; ++s)
      for (const Eps& e : eps[s]) out[key(b, s, a_flat(e.a))] -= trace[b] * Rational(e.sign);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

NaryAlgebra associated_leibniz(const NaryAlgebra& L1, const NaryAlgebra& L2, const Metric& metric,
                               const ConstructionOptions& opts) {
  if (L1.dim != L2.dim) throw ShapeError("associated_leibniz: algebras have different dimensions");
  if (metric.dim() != L1.dim) throw ShapeError("associated_leibniz: metric dimension differs");
  const std::size_t n = L1.arity, m = L2.arity;
  if (m < 3) throw ShapeError("associated_leibniz: the second algebra needs arity at least 3");
  if (!opts.force) {
    require(check_symmetry_property(L2, &metric), "second algebra");
    require(check_metricity(L2, &metric), "second algebra");
    require(check_filippov(L2), "second algebra");
    require(check_derivation(L1, L2), "derivation action of the second algebra on the first");
  }

  // F_{a…}^{uv}: last input of f raised. H_{b… d v u}: output of h lowered.
  const Tensor F = raise_lower(L1.f, n - 1, metric, IndexMove::Raise);
  const Tensor H = raise_lower(L2.f, m, metric, IndexMove::Lower);
  const std::size_t sf[] = {n - 1, n};
  const std::size_t sh[] = {m, m - 1};
  Tensor g = contract(F, sf, H, sh);
  if (!opts.prefactor.is_one()) g = scale(g, opts.prefactor);
  const std::size_t arity = n + m - 3;
  g = raise_lower(g, arity, metric, IndexMove::Raise);

  NaryAlgebra out("assoc(" + L1.name + "," + L2.name + ")", L1.dim, arity, std::move(g), metric);
  out.unverified = opts.force;
  return out;
}

NaryAlgebra corollary_self(const NaryAlgebra& L, const Metric& metric, const ConstructionOptions& opts) {
  if (!opts.force) {
    require(check_metricity(L, &metric), "input algebra");
    require(check_skew(L, 0, L.arity - 1), "input algebra");
    require(check_symmetry_property(L, &metric), "input algebra");
  }
  NaryAlgebra out = associated_leibniz(L, L, metric, opts);
  out.name = "self(" + L.name + ")";
  return out;
}

NaryAlgebra corollary_cs3(const NaryAlgebra& L1, const NaryAlgebra& cs3, const Metric& metric,
                          const ConstructionOptions& opts) {
  if (cs3.arity != 3) throw ShapeError("corollary_cs3: second algebra must be ternary");
  if (!opts.force) {
    require(check_metricity(cs3, &metric), "ternary algebra");
    require(check_symmetry_property(cs3, &metric), "ternary algebra");
    require(check_skew(L1, 0, L1.arity - 1), "first algebra");
  }
  NaryAlgebra out = associated_leibniz(L1, cs3, metric, opts);
  out.name = "cs3(" + L1.name + "," + cs3.name + ")";
  return out;
}

Tensor schouten_residual(const NaryAlgebra& h, const Metric& metric) {
  const std::size_t d = h.dim;
  const auto terms = schouten_terms(h, metric);
  Tensor out = Tensor::cube(h.arity - 1 + 1 + (d - 1), d);
  for (const auto& [k, v] : terms) out.flat(k) = v;
  return out;
}

CheckReport check_schouten(const NaryAlgebra& h, const Metric& metric) {
  const auto terms = schouten_terms(h, metric);
  if (terms.empty()) return passed("schouten");
  std::size_t k = std::numeric_limits<std::size_t>::max();
  for (const auto& kv : terms) k = std::min(k, kv.first);
  const std::size_t d = h.dim, rank = h.arity + d - 1;
  MultiIndex index(rank);
  std::size_t rest = k;
  for (std::size_t i = rank; i-- > 0;) {
    index[i] = rest % d;
    rest /= d;
  }
  return failed("schouten", Witness{index, terms.at(k)});
}

NaryAlgebra triple_from_lie(const std::vector<EndoMatrix>& generators, const Matrix& form, const Metric& metric,
                            std::string name) {
  const std::size_t d = metric.dim();
  if (generators.size() != d * d) throw ShapeError("triple_from_lie: need one generator per index pair");
  if (form.rows() != d * d || form.cols() != d * d) throw ShapeError("triple_from_lie: form must be d²×d²");
  if (!form.is_symmetric()) throw InvalidArgument("triple_from_lie: form is not symmetric");
  const Matrix& G = metric.matrix();
  for (const auto& M : generators) {
    if (M.rows() != d || M.cols() != d) throw ShapeError("triple_from_lie: generator has the wrong size");
    if (!(transpose(M) * G + G * M).is_zero())
      throw InvalidArgument("triple_from_lie: generator does not preserve the metric");
  }
  Tensor g = Tensor::cube(4, d);
  for (std::size_t i = 0; i < d * d; ++i)
    for (std::size_t j = 0; j < d * d; ++j) g.at({i / d, i % d, j / d, j % d}) = form(i, j);
  g = raise_lower(g, 3, metric, IndexMove::Raise);
  return NaryAlgebra(std::move(name), d, 3, std::move(g), metric);
}

std::vector<EndoMatrix> rotation_generators(std::size_t d) {
  std::vector<EndoMatrix> out;
  for (std::size_t a1 = 0; a1 < d; ++a1) {
    for (std::size_t a2 = 0; a2 < d; ++a2) {
      Matrix L(d, d);
      if (a1 != a2) {
        L(a2, a1) = -1;  // L e_{a1} = −e_{a2}
        L(a1, a2) = 1;   // L e_{a2} = +e_{a1}
      }
      out.push_back(std::move(L));
    }
  }
  return out;
}

Matrix killing_form(const std::vector<EndoMatrix>& generators, const Rational& prefactor) {
  const std::size_t k = generators.size();
  Matrix out(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      out(i, j) = prefactor * trace_of_product(generators[i], generators[j]);
      out(j, i) = out(i, j);
    }
  return out;
}

Matrix epsilon_form() {
  const Tensor eps = levi_civita(4);
  Matrix out(16, 16);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) out(i, j) = eps.at({i / 4, i % 4, j / 4, j % 4});
  return out;
}

NaryAlgebra cs_so4() {
  const std::size_t d = 4;
  Tensor f = Tensor::cube(4, d);
  for (std::size_t a1 = 0; a1 < d; ++a1)
    for (std::size_t a2 = 0; a2 < d; ++a2) {
      if (a1 == a2) continue;
      f.at({a1, a2, a1, a2}) = -1;
      f.at({a1, a2, a2, a1}) = 1;
    }
  return NaryAlgebra("cs-so4", d, 3, std::move(f), Metric::euclidean(d));
}

NaryAlgebra builtin(const std::string& name) {
  static const std::regex simple(R"(A([0-9]+))");
  static const std::regex lorentz(R"(A([0-9]+)\+([0-9]+))");
  static const std::regex zero(R"(zero\(([0-9]+),([0-9]+)\))");
  std::smatch m;
  if (std::regex_match(name, m, simple)) {
    const std::size_t d = std::stoul(m[1]);
    if (d < 3 || d > 16) throw InvalidArgument("builtin: A{k} needs 3 <= k");
    return simple_filippov(d - 1, std::vector<int>(d, 1));
  }
  if (std::regex_match(name, m, lorentz)) {
    const std::size_t p = std::stoul(m[1]), q = std::stoul(m[2]);
    if (p + q < 3 || p + q > 16) throw InvalidArgument("builtin: A{p}+{q} needs p+q >= 3");
    std::vector<int> sig(p, -1);
    sig.insert(sig.end(), q, 1);
    return simple_filippov(p + q - 1, sig);
  }
  if (std::regex_match(name, m, zero)) {
    const std::size_t d = std::stoul(m[1]), n = std::stoul(m[2]);
    if (n < 2) throw InvalidArgument("builtin: zero(d,n) needs n >= 2");
    return zero_algebra(d, n);
  }
  if (name == "cs-so4") return cs_so4();
  if (name == "a4-sum-a4") {
    NaryAlgebra a4 = builtin("A4");
    NaryAlgebra out = direct_sum(a4, a4);
    out.name = name;
    return out;
  }
  if (name == "seven-leibniz") {
    NaryAlgebra out = corollary_cs3(builtin("A8"), builtin("a4-sum-a4"), Metric::euclidean(8));
    out.name = name;
    return out;
  }
  throw InvalidArgument("unknown builtin algebra '" + name + "'");
}

}  // namespace nary
