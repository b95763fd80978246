#include "nary/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nary/error.hpp"

namespace nary {

using nlohmann::json;

namespace {

std::string quote(const std::string& s) { return json(s).dump(); }

std::string index_list(const MultiIndex& idx, std::size_t from, std::size_t to) {
  std::string out = "[";
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out += ", ";
    out += std::to_string(idx[i] + 1);
  }
  return out + "]";
}

void only_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (k == a) ok = true;
    if (!ok) throw ParseError(std::string(what) + ": unknown key '" + k + "'");
  }
}

const json& need(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + ": missing key '" + key + "'");
  return *it;
}

std::size_t natural(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Rational rational(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string \"p\" or \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

// 1-based index in 1..d, returned 0-based.
std::size_t index(const json& j, std::size_t d) {
  if (!j.is_number_integer()) throw ParseError("entry index must be an integer");
  const long long v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > d) throw ParseError("entry index " + std::to_string(v) + " outside 1.." + std::to_string(d));
  return static_cast<std::size_t>(v - 1);
}

Metric metric_from(const json& j, std::size_t d) {
  only_keys(j, {"diag", "matrix"}, "metric");
  if (j.size() != 1) throw ParseError("metric needs exactly one of 'diag' or 'matrix'");
  try {
    if (j.contains("diag")) {
      const json& diag = j["diag"];
      if (!diag.is_array() || diag.size() != d) throw ParseError("metric diag must list dim entries");
      std::vector<Rational> entries;
      for (const auto& x : diag) {
        if (x.is_number_integer()) entries.emplace_back(x.get<std::int64_t>());
        else entries.push_back(rational(x, "metric diag entry"));
      }
      return Metric::diagonal(entries);
    }
    const json& rows = j["matrix"];
    if (!rows.is_array() || rows.size() != d) throw ParseError("metric matrix must have dim rows");
    Matrix g(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      if (!rows[i].is_array() || rows[i].size() != d) throw ParseError("metric matrix must have dim columns");
      for (std::size_t k = 0; k < d; ++k) g(i, k) = rational(rows[i][k], "metric entry");
    }
    return Metric(std::move(g));
  } catch (const SingularError& e) {
    throw ParseError(std::string("metric: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("metric: ") + e.what());
  }
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// Entry lines for a tensor whose leading slots are inputs; with_out splits off the last slot.
std::string entry_lines(const Tensor& t, bool with_out) {
  std::string out;
  const auto nz = t.nonzero_offsets();
  for (std::size_t k = 0; k < nz.size(); ++k) {
    const MultiIndex idx = t.unravel(nz[k]);
    out += "    {\"in\": " + index_list(idx, 0, with_out ? idx.size() - 1 : idx.size());
    if (with_out) out += ", \"out\": " + std::to_string(idx.back() + 1);
    out += ", \"val\": " + quote(t.flat(nz[k]).to_string()) + "}";
    out += k + 1 < nz.size() ? ",\n" : "\n";
  }
  return out;
}

}  // namespace

std::string metric_to_json(const Metric& g) {
  if (auto sig = g.signature()) {
    std::string out = "{\"diag\": [";
    for (std::size_t i = 0; i < sig->size(); ++i) out += (i ? ", " : "") + std::to_string((*sig)[i]);
    return out + "]}";
  }
  std::string out = "{\"matrix\": [";
  for (std::size_t i = 0; i < g.dim(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t k = 0; k < g.dim(); ++k) out += (k ? ", " : "") + quote(g.matrix()(i, k).to_string());
    out += "]";
  }
  return out + "]}";
}

Metric metric_from_json(std::string_view text) {
  const json j = parse(text);
  only_keys(j, {"diag", "matrix"}, "metric");
  std::size_t d = 0;
  if (j.contains("diag") && j["diag"].is_array()) d = j["diag"].size();
  if (j.contains("matrix") && j["matrix"].is_array()) d = j["matrix"].size();
  return metric_from(j, d);
}

std::string to_json(const NaryAlgebra& L) {
  std::string out = "{\n";
  out += "  \"name\": " + quote(L.name) + ",\n";
  out += "  \"dim\": " + std::to_string(L.dim) + ",\n";
  out += "  \"arity\": " + std::to_string(L.arity) + ",\n";
  if (L.metric) out += "  \"metric\": " + metric_to_json(*L.metric) + ",\n";
  if (L.unverified) out += "  \"unverified\": true,\n";
  out += "  \"entries\": [\n" + entry_lines(L.f, true) + "  ]\n}\n";
  return out;
}

NaryAlgebra algebra_from_json(std::string_view text) {
  const json j = parse(text);
  only_keys(j, {"name", "dim", "arity", "metric", "unverified", "entries"}, "algebra");
  const json& name = need(j, "name", "algebra");
  if (!name.is_string()) throw ParseError("algebra name must be a string");
  const std::size_t d = natural(need(j, "dim", "algebra"), "dim");
  const std::size_t n = natural(need(j, "arity", "algebra"), "arity");
  if (n < 2) throw ParseError("arity must be at least 2");
  std::optional<Metric> metric;
  if (j.contains("metric")) metric = metric_from(j["metric"], d);
  bool unverified = false;
  if (j.contains("unverified")) {
    if (!j["unverified"].is_boolean()) throw ParseError("'unverified' must be a boolean");
    unverified = j["unverified"].get<bool>();
  }
  const json& entries = need(j, "entries", "algebra");
  if (!entries.is_array()) throw ParseError("entries must be an array");

  Tensor f = Tensor::cube(n + 1, d);
  std::set<std::size_t> seen;
  MultiIndex idx(n + 1);
  for (const auto& e : entries) {
    only_keys(e, {"in", "out", "val"}, "entry");
    const json& in = need(e, "in", "entry");
    if (!in.is_array() || in.size() != n) throw ParseError("entry 'in' must list arity indices");
    for (std::size_t i = 0; i < n; ++i) idx[i] = index(in[i], d);
    idx[n] = index(need(e, "out", "entry"), d);
    const std::size_t off = f.offset(idx);
    if (!seen.insert(off).second) throw ParseError("duplicate entry for in=" + in.dump() + " out=" + e["out"].dump());
    f.flat(off) = rational(need(e, "val", "entry"), "entry value");
  }
  NaryAlgebra L(name.get<std::string>(), d, n, std::move(f), std::move(metric));
  L.unverified = unverified;
  return L;
}

std::string to_json(const TraceForm& k) {
  std::string out = "{\n";
  out += "  \"name\": " + quote(k.name) + ",\n";
  out += "  \"dim\": " + std::to_string(k.dim) + ",\n";
  out += "  \"slots\": " + std::to_string(k.k.rank()) + ",\n";
  out += "  \"arities\": [" + std::to_string(k.n) + ", " + std::to_string(k.m) + "],\n";
  out += "  \"entries\": [\n" + entry_lines(k.k, false) + "  ]\n}\n";
  return out;
}

TraceForm trace_form_from_json(std::string_view text) {
  const json j = parse(text);
  only_keys(j, {"name", "dim", "slots", "arities", "entries"}, "trace form");
  const json& name = need(j, "name", "trace form");
  if (!name.is_string()) throw ParseError("trace form name must be a string");
  const std::size_t d = natural(need(j, "dim", "trace form"), "dim");
  const std::size_t slots = natural(need(j, "slots", "trace form"), "slots");
  const json& ar = need(j, "arities", "trace form");
  if (!ar.is_array() || ar.size() != 2) throw ParseError("arities must be [n, m]");
  const std::size_t n = natural(ar[0], "arity"), m = natural(ar[1], "arity");
  if (n < 2 || m < 2 || slots != n + m - 2) throw ParseError("slots must equal n+m-2");
  Tensor k = Tensor::cube(slots, d);
  std::set<std::size_t> seen;
  MultiIndex idx(slots);
  for (const auto& e : need(j, "entries", "trace form")) {
    only_keys(e, {"in", "val"}, "entry");
    const json& in = need(e, "in", "entry");
    if (!in.is_array() || in.size() != slots) throw ParseError("entry 'in' must list slots indices");
    for (std::size_t i = 0; i < slots; ++i) idx[i] = index(in[i], d);
    const std::size_t off = k.offset(idx);
    if (!seen.insert(off).second) throw ParseError("duplicate entry for in=" + in.dump());
    k.flat(off) = rational(need(e, "val", "entry"), "entry value");
  }
  return TraceForm{name.get<std::string>(), d, n, m, std::move(k)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error("failed writing '" + path + "'");
}

NaryAlgebra load(const std::string& path) { return algebra_from_json(read_file(path)); }

void save(const NaryAlgebra& L, const std::string& path) { write_file(path, to_json(L)); }

}  // namespace nary
