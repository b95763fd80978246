#include "cli.hpp"

#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "nary/adjoint.hpp"
#include "nary/construct.hpp"
#include "nary/derivation.hpp"
#include "nary/forms.hpp"
#include "nary/io.hpp"
#include "nary/young.hpp"

namespace nary::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Input {
  std::string path;
  std::string sha256;
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("sha256 failed");
  std::ostringstream ss;
  for (unsigned int i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return ss.str();
}

std::string read_input(const std::string& path, std::vector<Input>& inputs) {
  std::string text = read_file(path);
  inputs.push_back(Input{path, sha256_hex(text)});
  return text;
}

NaryAlgebra load_algebra(const std::string& path, std::vector<Input>& inputs) {
  return algebra_from_json(read_input(path, inputs));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::size_t parse_count(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidArgument(std::string(what) + " must be a non-negative integer, got '" + s + "'");
  return std::stoul(s);
}

Metric parse_metric(const std::string& spec, std::size_t d, std::vector<Input>& inputs) {
  if (spec == "euclid") return Metric::euclidean(d);
  if (spec.rfind("lorentz:", 0) == 0) {
    const auto parts = split(spec.substr(8), ',');
    if (parts.size() != 2) throw InvalidArgument("--metric lorentz:p,q needs two counts");
    const std::size_t p = parse_count(parts[0], "p"), q = parse_count(parts[1], "q");
    if (p + q != d) throw InvalidArgument("--metric lorentz:p,q needs p+q equal to the dimension");
    return Metric::lorentzian(p, q);
  }
  Metric g = metric_from_json(read_input(spec, inputs));
  if (g.dim() != d) throw InvalidArgument("metric file dimension differs from the algebra");
  return g;
}

std::vector<int> parse_signature(const std::string& s) {
  std::vector<int> sig;
  for (const auto& t : split(s, ',')) {
    if (t == "+" || t == "1" || t == "+1")
      sig.push_back(1);
    else if (t == "-" || t == "-1")
      sig.push_back(-1);
    else
      throw InvalidArgument("signature entries must be +, -, 1 or -1");
  }
  return sig;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s, std::size_t arity) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw InvalidArgument("--skew-range must look like 1..n");
  const std::size_t a = parse_count(s.substr(0, dots), "range start");
  const std::size_t b = parse_count(s.substr(dots + 2), "range end");
  if (a < 1 || a > b || b > arity) throw InvalidArgument("--skew-range outside 1.." + std::to_string(arity));
  return {a - 1, b};
}

ojson index_json(const MultiIndex& idx) {
  ojson a = ojson::array();
  for (std::size_t i : idx) a.push_back(i + 1);
  return a;
}

std::string index_text(const MultiIndex& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + std::to_string(idx[i] + 1);
  return s + ")";
}

struct Outcome {
  CheckReport report;
  std::optional<double> ms;
};

struct CheckContext {
  const NaryAlgebra& L;
  const Metric* metric;
  std::pair<std::size_t, std::size_t> skew_range;
  ProjectionOptions young;
};

const Metric* need_metric(const CheckContext& c, const std::string& suite) {
  if (!c.metric) throw InvalidArgument("suite '" + suite + "' needs a metric: pass --metric or use an algebra with one");
  return c.metric;
}

CheckReport run_suite(const std::string& suite, const CheckContext& c) {
  if (suite == "filippov") return check_filippov(c.L);
  if (suite == "skew") return check_skew(c.L, c.skew_range.first, c.skew_range.second);
  if (suite == "metricity") return check_metricity(c.L, need_metric(c, suite));
  if (suite == "fullanti") return check_full_antisym_lowered(c.L, need_metric(c, suite));
  if (suite == "symmetry") return check_symmetry_property(c.L, need_metric(c, suite));
  if (suite == "genmetric") return check_generalized_metric_l(c.L, need_metric(c, suite));
  if (suite == "cyclic") return check_cyclic(c.L);
  if (suite == "triple") return is_lie_triple(c.L);
  if (suite == "nple") return is_lie_nple(c.L);
  if (suite == "lple") return is_lie_lple(c.L, c.young);
  if (suite == "nondegenerate") return nondegenerate(kasymov(c.L));
  throw InvalidArgument("unknown suite '" + suite + "'");
}

std::vector<std::string> expand_suites(const std::string& list, const NaryAlgebra& L, bool has_metric) {
  std::vector<std::string> out;
  for (const auto& s : split(list, ',')) {
    if (s != "all") {
      out.push_back(s);
      continue;
    }
    const std::size_t n = L.arity;
    const bool odd = n >= 3 && n % 2 == 1;
    out.push_back("filippov");
    out.push_back("skew");
    if (has_metric) {
      out.push_back("metricity");
      out.push_back("fullanti");
      if (n >= 3) out.push_back("symmetry");
      if (odd) out.push_back("genmetric");
    }
    out.push_back("cyclic");
    if (n == 3) out.push_back("triple");
    out.push_back("nple");
    if (odd) out.push_back("lple");
    // The Kasymov form has 2(n-1) slots; skip it when it cannot be held.
    double volume = 1;
    for (std::size_t i = 0; i < 2 * (n - 1); ++i) volume *= static_cast<double>(L.dim);
    if (volume <= static_cast<double>(size_guard())) out.push_back("nondegenerate");
  }
  return out;
}

ojson inputs_json(const std::vector<Input>& inputs) {
  ojson a = ojson::array();
  for (const auto& in : inputs) a.push_back(ojson{{"path", in.path}, {"sha256", in.sha256}});
  return a;
}

std::string render_json(const NaryAlgebra& L, const std::vector<Input>& inputs, const std::vector<Outcome>& results,
                        bool all_pass) {
  ojson r;
  r["tool"] = "nary";
  r["version"] = kVersion;
  r["inputs"] = inputs_json(inputs);
  r["algebra"] = ojson{{"name", L.name}, {"dim", L.dim}, {"arity", L.arity}};
  if (L.unverified) r["algebra"]["unverified"] = true;
  ojson checks = ojson::array();
  for (const auto& o : results) {
    ojson c;
    c["property"] = o.report.property;
    c["pass"] = o.report.pass;
    if (o.report.witness)
      c["witness"] = ojson{{"index", index_json(o.report.witness->index)},
                           {"residual", o.report.witness->residual.to_string()}};
    if (!o.report.detail.empty()) c["detail"] = o.report.detail;
    if (o.ms) c["timing_ms"] = std::round(*o.ms * 1000.0) / 1000.0;
    checks.push_back(std::move(c));
  }
  r["checks"] = std::move(checks);
  r["pass"] = all_pass;
  return r.dump(2) + "\n";
}

std::string render_md(const NaryAlgebra& L, const std::vector<Input>& inputs, const std::vector<Outcome>& results,
                      bool all_pass) {
  std::ostringstream md;
  md << "# nary " << kVersion << " report: " << L.name << "\n\n";
  md << "dim " << L.dim << ", arity " << L.arity << (L.unverified ? ", unverified construction" : "") << "\n\n";
  md << "| check | result | witness | residual | detail |";
  const bool timing = !results.empty() && results.front().ms.has_value();
  if (timing) md << " ms |";
  md << "\n|---|---|---|---|---|" << (timing ? "---|" : "") << "\n";
  for (const auto& o : results) {
    const auto& r = o.report;
    md << "| " << r.property << " | " << (r.pass ? "pass" : "FAIL") << " | "
       << (r.witness ? index_text(r.witness->index) : "") << " | " << (r.witness ? r.witness->residual.to_string() : "")
       << " | " << r.detail << " |";
    if (timing) md << " " << std::fixed << std::setprecision(1) << o.ms.value_or(0) << " |";
    md << "\n";
  }
  md << "\nOverall: " << (all_pass ? "PASS" : "FAIL") << "\n\n";
  for (const auto& in : inputs) md << "- `" << in.path << "` sha256 " << in.sha256 << "\n";
  return md.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_file(path, text);
}

ojson vector_json(const Vector& v) {
  ojson a = ojson::array();
  for (const auto& q : v) a.push_back(q.to_string());
  return a;
}

ojson kernel_json(const KernelBasis& k) {
  ojson vecs = ojson::array();
  for (const auto& v : k.vectors) {
    ojson terms = ojson::array();
    for (const auto& [i, q] : v) terms.push_back(ojson{{"tuple", index_json(k.coordinates[i])}, {"coeff", q.to_string()}});
    vecs.push_back(std::move(terms));
  }
  return ojson{{"unknowns", k.coordinates.size()}, {"dim", k.vectors.size()}, {"basis", std::move(vecs)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of n-ary Lie and Leibniz algebras", "nary"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Write a built-in algebra");
  std::string family, signature, gen_out;
  std::size_t gen_n = 3, gen_dim = 0;
  gen->add_option("--family", family, "A | Apq | cs-so4 | a4sum | seven-leibniz | zero")->required();
  gen->add_option("--n", gen_n, "Arity");
  gen->add_option("--signature", signature, "Metric signature, e.g. -,+,+,+");
  gen->add_option("--dim", gen_dim, "Dimension (zero family)");
  gen->add_option("-o,--output", gen_out, "Output file")->required();

  // check / report
  auto* check = app.add_subcommand("check", "Run check suites on an algebra file");
  auto* report = app.add_subcommand("report", "Run every applicable check suite");
  std::string check_file, suites, metric_spec, format = "json", report_out, skew_range;
  bool timing = false, allow_large = false;
  for (auto* sub : {check, report}) {
    sub->add_option("file", check_file, "Algebra file")->required();
    sub->add_option("--metric", metric_spec, "euclid | lorentz:p,q | metric file");
    sub->add_option("--format", format, "json | md")->check(CLI::IsMember({"json", "md"}));
    sub->add_option("-o,--output", report_out, "Report file (default: stdout)");
    sub->add_option("--skew-range", skew_range, "Input slots for the skew suite, e.g. 1..2 (default: all)");
    sub->add_flag("--timing", timing, "Include wall-clock timings (reports are then not reproducible)");
    sub->add_flag("--allow-large", allow_large, "Lift the permutation budget of Young projections");
  }
  check->add_option("--suite", suites, "Comma-separated suites or 'all'")->required();

  // kasymov / mixed
  auto* kas = app.add_subcommand("kasymov", "Kasymov trace form of an algebra");
  std::string kas_file, kas_out;
  kas->add_option("file", kas_file)->required();
  kas->add_option("-o,--output", kas_out);
  auto* mixed = app.add_subcommand("mixed", "Mixed trace form Tr(ad¹ ad²)");
  std::string mixed1, mixed2, mixed_out;
  mixed->add_option("file1", mixed1)->required();
  mixed->add_option("file2", mixed2)->required();
  mixed->add_option("-o,--output", mixed_out);

  // compose
  auto* compose = app.add_subcommand("compose", "Build the associated Leibniz algebra of two algebras");
  std::string l1_file, l2_file, compose_metric, prefactor = "1", compose_out;
  bool force = false;
  compose->add_option("--l1", l1_file)->required();
  compose->add_option("--l2", l2_file)->required();
  compose->add_option("--metric", compose_metric)->required();
  compose->add_option("--prefactor", prefactor, "Rational p/q multiplying the constants");
  compose->add_flag("--force", force, "Skip precondition checks; output is marked unverified");
  compose->add_option("-o,--output", compose_out)->required();

  // liealg
  auto* liealg = app.add_subcommand("liealg", "Associated Lie algebra of adjoint maps");
  std::string lie_file, lie_out;
  bool want_kernel = false, want_centre = false;
  liealg->add_option("file", lie_file)->required();
  liealg->add_flag("--kernel", want_kernel, "Kernel of ad on tuples");
  liealg->add_flag("--centre", want_centre, "Centre of the algebra");
  liealg->add_option("-o,--output", lie_out);

  // young
  auto* young = app.add_subcommand("young", "Young-pattern tools");
  young->require_subcommand(1);
  auto* classify = young->add_subcommand("classify", "Isotypic content of the bracket");
  std::string young_file, young_out;
  bool young_large = false;
  classify->add_option("file", young_file)->required();
  classify->add_flag("--allow-large", young_large);
  classify->add_option("-o,--output", young_out);
  auto* ydim = young->add_subcommand("dim", "GL(d) dimension of a two-column pattern");
  std::size_t yl = 0, yr = 0, yd = 0;
  ydim->add_option("--l", yl)->required();
  ydim->add_option("--r", yr)->required();
  ydim->add_option("--d", yd)->required();

  std::vector<const char*> argv{"nary"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::vector<Input> inputs;
    if (gen->parsed()) {
      NaryAlgebra L = [&] {
        if (family == "A") {
          if (!signature.empty()) return simple_filippov(gen_n, parse_signature(signature));
          return simple_filippov(gen_n, std::vector<int>(gen_n + 1, 1));
        }
        if (family == "Apq") {
          if (signature.empty()) throw InvalidArgument("--family Apq needs --signature");
          const auto sig = parse_signature(signature);
          return simple_filippov(sig.size() - 1, sig);
        }
        if (family == "cs-so4") return builtin("cs-so4");
        if (family == "a4sum") return builtin("a4-sum-a4");
        if (family == "seven-leibniz") return builtin("seven-leibniz");
        if (family == "zero") return zero_algebra(gen_dim, gen_n);
        throw InvalidArgument("unknown family '" + family + "'");
      }();
      save(L, gen_out);
      return kOk;
    }

    if (check->parsed() || report->parsed()) {
      const NaryAlgebra L = load_algebra(check_file, inputs);
      std::optional<Metric> override_metric;
      if (!metric_spec.empty()) override_metric = parse_metric(metric_spec, L.dim, inputs);
      const Metric* metric = override_metric ? &*override_metric : (L.metric ? &*L.metric : nullptr);
      CheckContext ctx{L, metric, {0, L.arity}, ProjectionOptions{}};
      ctx.young.allow_large = allow_large;
      if (!skew_range.empty()) ctx.skew_range = parse_range(skew_range, L.arity);

      const auto list = expand_suites(report->parsed() ? "all" : suites, L, metric != nullptr);
      std::vector<Outcome> results;
      bool all_pass = true;
      for (const auto& s : list) {
        const auto t0 = std::chrono::steady_clock::now();
        CheckReport r = run_suite(s, ctx);
        const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
        all_pass = all_pass && r.pass;
        results.push_back(Outcome{std::move(r), timing ? std::optional<double>(dt.count()) : std::nullopt});
      }
      const std::string text =
          format == "md" ? render_md(L, inputs, results, all_pass) : render_json(L, inputs, results, all_pass);
      emit(text, report_out, out);
      return all_pass ? kOk : kCheckFailed;
    }

    if (kas->parsed()) {
      emit(to_json(kasymov(load_algebra(kas_file, inputs))), kas_out, out);
      return kOk;
    }
    if (mixed->parsed()) {
      const NaryAlgebra L1 = load_algebra(mixed1, inputs);
      const NaryAlgebra L2 = load_algebra(mixed2, inputs);
      emit(to_json(mixed_trace(L1, L2)), mixed_out, out);
      return kOk;
    }

    if (compose->parsed()) {
      const NaryAlgebra L1 = load_algebra(l1_file, inputs);
      const NaryAlgebra L2 = load_algebra(l2_file, inputs);
      const Metric g = parse_metric(compose_metric, L1.dim, inputs);
      ConstructionOptions opts;
      try {
        opts.prefactor = Rational::parse(prefactor);
      } catch (const std::exception& e) {
        throw InvalidArgument(std::string("--prefactor: ") + e.what());
      }
      opts.force = force;
      try {
        save(associated_leibniz(L1, L2, g, opts), compose_out);
      } catch (const PreconditionError& e) {
        std::vector<Outcome> results{Outcome{e.report(), std::nullopt}};
        err << e.what() << "\n" << render_json(L1, inputs, results, false);
        return kCheckFailed;
      }
      return kOk;
    }

    if (liealg->parsed()) {
      const NaryAlgebra L = load_algebra(lie_file, inputs);
      const LieClosure c = lie_closure(L);
      ojson r;
      r["algebra"] = L.name;
      r["closure_dim"] = c.dim;
      r["generators_consumed"] = c.generators_consumed;
      if (want_kernel) {
        r["kernel"] = kernel_json(ad_kernel(L));
        r["skew_kernel"] = kernel_json(ad_kernel_skew(L));
      }
      if (want_centre) {
        ojson z = ojson::array();
        for (const auto& v : centre(L)) z.push_back(vector_json(v));
        r["centre"] = ojson{{"dim", z.size()}, {"basis", std::move(z)}};
      }
      emit(r.dump(2) + "\n", lie_out, out);
      return kOk;
    }

    if (classify->parsed()) {
      const NaryAlgebra L = load_algebra(young_file, inputs);
      ProjectionOptions opts;
      opts.allow_large = young_large;
      const Classification c = classify_bracket(L, opts);
      ojson comps = ojson::array();
      for (const auto& comp : c.components)
        comps.push_back(ojson{{"r", comp.r}, {"nonzero", comp.nonzero}, {"gl_dim", comp.gl_dim}});
      emit(ojson{{"l", c.l}, {"components", std::move(comps)}}.dump(2) + "\n", young_out, out);
      return kOk;
    }

    if (ydim->parsed()) {
      out << gl_dimension(YoungShape{yl, yr}, yd) << "\n";
      return kOk;
    }
  } catch (const SizeGuardError& e) {
    err << "nary: " << e.what() << "\n";
    return kSizeGuard;
  } catch (const BudgetError& e) {
    err << "nary: " << e.what() << " (use --allow-large to lift it)\n";
    return kSizeGuard;
  } catch (const std::exception& e) {
    err << "nary: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace nary::cli
