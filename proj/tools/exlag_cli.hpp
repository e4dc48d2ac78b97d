#pragma once

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "exlag/exlag.hpp"

namespace exlag::cli {

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string command;
  std::string alpha;
  std::string c;
  std::string pair;  // JSON text; empty or "-" reads stdin
  std::string poly;  // JSON coefficient array, for `roots`
  std::vector<long> indices;
  int count = 6;
  int component = 0;  // 0 = every applicable component
  int probe_degree = 4;
  double tol = 1e-11;
  double check_tol = 0;  // 0 = command default
  std::optional<double> radius;
  std::optional<double> truncation;
  std::optional<int> ray_steps;
  std::optional<int> arc_steps;
  std::string output = "json";
  bool timestamp = true;
};

struct Report {
  int exit_code = 0;
  json body;
};

/// A parameter problem tied to one input field.
class FieldError : public ParameterError {
 public:
  FieldError(std::string field, const std::string& what) : ParameterError(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

namespace detail {

template <class Fn>
auto with_field(const std::string& field, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const FieldError&) {
    throw;
  } catch (const ParameterError& e) {
    throw FieldError(field, e.what());
  } catch (const IndexError& e) {
    throw FieldError(field, e.what());
  }
}

inline double env_double(const char* name, double fallback) {
  if (const char* v = std::getenv(name)) {
    char* end = nullptr;
    double d = std::strtod(v, &end);
    if (end != v && *end == '\0' && d > 0) return d;
  }
  return fallback;
}

inline json complex_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline json norm_json(const NormResult& r, bool complex_valued) {
  json j{{"n", r.n}, {"m", r.m}, {"rel_error", r.rel_error}, {"method", r.method}, {"nodes", r.nodes},
         {"converged", r.converged}};
  if (complex_valued) {
    j["numeric"] = complex_json(r.numeric);
    j["closed_form"] = complex_json(r.closed_form);
  } else {
    j["numeric"] = r.numeric.real();
    j["closed_form"] = r.closed_form.real();
  }
  return j;
}

inline json rational_list(const std::vector<BigRational>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.to_string());
  return out;
}

inline json operator_json(const LinearDiffOperator& op) {
  json out = json::array();
  for (std::size_t j = 0; j < op.coeffs().size(); ++j)
    out.push_back({{"order", j}, {"num", poly_to_json(op.coeffs()[j].num())}, {"den", poly_to_json(op.coeffs()[j].den())}});
  return out;
}

inline json rf_json(const RationalFunction& f) { return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}}; }

struct Inputs {
  BigRational alpha;
  PairF pair;
};

inline std::string read_pair_text(const RunConfig& cfg, std::istream& in) {
  if (!cfg.pair.empty() && cfg.pair != "-") return cfg.pair;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (text.empty()) throw FieldError("pair", "no pair given on --pair or stdin");
  return text;
}

inline BigRational parse_alpha(const RunConfig& cfg) {
  if (cfg.alpha.empty()) throw FieldError("alpha", "--alpha is required");
  auto a = with_field("alpha", [&] { return BigRational::parse(cfg.alpha); });
  with_field("alpha", [&] { require_laguerre_alpha(a); });
  return a;
}

inline Inputs parse_inputs(const RunConfig& cfg, std::istream& in) {
  Inputs out;
  out.alpha = parse_alpha(cfg);
  out.pair = with_field("pair", [&] { return pair_from_string(read_pair_text(cfg, in)); });
  return out;
}

/// The explicit --n list, or the first `count` elements of sigma_F.
inline std::vector<long> sigma_indices(const RunConfig& cfg, const PairF& F) {
  if (!cfg.indices.empty()) {
    SigmaF sigma(F);
    for (long n : cfg.indices)
      if (!sigma.contains(n))
        throw FieldError("n", "index " + std::to_string(n) + " is not in sigma_F = {" + std::to_string(sigma.u) +
                                  ", ...} minus {u_F + f : f in F1}");
    return cfg.indices;
  }
  if (cfg.count < 1) throw FieldError("count", "--count must be positive");
  return sigma_prefix(F, static_cast<std::size_t>(cfg.count));
}

inline json header(const RunConfig& cfg) {
  json j{{"schema", kSchemaVersion}, {"command", cfg.command}};
  if (cfg.timestamp) {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["generated_at"] = buf;
  }
  return j;
}

inline json segments_json(const SegmentDecomposition& sd) {
  json out = json::array();
  for (const auto& seg : sd.segments) out.push_back({{"elements", rational_list(seg)}, {"size", seg.size()}});
  return out;
}

inline json admissibility_json(const AdmissibilityInstance& inst) {
  const auto direct = is_admissible_direct(inst);
  const bool by_segments = is_admissible_segments(inst);
  json j{{"c", inst.c.to_string()},
         {"pair", pair_to_json(inst.pair)},
         {"c_hat", inst.c_hat},
         {"horizon", direct.horizon},
         {"method_direct", direct.admissible},
         {"method_segments", by_segments},
         {"agree", direct.admissible == by_segments}};
  if (direct.witness) {
    j["witness"] = {{"n", *direct.witness}, {"value", direct.witness_value->to_string()}};
  }
  if (inst.c.sign() < 0) {
    const auto sd = build_segments(inst);
    const long bound = std::max<long>(sd.g_set.empty() ? 0 : sd.g_set.back().ceil().get_si(),
                                      sd.s_elements.empty() ? 0 : sd.s_elements.back().ceil().get_si() + 2);
    j["S_prefix"] = rational_list(sd.s_prefix(bound));
    j["G"] = rational_list(sd.g_set);
    j["segments"] = segments_json(sd);
  } else {
    json segs = json::array();
    for (const auto& seg : integer_segments(inst.pair.f1())) {
      std::vector<BigRational> els(seg.begin(), seg.end());
      segs.push_back({{"elements", rational_list(els)}, {"size", seg.size()}});
    }
    j["reduction"] = "hermite";
    j["segments"] = segs;
  }
  return j;
}

inline ContourSpec contour_spec_for(const RunConfig& cfg, ExceptionalFamily& fam, const std::vector<long>& idx,
                                    json& meta) {
  double r;
  if (cfg.radius) {
    r = *cfg.radius;
    meta["radius_policy"] = "user supplied";
  } else {
    auto choice = find_radius(fam.pair(), fam.alpha());
    r = choice.r;
    meta["radius_policy"] = choice.policy;
    meta["root_clearance"] = choice.clearance;
  }
  int max_deg = 0;
  for (long n : idx) max_deg = std::max(max_deg, fam.poly(n).degree());
  const double eff = 2.0 * max_deg - 2.0 * fam.omega().degree() + static_cast<double>(fam.exponent().to_long_double());
  auto spec = default_contour_spec(r, eff);
  if (cfg.truncation) spec.truncation_R = *cfg.truncation;
  if (cfg.ray_steps) spec.ray_steps = *cfg.ray_steps;
  if (cfg.arc_steps) spec.arc_steps = *cfg.arc_steps;
  spec.validate();
  meta["radius"] = spec.r;
  meta["truncation"] = spec.truncation_R;
  meta["ray_steps"] = spec.ray_steps;
  meta["arc_steps"] = spec.arc_steps;
  return spec;
}

inline Report cmd_construct(const RunConfig& cfg, std::istream& in) {
  const auto inp = parse_inputs(cfg, in);
  const auto idx = sigma_indices(cfg, inp.pair);
  json polys = json::array();
  for (long n : idx) {
    auto p = exceptional_poly(n, inp.pair, inp.alpha);
    polys.push_back({{"n", n}, {"degree", p.degree()}, {"coefficients", poly_to_json(p)}});
  }
  json body = header(cfg);
  body.update({{"alpha", inp.alpha.to_string()}, {"pair", pair_to_json(inp.pair)}, {"u_F", pair_uf(inp.pair)},
               {"polynomials", polys}});
  return {0, body};
}

inline Report cmd_omega(const RunConfig& cfg, std::istream& in) {
  const auto inp = parse_inputs(cfg, in);
  const auto w = weight(inp.pair, inp.alpha);
  json body = header(cfg);
  body.update({{"alpha", inp.alpha.to_string()},
               {"pair", pair_to_json(inp.pair)},
               {"omega", poly_to_json(w.omega)},
               {"degree", w.omega.degree()},
               {"weight_exponent", w.exponent.to_string()},
               {"nonneg_root_count", sturm_nonneg_roots(w.omega)}});
  return {0, body};
}

inline Report cmd_operator(const RunConfig& cfg, std::istream& in) {
  const auto inp = parse_inputs(cfg, in);
  json body = header(cfg);
  body.update({{"alpha", inp.alpha.to_string()},
               {"pair", pair_to_json(inp.pair)},
               {"operator", operator_json(exceptional_operator(inp.pair, inp.alpha))}});
  return {0, body};
}

inline Report cmd_admissible(const RunConfig& cfg, std::istream& in) {
  if (cfg.c.empty()) throw FieldError("c", "--c is required");
  auto c = with_field("c", [&] { return BigRational::parse(cfg.c); });
  auto F = with_field("pair", [&] { return pair_from_string(read_pair_text(cfg, in)); });
  auto inst = with_field("c", [&] { return AdmissibilityInstance(c, F); });
  json body = header(cfg);
  body.update(admissibility_json(inst));
  return {body["agree"].get<bool>() ? 0 : 1, body};
}

inline Report cmd_verify_eigen(const RunConfig& cfg, std::istream& in) {
  const auto inp = parse_inputs(cfg, in);
  const auto idx = sigma_indices(cfg, inp.pair);
  json results = json::array();
  bool all_ok = true;
  for (long n : idx) {
    auto check = verify_eigen(n, inp.pair, inp.alpha);
    all_ok = all_ok && check.ok;
    results.push_back({{"n", n}, {"ok", check.ok}, {"residual", poly_to_json(check.residual)}});
  }
  json body = header(cfg);
  body.update({{"alpha", inp.alpha.to_string()}, {"pair", pair_to_json(inp.pair)}, {"all_ok", all_ok}, {"results", results}});
  return {all_ok ? 0 : 1, body};
}

inline Report cmd_verify_ladder(const RunConfig& cfg, std::istream& in) {
  const auto inp = parse_inputs(cfg, in);
  const auto& F = inp.pair;
  std::vector<int> components;
  if (cfg.component == 0) {
    if (!F.f1().empty()) components.push_back(1);
    if (!F.f2().empty()) components.push_back(2);
  } else if (cfg.component == 1 || cfg.component == 2) {
    components.push_back(cfg.component);
  } else {
    throw FieldError("component", "--component must be 1 or 2");
  }
  if (cfg.count < 1) throw FieldError("count", "--count must be positive");
  std::vector<long> ns = cfg.indices;
  if (ns.empty())
    for (long n = 0; ns.size() < static_cast<std::size_t>(cfg.count); ++n)
      if (!F.in_f1(n)) ns.push_back(n);
  for (long n : ns)
    if (n < 0 || F.in_f1(n)) throw FieldError("n", "ladder index " + std::to_string(n) + " must be a nonnegative integer outside F1");

  bool all_ok = true;
  json steps = json::array();
  for (int comp : components) {
    auto step = with_field("component", [&] { return build_step(F, comp, inp.alpha); });
    auto fact = verify_factorization(step, cfg.probe_degree);
    all_ok = all_ok && fact.ok;
    json ladders = json::array();
    for (long n : ns) {
      auto lc = verify_ladder(F, comp, inp.alpha, n);
      all_ok = all_ok && lc.ok;
      json entry{{"n", n}, {"ok", lc.ok}};
      if (!lc.ok) entry["residual_a"] = rf_json(lc.residual_a), entry["residual_b"] = rf_json(lc.residual_b);
      ladders.push_back(entry);
    }
    json s{{"component", comp},
           {"removed", step.removed},
           {"reduced", pair_to_json(step.reduced)},
           {"eigen_shift_full", step.eigen_shift_full.to_string()},
           {"eigen_shift_reduced", step.eigen_shift_reduced.to_string()},
           {"factorization_ok", fact.ok},
           {"ladder", ladders}};
    if (!fact.ok) {
      s["reduced_residual"] = operator_json(fact.reduced_residual);
      s["full_residual"] = operator_json(fact.full_residual);
      s["failing_probe"] = fact.failing_probe;
    }
    steps.push_back(s);
  }
  const auto chain = full_chain(F, inp.alpha);
  json chain_checks = json::array();
  for (long n : ns) {
    bool ok = chain_ladder(chain, n, inp.alpha) == exceptional_poly(n + pair_uf(F), F, inp.alpha);
    all_ok = all_ok && ok;
    chain_checks.push_back({{"n", n}, {"ok", ok}});
  }
  json body = header(cfg);
  body.update({{"alpha", inp.alpha.to_string()},
               {"pair", pair_to_json(F)},
               {"all_ok", all_ok},
               {"steps", steps},
               {"chain_length", chain.size()},
               {"chain", chain_checks}});
  return {all_ok ? 0 : 1, body};
}

inline Report cmd_verify_orthogonality(const RunConfig& cfg, std::istream& in) {
  const auto inp = parse_inputs(cfg, in);
  const auto idx = sigma_indices(cfg, inp.pair);
  const double check_tol = cfg.check_tol > 0 ? cfg.check_tol : env_double("EXLAG_NORM_TOL", 1e-8);
  ExceptionalFamily fam(inp.pair, inp.alpha);
  json body = header(cfg);
  body.update({{"alpha", inp.alpha.to_string()}, {"pair", pair_to_json(inp.pair)}, {"tol", cfg.tol}, {"check_tol", check_tol}});
  const long roots = sturm_nonneg_roots(fam.omega());
  body["omega_nonneg_roots"] = roots;
  if (roots != 0) {
    body["error"] = {{"kind", "certificate"},
                     {"message", "Omega has " + std::to_string(roots) + " root(s) in [0, inf); the weight is not integrable"}};
    return {1, body};
  }
  json results = json::array();
  bool all_ok = true;
  for (const auto& r : real_axis_gram_matrix(fam, idx, cfg.tol)) {
    const bool ok = r.rel_error < check_tol;
    all_ok = all_ok && ok;
    auto j = norm_json(r, false);
    j["ok"] = ok;
    results.push_back(j);
  }
  body["all_ok"] = all_ok;
  body["results"] = results;
  return {all_ok ? 0 : 1, body};
}

inline Report cmd_verify_contour(const RunConfig& cfg, std::istream& in) {
  const auto inp = parse_inputs(cfg, in);
  const auto idx = sigma_indices(cfg, inp.pair);
  const double check_tol = cfg.check_tol > 0 ? cfg.check_tol : env_double("EXLAG_CONTOUR_TOL", 1e-6);
  ExceptionalFamily fam(inp.pair, inp.alpha);
  json meta = json::object();
  auto spec = with_field("radius", [&] { return contour_spec_for(cfg, fam, idx, meta); });
  json body = header(cfg);
  body.update({{"alpha", inp.alpha.to_string()}, {"pair", pair_to_json(inp.pair)}, {"contour", meta}, {"check_tol", check_tol}});
  const auto pre = contour_prefactor(inp.alpha.to_long_double());
  body["prefactor"] = complex_json(pre);
  if (inp.alpha.is_integer())
    body["note"] = "alpha is an integer: the prefactor e^{2 pi i alpha} - 1 vanishes and both sides are 0";
  json results = json::array();
  bool all_ok = true;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i; j < idx.size(); ++j) {
      auto r = contour_gram(fam, idx[i], idx[j], spec);
      const bool ok = r.rel_error < check_tol;
      all_ok = all_ok && ok;
      auto e = norm_json(r, true);
      e["ok"] = ok;
      results.push_back(e);
    }
  body["all_ok"] = all_ok;
  body["results"] = results;
  return {all_ok ? 0 : 1, body};
}

inline Report cmd_roots(const RunConfig& cfg, std::istream& in) {
  RationalPolynomial p;
  json body = header(cfg);
  if (!cfg.poly.empty()) {
    p = with_field("poly", [&] {
      json j;
      try {
        j = json::parse(cfg.poly);
      } catch (const json::parse_error& e) {
        throw ParameterError(std::string("malformed polynomial JSON: ") + e.what());
      }
      return poly_from_json(j);
    });
    if (p.is_zero()) throw FieldError("poly", "the zero polynomial has no finite root set");
  } else {
    const auto inp = parse_inputs(cfg, in);
    p = omega(inp.pair, inp.alpha);
    body.update({{"alpha", inp.alpha.to_string()}, {"pair", pair_to_json(inp.pair)}});
  }
  json roots = json::array();
  for (const auto& z : polynomial_roots(p))
    roots.push_back({{"re", static_cast<double>(z.real())}, {"im", static_cast<double>(z.imag())}});
  body.update({{"polynomial", poly_to_json(p)}, {"nonneg_root_count", sturm_nonneg_roots(p)}, {"roots", roots}});
  return {0, body};
}

struct WorkedCase {
  std::vector<long> f1;
  bool expected;
};

inline Report cmd_reproduce_appendix(const RunConfig& cfg) {
  const BigRational c(-17, 4);
  const std::vector<long> f2{1, 2};
  const std::vector<WorkedCase> cases{{{1, 2, 8, 9}, false}, {{1, 2, 5, 8, 9}, true}, {{1, 2, 4, 8, 9}, true}};
  json out = json::array();
  bool all_ok = true;
  for (const auto& ac : cases) {
    AdmissibilityInstance inst(c, PairF(ac.f1, f2));
    auto j = admissibility_json(inst);
    const bool ok = j["method_segments"].get<bool>() == ac.expected && j["agree"].get<bool>();
    j["expected_admissible"] = ac.expected;
    j["ok"] = ok;
    all_ok = all_ok && ok;
    out.push_back(j);
  }
  json body = header(cfg);
  body.update({{"all_ok", all_ok}, {"cases", out}});
  return {all_ok ? 0 : 1, body};
}

inline std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParameterError*>(&e)) return "parameter";
  if (dynamic_cast<const IndexError*>(&e)) return "index";
  if (dynamic_cast<const ReductionError*>(&e)) return "reduction";
  if (dynamic_cast<const DimensionError*>(&e)) return "dimension";
  if (dynamic_cast<const DegeneracyError*>(&e)) return "degeneracy";
  if (dynamic_cast<const CertificateError*>(&e)) return "certificate";
  if (dynamic_cast<const PathError*>(&e)) return "path";
  if (dynamic_cast<const SearchError*>(&e)) return "search";
  return "internal";
}

}  // namespace detail

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"construct",   "omega",          "operator",
                                              "admissible",  "verify-eigen",   "verify-ladder",
                                              "verify-orthogonality", "verify-contour", "roots",
                                              "reproduce-appendix"};
  return names;
}

/// Executes one command. Exit 0: success; 1: a check failed (certificate in
/// the body); 2: usage or parameter error.
inline Report run(const RunConfig& cfg, std::istream& in = std::cin) {
  using namespace detail;
  try {
    if (cfg.command == "construct") return cmd_construct(cfg, in);
    if (cfg.command == "omega") return cmd_omega(cfg, in);
    if (cfg.command == "operator") return cmd_operator(cfg, in);
    if (cfg.command == "admissible") return cmd_admissible(cfg, in);
    if (cfg.command == "verify-eigen") return cmd_verify_eigen(cfg, in);
    if (cfg.command == "verify-ladder") return cmd_verify_ladder(cfg, in);
    if (cfg.command == "verify-orthogonality") return cmd_verify_orthogonality(cfg, in);
    if (cfg.command == "verify-contour") return cmd_verify_contour(cfg, in);
    if (cfg.command == "roots") return cmd_roots(cfg, in);
    if (cfg.command == "reproduce-appendix") return cmd_reproduce_appendix(cfg);
    json body{{"schema", kSchemaVersion}, {"command", cfg.command}};
    body["error"] = {{"kind", "usage"}, {"message", "unknown command '" + cfg.command + "'"}};
    return {2, body};
  } catch (const std::exception& e) {
    json body = header(cfg);
    const std::string kind = error_kind(e);
    body["error"] = {{"kind", kind}, {"message", e.what()}};
    if (auto fe = dynamic_cast<const FieldError*>(&e)) body["error"]["field"] = fe->field();
    const bool usage = kind == "parameter" || kind == "index" || kind == "reduction" || kind == "dimension";
    return {usage ? 2 : 1, body};
  }
}

inline std::string render_text(const json& body) {
  std::ostringstream os;
  for (const auto& [key, value] : body.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << key << ":\n";
      for (const auto& item : value) os << "  " << item.dump() << "\n";
    } else {
      os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  return os.str();
}

/// Parses argv into a RunConfig and runs it; the report goes to `out`.
inline int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exceptional Laguerre polynomials: construction, admissibility and verification"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.tol = detail::env_double("EXLAG_QUAD_TOL", cfg.tol);
  bool no_timestamp = false;
  std::string output = "json";

  for (const auto& name : commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--no-timestamp", no_timestamp, "omit generated_at for byte-stable output");
    if (name == "reproduce-appendix") continue;
    if (name == "admissible") {
      sub->add_option("--c", cfg.c, "parameter c as p/q")->required();
      sub->add_option("--pair", cfg.pair, "pair JSON {\"f1\":[...],\"f2\":[...]}; '-' or omitted reads stdin");
      continue;
    }
    sub->add_option("--alpha", cfg.alpha, "alpha as p/q");
    sub->add_option("--pair", cfg.pair, "pair JSON {\"f1\":[...],\"f2\":[...]}; '-' or omitted reads stdin");
    if (name == "roots") {
      sub->add_option("--poly", cfg.poly, "polynomial as a JSON array of \"p/q\" coefficients (instead of Omega)");
      continue;
    }
    if (name == "omega" || name == "operator") continue;
    sub->add_option("--n", cfg.indices, "explicit indices (repeatable)");
    sub->add_option("--count", cfg.count, "number of leading indices to check");
    if (name == "verify-ladder") {
      sub->add_option("--component", cfg.component, "1 or 2 (default: every nonempty component)");
      sub->add_option("--probe-degree", cfg.probe_degree, "highest probe monomial degree");
    }
    if (name == "verify-orthogonality" || name == "verify-contour") {
      sub->add_option("--tol", cfg.tol, "quadrature convergence tolerance");
      sub->add_option("--check-tol", cfg.check_tol, "pass threshold on rel_error");
    }
    if (name == "verify-contour") {
      sub->add_option("--radius", cfg.radius, "contour radius r");
      sub->add_option("--truncation", cfg.truncation, "truncation point R of the rays");
      sub->add_option("--ray-steps", cfg.ray_steps, "panels per ray");
      sub->add_option("--arc-steps", cfg.arc_steps, "panels on the semicircle");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  cfg.timestamp = !no_timestamp;
  cfg.output = output;

  const auto report = run(cfg, in);
  if (cfg.output == "text")
    out << render_text(report.body);
  else
    out << report.body.dump(2) << "\n";
  if (report.body.contains("error")) err << "error: " << report.body["error"]["message"].get<std::string>() << "\n";
  return report.exit_code;
}

}  // namespace exlag::cli
