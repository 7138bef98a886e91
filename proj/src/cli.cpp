#include "abca/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "abca/corpus.hpp"
#include "abca/errors.hpp"

namespace abca::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

std::string shortest(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + " must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items())
    if (!ok.count(key)) throw InputError("unknown field '" + key + "' in " + where);
}

GaussianRational parse_coefficient(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return GaussianRational::parse(v.get<std::string>());
    if (v.is_number_integer()) return GaussianRational(v.get<long>());
    if (v.is_number()) return GaussianRational(GaussianRational::parse_rational(v.dump()));
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": coefficients must be strings or numbers");
}

Polynomial parse_polynomial(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return Polynomial::parse_sugar(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (v.is_array()) {
    std::vector<GaussianRational> c;
    for (std::size_t k = 0; k < v.size(); ++k)
      c.push_back(parse_coefficient(v[k], where + "[" + std::to_string(k) + "]"));
    return Polynomial(std::move(c));
  }
  throw InputError(where + " must be a coefficient list or a z^k expression");
}

double parse_real(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return GaussianRational::parse_rational(v.get<std::string>()).get_d();
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + " must be a number");
}

Complex parse_complex(const json& v, const std::string& where) {
  if (v.is_array()) {
    if (v.size() != 2) throw InputError(where + " must be [re, im]");
    return {parse_real(v[0], where + "[0]"), parse_real(v[1], where + "[1]")};
  }
  if (v.is_string()) {
    try {
      return GaussianRational::parse(v.get<std::string>()).to_complex();
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return {parse_real(v, where), 0};
}

void check_header(const json& j, const std::string& command) {
  if (!j.is_object()) throw InputError("problem must be a JSON object");
  if (j.contains("version")) {
    if (!j["version"].is_number_integer() || j["version"].get<int>() != kSchemaVersion)
      throw InputError("unsupported version (expected " + std::to_string(kSchemaVersion) + ")");
  }
  if (j.contains("command")) {
    if (!j["command"].is_string() || j["command"].get<std::string>() != command)
      throw InputError("field 'command' must be \"" + command + "\"");
  }
}

QuadratureSpec parse_quadrature(const json& q) {
  check_keys(q, {"tol", "boundary_nodes", "radial_nodes", "refine_limit"}, "quadrature");
  QuadratureSpec s;
  auto get_int = [&](const char* key, int& dst) {
    if (!q.contains(key)) return;
    if (!q[key].is_number_integer()) throw InputError(std::string("quadrature.") + key + " must be an integer");
    dst = q[key].get<int>();
  };
  get_int("boundary_nodes", s.boundary_nodes);
  get_int("radial_nodes", s.radial_nodes);
  get_int("refine_limit", s.refine_limit);
  if (q.contains("tol")) s.tol = parse_real(q["tol"], "quadrature.tol");
  return s;
}

AnalyticFunction parse_function(const json& f, const std::string& where) {
  if (!f.is_object() || !f.contains("type") || !f["type"].is_string())
    throw InputError(where + " needs a string field 'type'");
  const std::string type = f["type"].get<std::string>();
  if (type == "polynomial") {
    check_keys(f, {"type", "coefficients", "expression"}, where);
    if (f.contains("coefficients") == f.contains("expression"))
      throw InputError(where + " needs exactly one of 'coefficients' or 'expression'");
    if (f.contains("coefficients")) {
      if (!f["coefficients"].is_array()) throw InputError(where + ".coefficients must be a list");
      return AnalyticFunction(parse_polynomial(f["coefficients"], where + ".coefficients"));
    }
    if (!f["expression"].is_string()) throw InputError(where + ".expression must be a string");
    return AnalyticFunction(parse_polynomial(f["expression"], where + ".expression"));
  }
  if (type == "series") {
    check_keys(f, {"type", "coefficients", "order"}, where);
    if (!f.contains("coefficients") || !f["coefficients"].is_array() || f["coefficients"].empty())
      throw InputError(where + ".coefficients must be a nonempty list");
    std::vector<Complex> c;
    for (std::size_t k = 0; k < f["coefficients"].size(); ++k)
      c.push_back(parse_complex(f["coefficients"][k], where + ".coefficients[" + std::to_string(k) + "]"));
    int order = static_cast<int>(c.size()) - 1;
    if (f.contains("order")) {
      if (!f["order"].is_number_integer() || f["order"].get<int>() < 0)
        throw InputError(where + ".order must be a nonnegative integer");
      order = f["order"].get<int>();
    }
    return AnalyticFunction::from_series(PowerSeries(std::move(c), order));
  }
  if (type == "blaschke") {
    check_keys(f, {"type", "zeros", "scale"}, where);
    if (!f.contains("zeros") || !f["zeros"].is_array()) throw InputError(where + ".zeros must be a list");
    std::vector<BlaschkeZero> zs;
    for (std::size_t k = 0; k < f["zeros"].size(); ++k) {
      const std::string w = where + ".zeros[" + std::to_string(k) + "]";
      const json& z = f["zeros"][k];
      check_keys(z, {"at", "multiplicity"}, w);
      if (!z.contains("at")) throw InputError(w + " needs field 'at'");
      int m = 1;
      if (z.contains("multiplicity")) {
        if (!z["multiplicity"].is_number_integer()) throw InputError(w + ".multiplicity must be an integer");
        m = z["multiplicity"].get<int>();
      }
      zs.push_back({parse_complex(z["at"], w + ".at"), m});
    }
    const Complex scale = f.contains("scale") ? parse_complex(f["scale"], where + ".scale") : Complex(1.0);
    try {
      return AnalyticFunction::from_blaschke(blaschke_from_zeros(Domain::unit_disk(), zs), scale);
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ".type must be polynomial, series or blaschke");
}

std::string theorem_name(const std::string& t) {
  if (t == "1") return "theorem1";
  if (t == "2") return "theorem2";
  if (t == "4") return "theorem4";
  if (t == "prop3a" || t == "prop3b") return t;
  throw InputError("unknown theorem '" + t + "' (expected 1, 2, prop3a, prop3b or 4)");
}

int status_exit(Status s) {
  switch (s) {
    case Status::kHolds:
    case Status::kEquality:
      return kExitOk;
    case Status::kHypothesisViolated:
      return kExitHypothesis;
    case Status::kFails:
      return kExitInconsistent;
  }
  return kExitInconsistent;
}

QuadratureSpec apply_options(QuadratureSpec s, const Options& o) {
  if (o.tol) s.tol = *o.tol;
  if (o.boundary_nodes) s.boundary_nodes = *o.boundary_nodes;
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("quadrature: ") + e.what());
  }
  return s;
}

json spec_json(const QuadratureSpec& s) {
  return {{"boundary_nodes", s.boundary_nodes},
          {"radial_nodes", s.radial_nodes},
          {"refine_limit", s.refine_limit},
          {"tol", s.tol}};
}

json domain_json(const Domain& d) {
  return {{"center", {d.center().real(), d.center().imag()}}, {"radius", d.radius()}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Runs body and maps the error types onto exit codes.
template <typename F>
Result guarded(F&& body) {
  Result r;
  try {
    return body();
  } catch (const InputError& e) {
    r.exit_code = kExitInput;
    r.error = e.what();
  } catch (const HypothesisViolation& e) {
    r.exit_code = kExitHypothesis;
    r.error = std::string("hypothesis violated: ") + e.what();
  } catch (const Inconsistency& e) {
    r.exit_code = kExitInconsistent;
    r.error = std::string("internal inconsistency: ") + e.what();
  } catch (const ConvergenceFailure& e) {
    r.exit_code = kExitInconsistent;
    r.error = std::string(e.what()) + " (last " + shortest(e.last_estimate()) + ", previous " +
              shortest(e.previous_estimate()) + ")";
  } catch (const RootFindingFailure& e) {
    r.exit_code = kExitInconsistent;
    r.error = e.what();
  } catch (const std::invalid_argument& e) {
    r.exit_code = kExitInput;
    r.error = e.what();
  } catch (const std::domain_error& e) {
    r.exit_code = kExitInput;
    r.error = e.what();
  }
  return r;
}

// "a/b", "c/d i" or "a/b+c/d i".
std::string coefficient_string(const GaussianRational& x) {
  if (sgn(x.im()) == 0) return x.re().get_str();
  const std::string im = x.im().get_str() + "i";
  if (sgn(x.re()) == 0) return im;
  return x.re().get_str() + (sgn(x.im()) > 0 ? "+" : "") + im;
}

json polynomial_json(const Polynomial& p) {
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(coefficient_string(x));
  return c;
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

MasonProblem parse_mason_problem(const json& j) {
  check_header(j, "mason");
  check_keys(j, {"version", "command", "a", "b", "polynomials"}, "problem");
  MasonProblem p;
  const bool pair = j.contains("a") || j.contains("b");
  if (pair == j.contains("polynomials")) throw InputError("give either 'a' and 'b' or 'polynomials'");
  if (pair) {
    if (!j.contains("a") || !j.contains("b")) throw InputError("both 'a' and 'b' are required");
    p.polynomials = {parse_polynomial(j["a"], "a"), parse_polynomial(j["b"], "b")};
    return p;
  }
  const json& ps = j["polynomials"];
  if (!ps.is_array() || ps.size() < 2) throw InputError("'polynomials' must list at least two polynomials");
  for (std::size_t k = 0; k < ps.size(); ++k)
    p.polynomials.push_back(parse_polynomial(ps[k], "polynomials[" + std::to_string(k) + "]"));
  p.mason = false;
  return p;
}

VerifyProblem parse_verify_problem(const json& j) {
  check_header(j, "verify");
  check_keys(j, {"version", "command", "domain", "functions", "theorem", "alpha", "quadrature"}, "problem");
  VerifyProblem p;
  if (j.contains("domain")) {
    const json& d = j["domain"];
    check_keys(d, {"center", "radius"}, "domain");
    const Complex c = d.contains("center") ? parse_complex(d["center"], "domain.center") : Complex(0, 0);
    const double r = d.contains("radius") ? parse_real(d["radius"], "domain.radius") : 1.0;
    try {
      p.domain = Domain(c, r);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("domain: ") + e.what());
    }
  }
  if (!j.contains("functions") || !j["functions"].is_array() || j["functions"].size() < 2)
    throw InputError("'functions' must list at least two functions f_0, f_1");
  for (std::size_t k = 0; k < j["functions"].size(); ++k)
    p.functions.push_back(parse_function(j["functions"][k], "functions[" + std::to_string(k) + "]"));
  if (j.contains("theorem")) {
    const json& t = j["theorem"];
    if (t.is_number_integer()) p.theorem = std::to_string(t.get<int>());
    else if (t.is_string()) p.theorem = t.get<std::string>();
    else throw InputError("'theorem' must be a string or an integer");
  }
  if (j.contains("alpha")) p.alpha = parse_real(j["alpha"], "alpha");
  if (j.contains("quadrature")) p.quadrature = parse_quadrature(j["quadrature"]);
  return p;
}

json to_json(const VerificationReport& r) {
  json j;
  j["theorem"] = r.theorem;
  j["status"] = to_string(r.status);
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  j["slack"] = number(r.slack);
  j["equality_tol"] = kEqualityTol;
  if (r.n_bigB || r.n_calB) {
    json c;
    if (r.n_bigB) c["N_bigB"] = *r.n_bigB;
    if (r.n_calB) c["N_calB"] = *r.n_calB;
    j["counts"] = c;
  }
  if (r.functionals) {
    const auto& f = *r.functionals;
    json fj;
    fj["lambda_sq"] = number(f.lambda_sq);
    fj["mu"] = number(f.mu);
    fj["kappa"] = number(f.kappa);
    fj["lambda_alpha_sq"] = f.lambda_alpha_sq ? number(*f.lambda_alpha_sq) : json(nullptr);
    j["functionals"] = fj;
    j["quadrature_diagnostics"] = {{"boundary_inf", number(f.diagnostics.boundary_inf)},
                                   {"boundary_sup", number(f.diagnostics.boundary_sup)},
                                   {"area_error", number(f.diagnostics.area_error)},
                                   {"boundary_error", number(f.diagnostics.boundary_error)}};
  }
  if (!r.values.empty()) {
    json v;
    for (const auto& [k, x] : r.values) v[k] = number(x);
    j["values"] = v;
  }
  j["diagnostics"] = r.diagnostics;
  return j;
}

json to_json(const LimitTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows)
    rows.push_back({{"R", row.radius},
                    {"kappa", row.skipped ? json(nullptr) : number(row.kappa)},
                    {"mu", row.skipped ? json(nullptr) : number(row.mu)},
                    {"skipped", row.skipped}});
  return {{"degree", t.degree},
          {"rows", rows},
          {"kappa_ok", t.kappa_ok},
          {"mu_ok", t.mu_ok},
          {"monotone", t.monotone},
          {"warnings", t.warnings}};
}

json to_json(const Divisibility& d) {
  return {{"ok", d.ok},
          {"exact", d.exact},
          {"max_remainder", number(d.max_remainder)},
          {"modulus_gap", number(d.modulus_gap)},
          {"boundary_samples", d.boundary_samples}};
}

std::string csv_header() { return "theorem,status,lhs,rhs,slack,lambda_sq,mu,kappa,lambda_alpha_sq,N_bigB,N_calB\n"; }

std::string to_csv_row(const VerificationReport& r) {
  std::ostringstream os;
  auto opt = [&](std::optional<double> x) { return x ? shortest(*x) : std::string(); };
  std::optional<double> lambda_sq, mu, kappa, lambda_alpha = r.value("lambda_alpha_sq");
  if (r.functionals) {
    lambda_sq = r.functionals->lambda_sq;
    mu = r.functionals->mu;
    kappa = r.functionals->kappa;
    if (r.functionals->lambda_alpha_sq) lambda_alpha = r.functionals->lambda_alpha_sq;
  } else {
    mu = r.value("mu");
  }
  os << r.theorem << ',' << to_string(r.status) << ',' << shortest(r.lhs) << ',' << shortest(r.rhs) << ','
     << shortest(r.slack) << ',' << opt(lambda_sq) << ',' << opt(mu) << ',' << opt(kappa) << ','
     << opt(lambda_alpha) << ',' << (r.n_bigB ? std::to_string(*r.n_bigB) : "") << ','
     << (r.n_calB ? std::to_string(*r.n_calB) : "") << '\n';
  return os.str();
}

std::string to_csv(const LimitTable& t) {
  std::ostringstream os;
  os << "R,kappa,mu,skipped\n";
  for (const auto& row : t.rows)
    os << shortest(row.radius) << ',' << (row.skipped ? "" : shortest(row.kappa)) << ','
       << (row.skipped ? "" : shortest(row.mu)) << ',' << (row.skipped ? "true" : "false") << '\n';
  return os.str();
}

Result cmd_mason(const std::string& text, const Options& opts) {
  return guarded([&] {
    const MasonProblem p = parse_mason_problem(parse_json(text));
    const std::string name = p.mason ? "mason" : "n_theorem";
    Result res;
    IntegerInequality r;
    try {
      r = p.mason ? mason_check(p.polynomials[0], p.polynomials[1]) : n_theorem_check(p.polynomials);
    } catch (const HypothesisViolation& e) {
      if (opts.format == Format::kCsv) {
        res.output = "theorem,lhs,rhs,holds\n" + name + ",,,\n";
      } else {
        json j;
        j["command"] = "mason";
        j["theorem"] = name;
        j["status"] = "hypothesis_violated";
        j["diagnostics"] = {e.what()};
        res.output = dump(j);
      }
      res.exit_code = kExitHypothesis;
      res.error = std::string("hypothesis violated: ") + e.what();
      return res;
    }
    if (opts.format == Format::kCsv) {
      res.output = "theorem,lhs,rhs,holds\n" + name + "," + std::to_string(r.lhs) + "," + std::to_string(r.rhs) +
                   "," + (r.holds ? "true" : "false") + "\n";
    } else {
      json j;
      j["command"] = "mason";
      j["theorem"] = name;
      j["lhs"] = r.lhs;
      j["rhs"] = r.rhs;
      j["holds"] = r.holds;
      j["status"] = r.holds ? "holds" : "fails";
      res.output = dump(j);
    }
    res.exit_code = r.holds ? kExitOk : kExitInconsistent;
    return res;
  });
}

Result cmd_verify(const std::string& text, const std::string& theorem, const Options& opts) {
  Result res = guarded([&] {
    const VerifyProblem p = parse_verify_problem(parse_json(text));
    const std::string t = !theorem.empty() ? theorem : p.theorem.value_or("");
    if (t.empty()) throw InputError("no theorem given (use --theorem or the 'theorem' field)");
    const std::string name = theorem_name(t);
    const QuadratureSpec spec = apply_options(p.quadrature, opts);
    const double alpha = opts.alpha ? *opts.alpha : p.alpha.value_or(0.5);

    json out;
    out["command"] = "verify";
    out["domain"] = domain_json(p.domain);
    out["n"] = static_cast<int>(p.functions.size()) - 1;
    out["quadrature"] = spec_json(spec);
    Result r;
    AnalyticSystem sys;
    try {
      sys = build_system(p.functions, p.domain, spec);
    } catch (const HypothesisViolation& e) {
      out["report"] = to_json(hypothesis_report(name, e.what()));
      r.output = opts.format == Format::kCsv ? csv_header() + to_csv_row(hypothesis_report(name, e.what()))
                                             : dump(out);
      r.exit_code = kExitHypothesis;
      r.error = std::string("hypothesis violated: ") + e.what();
      return r;
    }
    VerificationReport report;
    try {
      if (name == "theorem1") report = verify_theorem1(sys, spec);
      else if (name == "theorem2") report = verify_theorem2(sys, spec);
      else if (name == "prop3a") report = verify_prop3(sys, spec, Prop3Variant::kA);
      else if (name == "prop3b") report = verify_prop3(sys, spec, Prop3Variant::kB);
      else report = verify_theorem4(sys, alpha, spec);
    } catch (const HypothesisViolation& e) {
      report = hypothesis_report(name, e.what());
    }
    if (sys.w_exact) out["wronskian"] = polynomial_json(*sys.w_exact);
    out["report"] = to_json(report);
    std::string divisibility_error;
    if (report.status != Status::kHypothesisViolated) {
      try {
        out["divisibility"] = to_json(check_divisibility(sys, spec));
      } catch (const Inconsistency& e) {
        divisibility_error = e.what();
        out["divisibility"] = {{"ok", false}, {"error", divisibility_error}};
      }
    }
    r.output = opts.format == Format::kCsv ? csv_header() + to_csv_row(report) : dump(out);
    r.exit_code = status_exit(report.status);
    if (r.exit_code == kExitHypothesis) r.error = "hypothesis violated: " + report.diagnostics.back();
    if (r.exit_code == kExitInconsistent) r.error = report.theorem + " reported fails";
    if (!divisibility_error.empty()) {
      r.exit_code = kExitInconsistent;
      r.error = "internal inconsistency: " + divisibility_error;
    }
    return r;
  });
  return res;
}

Result cmd_demo(const std::string& which, const Options& opts) {
  return guarded([&] {
    const QuadratureSpec spec = apply_options(QuadratureSpec{}, opts);
    std::vector<VerificationReport> reports;
    json out;
    out["command"] = "demo";
    out["demo"] = which;
    Result r;
    if (which == "example1" || which == "example2") {
      const int k = which == "example1" ? 1 : 2;
      ExampleParams p = default_example_params(k);
      if (opts.n) p.n = *opts.n;
      if (opts.m) p.m = *opts.m;
      if (opts.eps) {
        try {
          p.eps = GaussianRational::parse_rational(*opts.eps);
        } catch (const std::invalid_argument& e) {
          throw InputError(std::string("--eps: ") + e.what());
        }
      }
      out["parameters"] = {{"n", p.n}, {"eps", p.eps.get_str()}};
      if (k == 2) out["parameters"]["m"] = p.m;
      const ExampleRun run = run_example(k, p, spec);
      reports = {run.theorem1, run.theorem2, verify_prop3(run.system, spec, Prop3Variant::kA),
                 verify_prop3(run.system, spec, Prop3Variant::kB)};
      out["wronskian"] = polynomial_json(*run.system.w_exact);
      out["divisibility"] = to_json(check_divisibility(run.system, spec));
    } else if (which == "limit") {
      const std::vector<double> radii = opts.radii.empty() ? std::vector<double>{2, 5, 10, 50, 100} : opts.radii;
      const Polynomial w = Polynomial::parse_sugar("z^3+1");
      const LimitTable t = limit_demo(w, radii, spec);
      out["W"] = polynomial_json(w);
      out["table"] = to_json(t);
      r.output = opts.format == Format::kCsv ? to_csv(t) : dump(out);
      r.exit_code = (t.kappa_ok && t.mu_ok) ? kExitOk : kExitInconsistent;
      if (r.exit_code != kExitOk) r.error = "limit table out of its asymptotic bounds";
      return r;
    } else if (which == "lemmas") {
      const std::uint64_t seed = corpus_seed();
      out["seed"] = seed;
      for (const auto& c : lemma_corpus(seed)) {
        reports.push_back(verify_carleson_formula(c.f, c.theta, spec));
        reports.push_back(verify_vs_inequality(c.f, c.theta, spec));
      }
      for (double alpha : {0.25, 0.5, 0.75})
        for (int K = 1; K <= 8; ++K) reports.push_back(verify_dalpha_comparability(radial_blaschke(K), alpha, spec));
    } else {
      throw InputError("unknown demo '" + which + "' (expected example1, example2, limit or lemmas)");
    }
    json arr = json::array();
    for (const auto& rep : reports) arr.push_back(to_json(rep));
    out["reports"] = arr;
    if (opts.format == Format::kCsv) {
      r.output = csv_header();
      for (const auto& rep : reports) r.output += to_csv_row(rep);
    } else {
      r.output = dump(out);
    }
    r.exit_code = kExitOk;
    for (const auto& rep : reports) r.exit_code = std::max(r.exit_code, status_exit(rep.status));
    if (r.exit_code != kExitOk) r.error = "some reports did not hold";
    return r;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"abca: local abc-type theorems for analytic functions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  std::string out_path;
  std::string format = "json";
  app.add_option("--tol", opts.tol, "Quadrature tolerance");
  app.add_option("--boundary-nodes", opts.boundary_nodes, "Initial boundary nodes (power of two, >= 64)");
  app.add_option("--alpha", opts.alpha, "Exponent for Theorem 4, in (0, 1)");
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));

  std::string file;
  std::string theorem;
  std::string demo;
  auto* mason = app.add_subcommand("mason", "Mason-Stothers or n-theorem check of a problem file");
  mason->add_option("file", file, "Problem file ('-' for stdin)")->required();
  auto* verify = app.add_subcommand("verify", "Build the system of a problem file and check a theorem");
  verify->add_option("file", file, "Problem file ('-' for stdin)")->required();
  verify->add_option("--theorem", theorem, "1, 2, prop3a, prop3b or 4");
  auto* demo_cmd = app.add_subcommand("demo", "Built-in demonstrations");
  demo_cmd->add_option("which", demo, "example1, example2, limit or lemmas")->required();
  demo_cmd->add_option("--n", opts.n, "n for the examples");
  demo_cmd->add_option("--m", opts.m, "m for Example 2");
  demo_cmd->add_option("--eps", opts.eps, "epsilon as an exact decimal or fraction");
  demo_cmd->add_option("--radii", opts.radii, "radius schedule for the limit demo");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "abca: " << e.what() << "\n";
    return kExitInput;
  }
  opts.format = format == "csv" ? Format::kCsv : Format::kJson;

  try {
    corpus_seed();
  } catch (const std::invalid_argument& e) {
    err << "abca: " << e.what() << "\n";
    return kExitInput;
  }

  auto read_input = [&](std::string& text) {
    if (file == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
      return true;
    }
    std::ifstream in(file);
    if (!in) return false;
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return true;
  };

  Result res;
  if (mason->parsed() || verify->parsed()) {
    std::string text;
    if (!read_input(text)) {
      err << "abca: cannot read " << file << "\n";
      return kExitInput;
    }
    res = mason->parsed() ? cmd_mason(text, opts) : cmd_verify(text, theorem, opts);
  } else {
    res = cmd_demo(demo, opts);
  }

  if (!res.output.empty()) {
    if (out_path.empty()) {
      out << res.output;
    } else {
      std::ofstream f(out_path);
      if (!(f << res.output)) {
        err << "abca: cannot write " << out_path << "\n";
        return kExitInput;
      }
    }
  }
  if (!res.error.empty()) err << "abca: " << res.error << "\n";
  return res.exit_code;
}

}  // namespace abca::cli
