// Batch front-end: spectrum | verify | solve | moments.
// Exit status: 0 all checks pass, 1 verification failure, 2 usage or parse error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fock/dbar.hpp"
#include "fock/general_d.hpp"
#include "fock/io.hpp"
#include "fock/random.hpp"
#include "fock/weighted.hpp"

namespace {

using fock::io::Json;

struct UsageError : std::invalid_argument {
  UsageError(const std::string& field, const std::string& why)
      : std::invalid_argument("invalid '" + field + "': " + why) {}
};

struct RunConfig {
  std::string command;
  std::string suite;
  std::string kind;
  std::optional<long> n;
  std::optional<long> p;
  int mmax = 4;
  std::optional<int> cutoff;
  int degree = 3;
  int cases = 20;
  std::optional<int> window;
  int kmax = 6;
  bool verify = false;
  std::string weight;
  std::string ops;
  std::string input;
  std::string out;
  std::string format;
  std::optional<double> tolerance;
  std::uint64_t seed = 1;
};

struct Outcome {
  Json report;
  bool pass = true;
  std::string csv;  // filled when the command supports CSV
};

std::size_t require_n(const RunConfig& c, long fallback) {
  long n = c.n.value_or(fallback);
  if (n < 1) throw UsageError("n", "must be at least 1");
  if (n > 8) throw UsageError("n", "at most 8 variables are supported");
  return static_cast<std::size_t>(n);
}

std::size_t require_p(const RunConfig& c, std::size_t n, long fallback, long min_p) {
  long p = c.p.value_or(fallback);
  if (p < min_p) throw UsageError("p", "must be at least " + std::to_string(min_p));
  if (p > static_cast<long>(n)) throw UsageError("p", "form degree " + std::to_string(p) + " exceeds n = " + std::to_string(n));
  return static_cast<std::size_t>(p);
}

double tolerance(const RunConfig& c, double fallback) {
  double t = c.tolerance.value_or(fallback);
  if (!(t >= 0)) throw UsageError("tolerance", "must be non-negative");
  return t;
}

std::vector<std::string> split_ops(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

fock::DOperator read_ops(const RunConfig& c, std::size_t n) {
  try {
    if (!c.ops.empty() && c.ops.front() == '{') {
      auto d = fock::io::d_operator_from_json(fock::io::parse_text(c.ops));
      if (d.dim() != n) throw UsageError("ops", "operator dimension differs from n");
      return d;
    }
    return fock::parse_d_operator(split_ops(c.ops), n);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("ops", e.what());
  }
}

std::size_t ops_dim(const RunConfig& c) {
  if (!c.ops.empty() && c.ops.front() == '{') {
    try {
      auto j = fock::io::parse_text(c.ops);
      if (j.contains("n") && j["n"].is_number_integer()) return j["n"].get<std::size_t>();
    } catch (const std::exception& e) {
      throw UsageError("ops", e.what());
    }
    throw UsageError("ops", "JSON operator needs an integer \"n\"");
  }
  return split_ops(c.ops).size();
}

fock::RadialPolyWeight read_weight(const RunConfig& c, std::size_t n_default) {
  if (c.weight.empty()) return fock::RadialPolyWeight::gaussian(n_default);
  try {
    return fock::parse_weight(c.weight);
  } catch (const std::exception& e) {
    throw UsageError("weight", e.what());
  }
}

// ---------------------------------------------------------------- spectrum

Outcome cmd_spectrum(const RunConfig& c) {
  const std::size_t n = require_n(c, 1);
  const std::size_t p = require_p(c, n, 0, 0);
  if (c.mmax < 0) throw UsageError("mmax", "must be non-negative");
  Outcome o;
  auto table = fock::spectrum_table(n, p, c.mmax);
  o.report = {{"command", "spectrum"}, {"n", n}, {"p", p}, {"mmax", c.mmax}, {"table", fock::io::to_json(table)}};
  Json warnings = Json::array();
  if (p == 0) {
    std::string w = "0 is in the spectrum: the Laplacian on functions is not invertible";
    std::cerr << "warning: " << w << "\n";
    warnings.push_back(w);
  }
  o.report["warnings"] = warnings;
  o.csv = fock::io::spectrum_csv(table);
  if (c.verify) {
    const int cutoff = c.cutoff.value_or(std::min(c.mmax, 5));
    if (cutoff < 0) throw UsageError("cutoff", "must be non-negative");
    if (cutoff > c.mmax) throw UsageError("cutoff", "must not exceed mmax");
    const double tol = tolerance(c, 1e-9);
    auto ev = fock::linalg::hermitian_eigenvalues(fock::assemble_box_matrix(n, p, cutoff));
    std::vector<double> expected;
    for (int m = 0; m <= cutoff; ++m) {
      for (long k = 0; k < table[m].multiplicity.get_si(); ++k) expected.push_back(static_cast<double>(table[m].eigenvalue));
    }
    double max_err = ev.size() == expected.size() ? 0.0 : INFINITY;
    for (std::size_t i = 0; i < std::min(ev.size(), expected.size()); ++i) max_err = std::max(max_err, std::abs(ev[i] - expected[i]));
    o.pass = max_err < tol;
    o.report["verify"] = {{"cutoff", cutoff}, {"size", ev.size()}, {"max_abs_error", max_err}, {"tolerance", tol}, {"pass", o.pass}};
    o.csv += "# verify cutoff=" + std::to_string(cutoff) + " pass=" + (o.pass ? "true" : "false") + "\n";
  }
  o.report["pass"] = o.pass;
  return o;
}

// ------------------------------------------------------------------ verify

struct CaseRow {
  Json json;
  bool pass;
  double residual;
};

Outcome finish_cases(Json report, const std::vector<CaseRow>& rows) {
  Outcome o;
  Json cases = Json::array();
  std::ostringstream csv;
  csv << "case,pass,residual\n";
  csv.precision(17);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    cases.push_back(rows[i].json);
    o.pass = o.pass && rows[i].pass;
    csv << i << "," << (rows[i].pass ? "true" : "false") << "," << rows[i].residual << "\n";
  }
  report["cases"] = cases;
  report["pass"] = o.pass;
  o.report = std::move(report);
  o.csv = csv.str();
  return o;
}

Outcome verify_basic_estimate(const RunConfig& c) {
  const bool with_ops = !c.ops.empty();
  const std::size_t n = require_n(c, with_ops ? static_cast<long>(ops_dim(c)) : 2);
  const std::size_t p = require_p(c, n, 1, 1);
  fock::FormSampler rng(c.seed);
  Json report = {{"suite", "basic-estimate"}, {"n", n}, {"p", p}, {"degree", c.degree}, {"seed", c.seed}};
  std::vector<CaseRow> rows;
  if (!with_ops) {
    for (int i = 0; i < c.cases; ++i) {
      auto u = rng.form(n, p, c.degree);
      auto t = fock::energy_terms(u);
      bool identity = t.residual().is_zero();
      auto p_norm = t.norm_sq.scaled(fock::Rational(static_cast<long>(p)));
      bool estimate = fock::exact_less_equal(p_norm, t.lhs);
      rows.push_back({{{"lhs", fock::io::to_json(t.lhs)},
                       {"p_norm_sq", fock::io::to_json(p_norm)},
                       {"identity_residual", fock::io::to_json(t.residual())},
                       {"identity_exact", identity},
                       {"estimate_holds", estimate},
                       {"pass", identity && estimate}},
                      identity && estimate,
                      t.residual().to_double()});
    }
    return finish_cases(report, rows);
  }
  auto d = read_ops(c, n);
  auto cert = fock::estimate_constant(d, p, c.degree);
  report["ops"] = c.ops;
  report["certificate"] = fock::io::to_json(cert);
  if (!cert.certified || *cert.certified <= 0) {
    report["pass"] = false;
    report["reason"] = "no positive exact lower bound for the commutator form on the window";
    return {report, false, "case,pass,residual\n"};
  }
  for (int i = 0; i < c.cases; ++i) {
    auto u = rng.form(n, p, c.degree);
    auto t = fock::d_energy_terms(d, u);
    auto lower = fock::norm_sq_form(u).scaled(*cert.certified);
    bool identity = t.residual().is_zero();
    bool estimate = fock::exact_less_equal(lower, t.lhs);
    rows.push_back({{{"lhs", fock::io::to_json(t.lhs)},
                     {"c_norm_sq", fock::io::to_json(lower)},
                     {"identity_exact", identity},
                     {"estimate_holds", estimate},
                     {"pass", identity && estimate}},
                    identity && estimate,
                    t.residual().to_double()});
  }
  return finish_cases(report, rows);
}

Outcome verify_kohn_morrey(const RunConfig& c) {
  auto weight = read_weight(c, static_cast<std::size_t>(c.n.value_or(1)));
  const std::size_t n = weight.dim();
  if (c.n && static_cast<std::size_t>(*c.n) != n) throw UsageError("n", "differs from the weight dimension");
  const std::size_t p = require_p(c, n, 1, 0);
  const double tol = tolerance(c, 1e-8);
  fock::MomentTable moments(weight);
  fock::FormSampler rng(c.seed);
  Json report = {{"suite", "kohn-morrey"}, {"n", n}, {"p", p}, {"weight", weight.to_string()},
                 {"degree", c.degree}, {"seed", c.seed}, {"tolerance", tol}};
  std::vector<CaseRow> rows;
  for (int i = 0; i < c.cases; ++i) {
    fock::PFormF u(n, p);
    if (i == 0) {
      fock::FormIndex J;
      for (std::size_t k = 0; k < p; ++k) J.push_back(static_cast<int>(k));
      u.add(J, fock::HoloPolyF::constant(n, 1.0));
    } else {
      u = fock::to_float(rng.form(n, p, c.degree));
    }
    auto r = fock::kohn_morrey_report(u, moments);
    const double s = r.scale();
    bool pass = std::abs(r.residual) <= tol * s && r.torsion >= -tol * s &&
                std::abs(r.torsion - r.torsion_alt1) <= tol * s && std::abs(r.torsion - r.torsion_alt2) <= tol * s;
    Json j = fock::io::to_json(r);
    j["form"] = fock::io::to_json(u);
    j["pass"] = pass;
    rows.push_back({j, pass, r.residual});
  }
  return finish_cases(report, rows);
}

Outcome verify_energy_identity(const RunConfig& c) {
  const bool with_ops = !c.ops.empty();
  const std::size_t n = require_n(c, with_ops ? static_cast<long>(ops_dim(c)) : 2);
  const std::size_t p = require_p(c, n, 1, 0);
  fock::FormSampler rng(c.seed);
  Json report = {{"suite", "energy-identity"}, {"n", n}, {"p", p}, {"degree", c.degree}, {"seed", c.seed}};
  std::vector<CaseRow> rows;
  std::optional<fock::DOperator> d;
  if (with_ops) {
    d = read_ops(c, n);
    report["ops"] = c.ops;
  }
  for (int i = 0; i < c.cases; ++i) {
    auto u = rng.form(n, p, c.degree);
    if (d) {
      auto t = fock::d_energy_terms(*d, u);
      bool ok = t.residual().is_zero();
      rows.push_back({{{"lhs", fock::io::to_json(t.lhs)},
                       {"pure_term", fock::io::to_json(t.pure_term)},
                       {"commutator_term", fock::io::to_json(t.commutator_term)},
                       {"residual", fock::io::to_json(t.residual())},
                       {"pass", ok}},
                      ok,
                      t.residual().to_double()});
    } else {
      auto t = fock::energy_terms(u);
      bool ok = t.residual().is_zero();
      rows.push_back({{{"lhs", fock::io::to_json(t.lhs)},
                       {"derivative_term", fock::io::to_json(t.derivative_term)},
                       {"p_norm_term", fock::io::to_json(t.p_norm_term)},
                       {"residual", fock::io::to_json(t.residual())},
                       {"pass", ok}},
                      ok,
                      t.residual().to_double()});
    }
  }
  return finish_cases(report, rows);
}

Outcome verify_commutation(const RunConfig& c) {
  const std::size_t n = require_n(c, 2);
  const std::size_t p = require_p(c, n, 1, 1);
  fock::FormSampler rng(c.seed);
  Json report = {{"suite", "commutation"}, {"n", n}, {"p", p}, {"degree", c.degree}, {"seed", c.seed}};
  std::vector<CaseRow> rows;
  const fock::Rational pq(static_cast<long>(p));
  for (int i = 0; i < c.cases; ++i) {
    auto u = rng.form(n, p, c.degree);
    auto nu = fock::neumann(u);
    Json j;
    bool ok = true;
    auto check = [&](const char* name, bool value) {
      j[name] = value;
      ok = ok && value;
    };
    check("box_neumann_identity", fock::box(nu) == u);
    check("neumann_box_identity", fock::neumann(fock::box(u)) == u);
    check("neumann_contracts", fock::exact_less_equal(fock::norm_sq_form(nu).scaled(pq * pq), fock::norm_sq_form(u)));
    if (p < n) check("neumann_commutes_with_partial", fock::neumann(fock::partial(u)) == fock::partial(nu));
    if (p >= 2) {
      check("neumann_commutes_with_adjoint", fock::neumann(fock::partial_star(u)) == fock::partial_star(nu));
    }
    auto alpha = fock::partial(rng.form(n, p - 1, c.degree + 1));
    if (!alpha.is_zero()) {
      auto u0 = fock::solve_partial(alpha);
      check("canonical_solution_bound", fock::exact_less_equal(fock::norm_sq_form(u0).scaled(pq), fock::norm_sq_form(alpha)));
      check("canonical_solution_solves", fock::partial(u0) == alpha);
    }
    j["pass"] = ok;
    rows.push_back({j, ok, ok ? 0.0 : 1.0});
  }
  return finish_cases(report, rows);
}

Outcome cmd_verify(const RunConfig& c) {
  if (c.cases < 1) throw UsageError("cases", "must be at least 1");
  if (c.degree < 0) throw UsageError("degree", "must be non-negative");
  if (c.suite == "basic-estimate") return verify_basic_estimate(c);
  if (c.suite == "kohn-morrey") return verify_kohn_morrey(c);
  if (c.suite == "energy-identity") return verify_energy_identity(c);
  if (c.suite == "commutation") return verify_commutation(c);
  throw UsageError("suite", "unknown suite '" + c.suite + "'");
}

// ------------------------------------------------------------------- solve

fock::PForm read_input_form(const RunConfig& c) {
  if (c.input.empty()) throw UsageError("input", "a PForm JSON file is required");
  try {
    return fock::io::pform_from_json(fock::io::read_file(c.input));
  } catch (const std::invalid_argument& e) {
    throw UsageError("input", e.what());
  }
}

Outcome cmd_solve(const RunConfig& c, Json& solution) {
  if (c.format == "csv") throw UsageError("format", "solve reports are JSON only");
  auto rhs = read_input_form(c);
  Outcome o;
  o.report = {{"command", "solve"}, {"kind", c.kind}, {"n", rhs.dim()}, {"p", rhs.degree()}};
  try {
    if (c.kind == "dbar") {
      if (rhs.degree() == 0) throw UsageError("input.p", "right-hand side must have p >= 1");
      auto s = fock::solve_partial_report(rhs);
      const double ratio_sq = s.alpha_norm_sq.is_zero() ? 0.0 : s.u0_norm_sq.to_double() / s.alpha_norm_sq.to_double();
      bool within = fock::exact_less_equal(s.u0_norm_sq.scaled(fock::Rational(static_cast<long>(rhs.degree()))), s.alpha_norm_sq);
      o.pass = s.residual.is_zero() && s.orthogonal() && within;
      o.report["residual_exact_zero"] = s.residual.is_zero();
      o.report["u0_norm_sq"] = fock::io::to_json(s.u0_norm_sq);
      o.report["alpha_norm_sq"] = fock::io::to_json(s.alpha_norm_sq);
      o.report["norm_ratio"] = std::sqrt(ratio_sq);
      o.report["norm_bound"] = 1.0 / std::sqrt(static_cast<double>(rhs.degree()));
      o.report["within_bound"] = within;
      o.report["kernel_basis_size"] = s.kernel_pairings.size();
      o.report["kernel_orthogonal_exact"] = s.orthogonal();
      solution = fock::io::to_json(s.u0);
    } else {
      if (c.ops.empty()) throw UsageError("ops", "required for solve " + c.kind);
      auto d = read_ops(c, rhs.dim());
      const int deg = rhs.max_poly_degree().value_or(0);
      const int window = c.window.value_or(std::max(deg + 2, 8));
      if (window < deg) throw UsageError("window", "below the degree of the input");
      const double tol = tolerance(c, 1e-8);
      auto s = c.kind == "d" ? fock::solve_canonical_D(d, rhs, window) : fock::solve_canonical_Dstar(d, rhs, window);
      double max_defect = 0;
      for (const auto& k : s.kernel_pairings) max_defect = std::max(max_defect, std::abs(k));
      const double c_const = s.certificate.constant.value_or(INFINITY);
      bool within = s.norm_ratio() * s.norm_ratio() <= c_const * (1 + 1e-12);
      o.report["ops"] = c.ops;
      o.report["window"] = window;
      o.report["exact"] = s.exact;
      o.report["residual_norm"] = s.residual_norm;
      o.report["previous_residual"] = s.previous_residual ? Json(*s.previous_residual) : Json(nullptr);
      o.report["converged"] = s.converged;
      o.report["kernel_basis_size"] = s.kernel_pairings.size();
      o.report["kernel_max_defect"] = max_defect;
      if (s.exact) o.report["kernel_orthogonal_exact"] = s.exactly_orthogonal;
      o.report["norm_ratio"] = s.norm_ratio();
      o.report["norm_bound_sqrt_C"] = std::sqrt(c_const);
      o.report["within_bound"] = within;
      o.report["certificate"] = fock::io::to_json(s.certificate);
      o.report["tolerance"] = tol;
      if (s.exact) {
        o.pass = s.converged && s.exactly_orthogonal && within;
        solution = fock::io::to_json(*s.exact_solution);
      } else {
        o.pass = s.converged && s.residual_norm <= tol * (1 + s.rhs_norm) && max_defect <= tol && within;
        solution = fock::io::to_json(s.solution);
      }
    }
  } catch (const fock::NotClosedError& e) {
    o.pass = false;
    o.report["error"] = e.what();
    o.report["closedness_residual"] = fock::io::to_json(e.residual());
    o.report["closedness_residual_norm"] = e.residual_norm();
    std::cerr << "error: " << e.what() << " (residual norm " << e.residual_norm() << ")\n";
  } catch (const std::domain_error& e) {
    if (dynamic_cast<const fock::FormDegreeError*>(&e)) throw UsageError("input.p", e.what());
    o.pass = false;
    o.report["error"] = e.what();
    std::cerr << "error: " << e.what() << "\n";
  }
  o.report["pass"] = o.pass;
  return o;
}

// ----------------------------------------------------------------- moments

Outcome cmd_moments(const RunConfig& c) {
  auto weight = read_weight(c, static_cast<std::size_t>(c.n.value_or(1)));
  if (c.kmax < 0) throw UsageError("kmax", "must be non-negative");
  const double tol = tolerance(c, 1e-9);
  fock::MomentTable closed(weight);
  fock::MomentTable quad(weight, fock::MomentMethod::Quadrature);
  Outcome o;
  Json rows = Json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "variable,k,closed_form,quadrature,relative_difference\n";
  for (std::size_t j = 0; j < weight.dim(); ++j) {
    for (int k = 0; k <= c.kmax; ++k) {
      const double a = closed.moment(j, k);
      const double b = quad.moment(j, k);
      const double rel = std::abs(a - b) / std::abs(a);
      o.pass = o.pass && rel <= tol;
      rows.push_back({{"variable", j + 1}, {"k", k}, {"closed_form", a}, {"quadrature", b}, {"relative_difference", rel}});
      csv << j + 1 << "," << k << "," << a << "," << b << "," << rel << "\n";
    }
  }
  o.report = {{"command", "moments"}, {"weight", weight.to_string()}, {"kmax", c.kmax}, {"tolerance", tol},
              {"rows", rows}, {"pass", o.pass}};
  o.csv = csv.str();
  return o;
}

// -------------------------------------------------------------------- main

void add_globals(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--tolerance", c.tolerance, "Override the float tolerance");
  sub->add_option("--seed", c.seed, "Seed for randomized suites");
  sub->add_option("--out", c.out, "Write the report (solve: the solution form) to this path");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("out", "cannot write '" + path + "'");
  f << text;
}

int run(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Fock-space d-complex toolkit"};
  app.require_subcommand(1);

  auto* spectrum = app.add_subcommand("spectrum", "Spectrum of the Laplacian on (p,0)-forms");
  spectrum->add_option("--n", c.n, "Dimension");
  spectrum->add_option("--p", c.p, "Form degree");
  spectrum->add_option("--mmax", c.mmax, "Largest polynomial degree in the table");
  spectrum->add_option("--cutoff", c.cutoff, "Degree cutoff of the numeric finite section");
  spectrum->add_flag("--verify", c.verify, "Cross-check against numeric eigenvalues");
  add_globals(spectrum, c);

  auto* verify = app.add_subcommand("verify", "Run an identity suite on seeded random inputs");
  verify->add_option("suite", c.suite, "basic-estimate | kohn-morrey | energy-identity | commutation")
      ->required()
      ->check(CLI::IsMember({"basic-estimate", "kohn-morrey", "energy-identity", "commutation"}));
  verify->add_option("--n", c.n, "Dimension");
  verify->add_option("--p", c.p, "Form degree");
  verify->add_option("--degree", c.degree, "Maximal polynomial degree of random forms (window for certificates)");
  verify->add_option("--cases", c.cases, "Number of cases");
  verify->add_option("--weight", c.weight, "Weight, e.g. \"1|z1|^2 + 2|z2|^4\" or JSON");
  verify->add_option("--ops", c.ops, "Operators p_1,...,p_n, e.g. \"d1^2,d2^2\" or JSON");
  add_globals(verify, c);

  auto* solve = app.add_subcommand("solve", "Canonical solutions of du = alpha, Du = alpha, D*v = beta");
  solve->add_option("kind", c.kind, "dbar | d | dstar")->required()->check(CLI::IsMember({"dbar", "d", "dstar"}));
  solve->add_option("--input", c.input, "Right-hand side as PForm JSON")->required();
  solve->add_option("--ops", c.ops, "Operators p_1,...,p_n for d and dstar");
  solve->add_option("--window", c.window, "Degree window for the solver and certificates");
  add_globals(solve, c);

  auto* moments = app.add_subcommand("moments", "Radial moments: closed form against quadrature");
  moments->add_option("--weight", c.weight, "Weight spec");
  moments->add_option("--n", c.n, "Dimension of the default Gaussian weight");
  moments->add_option("--kmax", c.kmax, "Largest moment index");
  add_globals(moments, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Outcome o;
    Json solution;
    std::string format = c.format;
    if (spectrum->parsed()) {
      o = cmd_spectrum(c);
      if (format.empty()) format = "csv";
    } else if (verify->parsed()) {
      o = cmd_verify(c);
    } else if (solve->parsed()) {
      o = cmd_solve(c, solution);
    } else {
      o = cmd_moments(c);
    }
    if (format.empty()) format = "json";
    if (solve->parsed()) {
      if (!solution.is_null()) {
        if (c.out.empty()) {
          o.report["solution"] = solution;
        } else {
          emit(fock::io::dump(solution) + "\n", c.out);
          o.report["solution_path"] = c.out;
        }
      }
      std::cout << fock::io::dump(o.report) << "\n";
    } else {
      emit(format == "csv" ? o.csv : fock::io::dump(o.report) + "\n", c.out);
    }
    return o.pass ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fock::WeylParseError& e) {
    std::cerr << "error: invalid 'ops': " << e.what() << "\n";
    return 2;
  } catch (const fock::FormDegreeError& e) {
    std::cerr << "error: invalid 'p': " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
