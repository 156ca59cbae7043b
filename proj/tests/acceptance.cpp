#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "fock/dbar.hpp"
#include "fock/fock_core.hpp"
#include "fock/general_d.hpp"
#include "fock/linalg/dense.hpp"
#include "fock/random.hpp"
#include "fock/weighted.hpp"

using namespace fock;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

bool run(int k, const char* title, double time_limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit > 0) o.require(secs < time_limit, "runtime limit " + fmt("%.0f s", time_limit));
  std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", k, title, o.detail.c_str(), secs);
  std::fflush(stdout);
  return o.pass;
}

HoloPoly mono(std::initializer_list<int> e, QComplex c = QComplex(1)) { return HoloPoly::monomial(MultiIndex(e), c); }

void spectrum(Outcome& o) {
  int tables = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t p = 0; p <= n; ++p) {
      auto t = spectrum_table(n, p, 6);
      for (int m = 0; m <= 6; ++m) {
        const mpz_class expected = binomial(static_cast<long>(n) + m - 1, static_cast<long>(n) - 1) *
                                   binomial(static_cast<long>(n), static_cast<long>(p));
        o.require(t[static_cast<std::size_t>(m)].eigenvalue == m + static_cast<long>(p) &&
                      t[static_cast<std::size_t>(m)].multiplicity == expected,
                  "table n=" + std::to_string(n) + " p=" + std::to_string(p) + " m=" + std::to_string(m));
      }
      ++tables;
    }
  }
  double worst = 0;
  int sections = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t p = 0; p <= n; ++p) {
      for (int cutoff = 0; cutoff <= 5; ++cutoff) {
        std::vector<double> expected;
        for (const auto& r : spectrum_table(n, p, cutoff)) {
          for (long i = 0; i < r.multiplicity.get_si(); ++i) expected.push_back(static_cast<double>(r.eigenvalue));
        }
        auto ev = linalg::hermitian_eigenvalues(assemble_box_matrix(n, p, cutoff));
        o.require(ev.size() == expected.size(), "section size");
        for (std::size_t i = 0; i < std::min(ev.size(), expected.size()); ++i) worst = std::max(worst, std::abs(ev[i] - expected[i]));
        ++sections;
      }
    }
  }
  o.require(worst < 1e-9, "eigenvalue error");
  o.note(std::to_string(tables) + " tables exact, " + std::to_string(sections) + " sections, max eigenvalue error " +
         fmt("%.1e", worst));
}

void basic_estimate(Outcome& o) {
  FormSampler rng(20261016);
  int cases = 0;
  for (auto [n, p] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 1}, {3, 2}}) {
    for (int i = 0; i < 200; ++i) {
      auto u = rng.form(n, p, 5);
      auto t = energy_terms(u);
      o.require(t.residual().is_zero(), "energy identity residual");
      o.require(exact_less_equal(t.norm_sq.scaled(Rational(static_cast<long>(p))), t.lhs), "p||u||^2 <= lhs");
      ++cases;
    }
  }
  o.note(std::to_string(cases) + " forms, identity residual exactly 0, inequality exact");
}

void neumann_contracts(Outcome& o) {
  FormSampler rng(7);
  int cases = 0;
  for (auto [n, p] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 1}, {3, 2}}) {
    for (int i = 0; i < 50; ++i) {
      auto a = rng.form(n, p, 4);
      o.require(box(neumann(a)) == a, "box N = id");
      o.require(neumann(box(a)) == a, "N box = id");
      const Rational pr(static_cast<long>(p));
      auto na = neumann(a);
      o.require(exact_less_equal(norm_sq_form(na).scaled(pr * pr), norm_sq_form(a)), "p^2||Nu||^2 <= ||u||^2");
      o.require(exact_less_equal(norm_sq_form(partial_star(na)).scaled(pr), norm_sq_form(a)),
                "p||d*N a||^2 <= ||a||^2");
      o.require(neumann(partial(a)) == partial(na), "N d = d N");
      ++cases;
    }
  }
  PForm dz1(2, 1);
  dz1.add({0}, mono({0, 0}));
  auto s = solve_partial_report(dz1);
  o.require(s.u0 == PForm::function(mono({1, 0})), "u0 = z1");
  o.require(s.u0_norm_sq == s.alpha_norm_sq, "||u0|| = ||alpha||");
  o.note(std::to_string(cases) + " forms exact; alpha=dz1 gives u0=z1, ||u0||^2=||alpha||^2=" + s.u0_norm_sq.to_string());
}

void kohn_morrey(Outcome& o) {
  PFormF dz(1, 1);
  dz.add({0}, HoloPolyF::constant(1, 1.0));
  const RadialPolyWeight quartic({{1.0, 2}});
  MomentTable closed(quartic);
  MomentTable quad(quartic, MomentMethod::Quadrature);
  auto r = kohn_morrey_report(dz, closed);
  auto rq = kohn_morrey_report(dz, quad);
  auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
  const double torsion = 2 * pi - pi * pi / 2;
  o.require(rel(r.lhs, pi * pi / 2) < 1e-8, "lhs");
  o.require(rel(r.levi_term, 2 * pi) < 1e-8, "levi_term");
  o.require(rel(r.torsion, torsion) < 1e-8, "torsion");
  o.require(std::abs(r.derivative_term) < 1e-12, "derivative_term");
  double qworst = std::max({rel(rq.lhs, r.lhs), rel(rq.levi_term, r.levi_term), rel(rq.torsion, r.torsion)});
  for (auto [c, s] : std::vector<std::pair<double, int>>{{1, 1}, {1, 2}, {2, 2}, {1, 3}}) {
    for (int k = 0; k <= 12; ++k) qworst = std::max(qworst, rel(radial_moment_quadrature(c, s, k), radial_moment_closed_form(c, s, k)));
  }
  o.require(qworst < 1e-9, "quadrature oracle");

  FormSampler rng(4);
  int cases = 0;
  double worst_eq = 0;
  double worst_res = 0;
  double min_torsion = INFINITY;
  for (auto [c, s] : std::vector<std::pair<double, int>>{{1, 1}, {1, 2}, {2, 2}, {1, 3}}) {
    MomentTable m(RadialPolyWeight(std::vector<RadialFactor>(2, RadialFactor{c, s})));
    for (int i = 0; i < 25; ++i) {
      const std::size_t p = 1 + static_cast<std::size_t>(rng.uniform(0, 1));
      auto u = to_float(rng.form(2, p, 3));
      auto k = kohn_morrey_report(u, m);
      const double sc = k.scale();
      worst_eq = std::max({worst_eq, std::abs(k.torsion - k.torsion_alt1) / sc, std::abs(k.torsion - k.torsion_alt2) / sc});
      worst_res = std::max(worst_res, std::abs(k.residual) / sc);
      min_torsion = std::min(min_torsion, k.torsion / sc);
      auto f = formnorm_check(u.components().begin()->second, static_cast<std::size_t>(i % 2), m);
      o.require(std::abs(f.residual) <= 1e-8 * (1 + std::abs(f.lhs)), "formnorm identity");
      ++cases;
    }
  }
  o.require(min_torsion >= -1e-9, "torsion >= 0");
  o.require(worst_eq <= 1e-8, "three-way torsion equality");
  o.require(worst_res <= 1e-8, "energy residual");
  o.note("torsion " + fmt("%.10f", r.torsion) + " (rel err " + fmt("%.1e", rel(r.torsion, torsion)) +
         "), quadrature rel diff " + fmt("%.1e", qworst) + ", " + std::to_string(cases) +
         " cases: min torsion/scale " + fmt("%.1e", min_torsion) + ", three-way spread " + fmt("%.1e", worst_eq) +
         ", residual " + fmt("%.1e", worst_res));
}

void gaussian_torsion(Outcome& o) {
  FormSampler rng(5);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
    const std::size_t p = 1 + static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    MomentTable m(RadialPolyWeight::gaussian(n));
    auto r = kohn_morrey_report(to_float(rng.form(n, p, 3)), m);
    worst = std::max({worst, std::abs(r.torsion), std::abs(r.torsion_alt1), std::abs(r.torsion_alt2)});
  }
  o.require(worst < 1e-10, "torsion vanishing");
  o.note("100 cases, max |torsion| " + fmt("%.1e", worst));
}

void commutator_identities(Outcome& o) {
  auto a = parse_d_operator({"d1^2"}, 1);
  auto b = parse_d_operator({"d1*d2", "d1^2 + d2^2"}, 2);
  PForm zdz(1, 1);
  zdz.add({0}, mono({1}));
  auto six = commutator_form(a, zdz);
  o.require(six == ExactScalar(QComplex(6), 1), "6 pi");
  FormSampler rng(6);
  const QComplex two(2);
  for (int i = 0; i < 100; ++i) {
    auto u = rng.form(2, 1, 4);
    auto u1 = u.component({0});
    auto u2 = u.component({1});
    auto integral = norm_sq_gaussian(u1) + norm_sq_gaussian(u2).scaled(Rational(4)) +
                    norm_sq_gaussian(u1.derivative(0) + u2.derivative(1) * two) +
                    norm_sq_gaussian(u1.derivative(1) + u2.derivative(0) * two);
    o.require(commutator_form(b, u) == integral, "integral identity");
  }
  double la = INFINITY;
  double lb = INFINITY;
  for (int window = 0; window <= 6; ++window) {
    la = std::min(la, estimate_constant(a, 1, window).lambda_min);
    lb = std::min(lb, estimate_constant(b, 1, window).lambda_min);
    o.require(certify_lower_bound(a, 1, window, Rational(2)), "certificate >= 2 at N=" + std::to_string(window));
    o.require(certify_lower_bound(b, 1, window, Rational(1)), "certificate >= 1 at N=" + std::to_string(window));
  }
  o.note("commutator form " + six.to_string() + ", 100 integral identities exact, lambda_min " + fmt("%.12g", la) +
         " and " + fmt("%.12g", lb) + ", bounds 2 and 1 certified exactly for N=0..6");
}

void general_solvers(Outcome& o) {
  auto a = parse_d_operator({"d1^2"}, 1);
  PForm dz(1, 1);
  dz.add({0}, mono({0}));
  auto s = solve_canonical_D(a, dz, 6);
  o.require(s.exact && s.exact_solution && apply_D(a, *s.exact_solution) == dz, "D u0 = alpha");
  o.require(s.exactly_orthogonal, "kernel orthogonality");
  o.require(s.exact_solution && *s.exact_solution == PForm::function(mono({2}, QComplex(Rational(1, 2)))), "u0 = z^2/2");
  auto b = parse_d_operator({"d1*d2", "d1^2 + d2^2"}, 2);
  FormSampler rng(8);
  int extra = 0;
  for (int i = 0; i < 10; ++i) {
    auto alpha = apply_D(b, rng.form(2, 0, 5));
    if (alpha.is_zero()) continue;
    auto r = solve_canonical_D(b, alpha, 6);
    o.require(r.exact && apply_D(b, *r.exact_solution) == alpha && r.exactly_orthogonal, "second operator exact solve");
    ++extra;
  }

  auto sq = parse_d_operator({"d1^2", "d2^2"}, 2);
  PForm beta(2, 1);
  beta.add({0}, mono({0, 2}));
  beta.add({1}, mono({2, 0}, QComplex(-1)));
  auto g6 = solve_canonical_Dstar(sq, beta, 6, SolveMode::Galerkin);
  auto g8 = solve_canonical_Dstar(sq, beta, 8, SolveMode::Galerkin);
  auto e6 = solve_canonical_Dstar(sq, beta, 6, SolveMode::Exact);
  auto e8 = solve_canonical_Dstar(sq, beta, 8, SolveMode::Exact);
  o.require(g8.residual_norm < 1e-8, "galerkin residual at N=8");
  // A residual already at the rounding floor cannot halve further; the floor is relative to ||beta||.
  const double floor = 1e-12 * (1 + g8.rhs_norm);
  o.require(g8.residual_norm <= g6.residual_norm / 2 || (g6.residual_norm <= floor && g8.residual_norm <= floor),
            "halving from N=6 to N=8");
  o.require(e8.residual_norm <= e6.residual_norm / 2, "exact residual halving");
  o.require(e8.exact_solution && apply_Dstar(sq, *e8.exact_solution) == beta, "exact D* v0 = beta");
  o.note("z^2 operator: u0 = z^2/2 with D u0 = dz exact, " + std::to_string(extra) +
         " further exact solves; fixture galerkin residual N=6 " + fmt("%.1e", g6.residual_norm) + ", N=8 " +
         fmt("%.1e", g8.residual_norm) + " (floor " + fmt("%.1e", floor) + "), exact path " +
         fmt("%g", e6.residual_norm) + " and " + fmt("%g", e8.residual_norm));
}

void compactness(Outcome& o) {
  for (int cutoff = 0; cutoff <= 50; ++cutoff) {
    Rational tail(0);
    Rational q(0);
    for (int k = 0; k <= 200; ++k) {
      q += Rational(1, k + 1);
      if (k > cutoff) tail += Rational(1, (k + 1) * (k + 1));
    }
    o.require(tail * (cutoff + 2) <= q, "tail bound at N=" + std::to_string(cutoff));
  }
  double worst = 0;
  for (int cutoff = 0; cutoff <= 50; ++cutoff) {
    worst = std::max(worst, std::abs(volterra_section_norm(cutoff, 30) - 1 / std::sqrt(cutoff + 1.0)));
  }
  o.require(worst < 1e-12, "Volterra section norms");
  auto f = witness_partial_norms({WitnessKind::F}, 10000);
  o.require(f.operator_norm_sq > 9.7, "harmonic growth");
  o.note("tail bound exact for N=0..50, Volterra max error " + fmt("%.1e", worst) + ", ||F'_N||^2 at N=1e4 = " +
         fmt("%.6f", f.operator_norm_sq));
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "spectrum", 10, spectrum);
  ok &= run(2, "exact basic estimate", 30, basic_estimate);
  ok &= run(3, "Neumann contraction", 0, neumann_contracts);
  ok &= run(4, "weighted energy identity with torsion", 60, kohn_morrey);
  ok &= run(5, "Gaussian torsion vanishes", 0, gaussian_torsion);
  ok &= run(6, "commutator identities", 0, commutator_identities);
  ok &= run(7, "general canonical solvers", 0, general_solvers);
  ok &= run(8, "compactness surrogates", 0, compactness);
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return ok ? 0 : 1;
}
