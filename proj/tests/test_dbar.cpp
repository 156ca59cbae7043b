#include <doctest.h>

#include <cmath>

#include "fock/dbar.hpp"
#include "fock/linalg/dense.hpp"
#include "fock/random.hpp"

using namespace fock;

namespace {

PForm one_form(std::size_t n, std::initializer_list<std::pair<int, HoloPoly>> comps, std::size_t p = 1) {
  PForm u(n, p);
  for (const auto& [j, f] : comps) u.add(FormIndex{j}, f);
  return u;
}

HoloPoly mono(std::initializer_list<int> e, QComplex c = QComplex(1)) { return HoloPoly::monomial(MultiIndex(e), c); }

PForm top_form(std::size_t n, const HoloPoly& f) {
  PForm u(n, n);
  FormIndex J;
  for (std::size_t j = 0; j < n; ++j) J.push_back(static_cast<int>(j));
  u.add(J, f);
  return u;
}

}  // namespace

TEST_CASE("wedge signs") {
  CHECK(wedge(1, {0}).sign == -1);
  CHECK(wedge(0, {1}).sign == 1);
  CHECK(wedge(0, {0}).sign == 0);
  auto w = wedge(1, {0, 2});
  CHECK(w.sign == -1);
  CHECK(w.index == FormIndex{0, 1, 2});
  CHECK(format_index({0, 2}) == "1,3");
  CHECK(parse_index("1,3", 3) == FormIndex{0, 2});
  CHECK_THROWS(parse_index("2,1", 3));
  CHECK_THROWS(parse_index("4", 3));
}

TEST_CASE("partial examples") {
  CHECK(partial(one_form(2, {{0, mono({1, 0})}})).is_zero());
  PForm expected(2, 2);
  expected.add({0, 1}, mono({0, 0}, QComplex(-1)));
  CHECK(partial(one_form(2, {{0, mono({0, 1})}})) == expected);
  CHECK(partial(one_form(2, {{1, mono({0, 1})}})).is_zero());
  auto f = mono({2, 1}) + mono({0, 3});
  PForm df(2, 1);
  df.add({0}, f.derivative(0));
  df.add({1}, f.derivative(1));
  CHECK(partial(PForm::function(f)) == df);
  CHECK_THROWS_AS(partial(top_form(2, mono({0, 0}))), FormDegreeError);
}

TEST_CASE("partial_star examples") {
  CHECK(partial_star(one_form(2, {{0, mono({0, 0})}})) == PForm::function(mono({1, 0})));
  PForm expected(2, 1);
  expected.add({1}, mono({1, 1}));
  expected.add({0}, mono({0, 2}, QComplex(-1)));
  CHECK(partial_star(top_form(2, mono({0, 1}))) == expected);
  CHECK_THROWS_AS(partial_star(PForm::function(mono({0, 0}))), FormDegreeError);
}

TEST_CASE("complex property and exact adjointness") {
  FormSampler rng(31);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t p = 0; p <= n; ++p) {
      for (int i = 0; i < 6; ++i) {
        auto u = rng.form(n, p, 3);
        if (p + 2 <= n) CHECK(partial(partial(u)).is_zero());
        if (p >= 2) CHECK(partial_star(partial_star(u)).is_zero());
        if (p < n) {
          auto v = rng.form(n, p + 1, 3);
          CHECK(inner_form(partial(u), v) == inner_form(u, partial_star(v)));
        }
      }
    }
  }
}

TEST_CASE("box examples agree with the closed form") {
  auto u = one_form(2, {{0, mono({1, 1})}});
  CHECK(box(u) == u * QComplex(3));
  CHECK(box(PForm::function(mono({0, 0}))).is_zero());
  CHECK(box(top_form(2, mono({0, 0}))) == top_form(2, mono({0, 0}, QComplex(2))));
  FormSampler rng(2);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t p = 0; p <= n; ++p) {
      auto v = rng.form(n, p, 3);
      CHECK(box(v) == box_closed_form(v));
    }
  }
}

TEST_CASE("spectrum table") {
  auto t = spectrum_table(2, 1, 2);
  REQUIRE(t.size() == 3);
  CHECK(t[0].eigenvalue == 1);
  CHECK(t[0].multiplicity == 2);
  CHECK(t[1].eigenvalue == 2);
  CHECK(t[1].multiplicity == 4);
  CHECK(t[2].eigenvalue == 3);
  CHECK(t[2].multiplicity == 6);
  for (const auto& r : spectrum_table(1, 1, 3)) CHECK(r.multiplicity == 1);
  auto z = spectrum_table(2, 0, 1);
  CHECK(z[0].eigenvalue == 0);
  CHECK(z[0].multiplicity == 1);
  CHECK(z[1].multiplicity == 2);
  CHECK_THROWS_AS(spectrum_table(2, 3, 1), FormDegreeError);
}

TEST_CASE("finite section eigenvalues") {
  auto check = [](std::size_t n, std::size_t p, int cutoff, std::vector<double> expected) {
    auto ev = linalg::hermitian_eigenvalues(assemble_box_matrix(n, p, cutoff));
    REQUIRE(ev.size() == expected.size());
    for (std::size_t i = 0; i < ev.size(); ++i) CHECK(std::abs(ev[i] - expected[i]) < 1e-9);
  };
  check(2, 1, 2, {1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3});
  check(1, 1, 0, {1});
  check(2, 2, 1, {2, 3, 3});
  // The assembled matrix is diagonal.
  auto h = assemble_box_matrix(2, 1, 3);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < h.cols(); ++j) {
      if (i != j) CHECK(h(i, j) == std::complex<double>{});
    }
  }
}

TEST_CASE("neumann operator") {
  auto u = one_form(2, {{0, mono({1, 1})}});
  CHECK(neumann(u) == u * QComplex(Rational(1, 3)));
  auto dz1 = one_form(2, {{0, mono({0, 0})}});
  CHECK(neumann(dz1) == dz1);
  CHECK_THROWS_AS(neumann(PForm::function(mono({0, 0}))), FormDegreeError);
  FormSampler rng(4);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t p = 1; p <= n; ++p) {
      auto a = rng.form(n, p, 4);
      auto b = rng.form(n, p, 4);
      CHECK(neumann(a + b) == neumann(a) + neumann(b));
      CHECK(box(neumann(a)) == a);
      CHECK(neumann(box(a)) == a);
      const Rational pp(static_cast<long>(p * p));
      CHECK(exact_less_equal(norm_sq_form(neumann(a)).scaled(pp), norm_sq_form(a)));
      if (p < n) CHECK(neumann(partial(a)) == partial(neumann(a)));
      if (p >= 2) CHECK(neumann(partial_star(a)) == partial_star(neumann(a)));
    }
  }
}

TEST_CASE("canonical solution") {
  auto dz1 = one_form(2, {{0, mono({0, 0})}});
  auto s = solve_partial_report(dz1);
  CHECK(s.u0 == PForm::function(mono({1, 0})));
  CHECK(s.residual.is_zero());
  CHECK(s.u0_norm_sq == s.alpha_norm_sq);
  CHECK(s.orthogonal());
  auto alpha = one_form(2, {{0, mono({0, 1})}, {1, mono({1, 0})}});
  CHECK(solve_partial(alpha) == PForm::function(mono({1, 1})));
  try {
    solve_partial(one_form(2, {{0, mono({0, 1})}}));
    FAIL("expected NotClosedError");
  } catch (const NotClosedError& e) {
    PForm r(2, 2);
    r.add({0, 1}, mono({0, 0}, QComplex(-1)));
    CHECK(e.residual() == r);
    CHECK(e.residual_norm() > 0);
  }
  FormSampler rng(6);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t p = 1; p <= n; ++p) {
      for (int i = 0; i < 4; ++i) {
        auto a = partial(rng.form(n, p - 1, 4));
        if (a.is_zero()) continue;
        auto rep = solve_partial_report(a);
        CHECK(rep.residual.is_zero());
        CHECK(rep.orthogonal());
        CHECK(exact_less_equal(rep.u0_norm_sq.scaled(Rational(static_cast<long>(p))), rep.alpha_norm_sq));
      }
    }
  }
}

TEST_CASE("kernel of partial on functions is the constants") {
  auto k = kernel_basis_partial(3, 0, 4);
  REQUIRE(k.size() == 1);
  CHECK(k[0].max_poly_degree() == 0);
  // On 1-forms in two variables the closed forms of degree m are d of degree m+1 functions.
  for (int m = 0; m <= 4; ++m) {
    auto km = kernel_basis_partial(2, 1, m);
    std::size_t expected = 0;
    for (int j = 0; j <= m; ++j) expected += static_cast<std::size_t>(j + 2);
    CHECK(km.size() == expected);
  }
}

TEST_CASE("energy identity and basic estimate") {
  FormSampler rng(7);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t p = 0; p <= n; ++p) {
      for (int i = 0; i < 5; ++i) {
        auto u = rng.form(n, p, 4);
        auto t = energy_terms(u);
        CHECK(t.residual().is_zero());
        CHECK(exact_less_equal(t.norm_sq.scaled(Rational(static_cast<long>(p))), t.lhs));
      }
    }
  }
}

TEST_CASE("ladder identity on one-variable 1-forms") {
  // With n = 1, d is a and d* is a*: ||a f||^2 + ||a* f||^2 = 2 ||a f||^2 + ||f||^2.
  FormSampler rng(13);
  for (int i = 0; i < 20; ++i) {
    auto f = rng.holo(1, 6);
    auto af = norm_sq_gaussian(f.derivative(0));
    auto astar_f = norm_sq_gaussian(f.shifted(MultiIndex{1}));
    CHECK(af + astar_f == af + af + norm_sq_gaussian(f));
  }
}

TEST_CASE("graph norm") {
  CHECK(graph_norm_sq(HoloPoly::constant(2, QComplex(1))) == ExactScalar(QComplex(1), 2));
  for (const auto& a : enumerate_up_to(2, 4)) {
    auto g = graph_norm_sq(HoloPoly::monomial(a));
    CHECK(g == monomial_norm_sq(a).scaled(Rational(1 + a.degree())));
  }
  OrthonormalCoeffs phi01;
  phi01[MultiIndex{0}] = 1.0;
  phi01[MultiIndex{1}] = 1.0;
  CHECK(graph_norm_sq(phi01) == doctest::Approx(3.0));
}

TEST_CASE("tail bound for truncated G-series") {
  constexpr int terms = 100;
  OrthonormalCoeffs g;
  for (int k = 0; k <= terms; ++k) g[MultiIndex{k}] = 1.0 / (k + 1);
  const double q = graph_norm_sq(g);
  for (int cutoff = 0; cutoff <= 50; ++cutoff) {
    OrthonormalCoeffs tail;
    for (const auto& [a, c] : g) {
      if (a.degree() > cutoff) tail[a] = c;
    }
    CHECK(parseval_norm_sq(tail) <= q / (cutoff + 2));
    // Exact rational oracle for the same inequality.
    Rational tail_q(0);
    Rational q_q(0);
    for (int k = 0; k <= terms; ++k) {
      q_q += Rational(1, k + 1);
      if (k > cutoff) tail_q += Rational(1, (k + 1) * (k + 1));
    }
    CHECK(tail_q * (cutoff + 2) <= q_q);
  }
}
