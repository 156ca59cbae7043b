#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fock/fock_core.hpp"
#include "fock/random.hpp"

using namespace fock;
using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TEST_CASE("enumerate_degree lists graded lex order with binomial counts") {
  auto two = enumerate_degree(2, 3);
  REQUIRE(two.size() == 4);
  CHECK(two[0] == MultiIndex{3, 0});
  CHECK(two[1] == MultiIndex{2, 1});
  CHECK(two[2] == MultiIndex{1, 2});
  CHECK(two[3] == MultiIndex{0, 3});
  auto one = enumerate_degree(1, 5);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == MultiIndex{5});
  // Brute force over the cube.
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int m = 0; m <= 5; ++m) {
      std::size_t count = 0;
      std::vector<int> e(n, 0);
      auto rec = [&](auto&& self, std::size_t j, int left) -> void {
        if (j + 1 == n) {
          ++count;
          return;
        }
        for (int v = 0; v <= left; ++v) self(self, j + 1, left - v);
      };
      rec(rec, 0, m);
      CHECK(enumerate_degree(n, m).size() == count);
      CHECK(mpz_class(count) == binomial(static_cast<long>(n) + m - 1, static_cast<long>(n) - 1));
    }
  }
  CHECK(enumerate_degree(3, 2).size() == 6);
}

TEST_CASE("monomial norms carry pi^n alpha! exactly") {
  CHECK(monomial_norm_sq(MultiIndex{0, 0}) == ExactScalar(QComplex(1), 2));
  CHECK(monomial_norm_sq(MultiIndex{1, 2}) == ExactScalar(QComplex(2), 2));
  CHECK(monomial_norm_sq(MultiIndex{3}) == ExactScalar(QComplex(6), 1));
}

TEST_CASE("Gaussian inner product examples") {
  auto z1 = HoloPoly::variable(2, 0);
  auto z2 = HoloPoly::variable(2, 1);
  CHECK(inner_gaussian(z1, z1) == ExactScalar(QComplex(1), 2));
  CHECK(inner_gaussian(z1, z2).is_zero());
  CHECK(inner_gaussian(HoloPoly::monomial(MultiIndex{2}), HoloPoly::monomial(MultiIndex{2})) == ExactScalar(QComplex(2), 1));
  CHECK_THROWS_AS(inner_gaussian(z1, HoloPoly::variable(1, 0)), std::invalid_argument);
}

TEST_CASE("monomials are exactly orthogonal with norm pi^n alpha!") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto all = enumerate_up_to(n, 4);
    for (const auto& a : all) {
      for (const auto& b : all) {
        auto s = inner_gaussian(HoloPoly::monomial(a), HoloPoly::monomial(b));
        if (a == b) {
          CHECK(s == ExactScalar(QComplex(Rational(a.factorial())), static_cast<int>(n)));
        } else {
          CHECK(s.is_zero());
        }
      }
    }
  }
}

TEST_CASE("inner product is conjugate symmetric and positive") {
  FormSampler rng(11);
  for (int i = 0; i < 30; ++i) {
    auto f = rng.holo(2, 3);
    auto g = rng.holo(2, 3);
    CHECK(inner_gaussian(f, g) == inner_gaussian(g, f).conj());
    auto nf = inner_gaussian(f, f);
    CHECK(nf.is_real());
    if (!f.is_zero()) CHECK(nf.real_sign() > 0);
  }
}

TEST_CASE("orthonormal coefficients") {
  // z / sqrt(pi) is phi_1; feed the exact monomial and rescale.
  auto phi = to_orthonormal(HoloPoly::variable(1, 0));
  REQUIRE(phi.size() == 1);
  CHECK(phi.begin()->second.real() / std::sqrt(kPi) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(to_orthonormal(HoloPoly(1)).empty());
  auto z2 = to_orthonormal(HoloPoly::monomial(MultiIndex{2}));
  CHECK(z2.at(MultiIndex{2}).real() == doctest::Approx(std::sqrt(2 * kPi)).epsilon(1e-15));
  FormSampler rng(5);
  for (int i = 0; i < 20; ++i) {
    auto f = rng.holo(3, 4);
    double exact = inner_gaussian(f, f).to_double();
    CHECK(parseval_norm_sq(to_orthonormal(f)) == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("evaluate") {
  std::vector<C> at{{1, 1}};
  CHECK(std::abs(evaluate(HoloPoly::monomial(MultiIndex{2}), at) - C(0, 2)) < 1e-15);
  std::vector<C> at2{{2, 0}, {3, 0}};
  CHECK(std::abs(evaluate(HoloPoly::monomial(MultiIndex{1, 1}), at2) - C(6, 0)) < 1e-15);
  auto one_plus_z = HoloPoly::constant(1, QComplex(1)) + HoloPoly::variable(1, 0);
  std::vector<C> zero{{0, 0}};
  CHECK(std::abs(evaluate(one_plus_z, zero) - C(1, 0)) < 1e-15);
  CHECK_THROWS_AS(evaluate(one_plus_z, at2), std::invalid_argument);
}

TEST_CASE("truncated kernel") {
  std::vector<C> o2{{0, 0}, {0, 0}};
  CHECK(std::abs(kernel_truncated(o2, o2, 7) - 1.0 / (kPi * kPi)) < 1e-15);
  std::vector<C> one{{1, 0}};
  CHECK(std::abs(kernel_truncated(one, one, 2) - 2.5 / kPi) < 1e-15);
  CHECK(std::abs(kernel_truncated(one, one, 40) - std::exp(1.0) / kPi) < 1e-14);
  CHECK(kernel_diagonal(one) == doctest::Approx(std::exp(1.0) / kPi).epsilon(1e-15));
}

TEST_CASE("reproducing property and kernel-diagonal pointwise bound") {
  std::vector<C> one{{1, 0}};
  CHECK(std::abs(reproduce(HoloPoly::monomial(MultiIndex{2}), one) - C(1, 0)) < 1e-12);
  std::vector<C> pt{{0, 1}, {1, 0}};
  CHECK(std::abs(reproduce(HoloPoly::monomial(MultiIndex{1, 1}), pt) - C(0, 1)) < 1e-12);
  FormSampler rng(3);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
    auto f = rng.holo(n, 4);
    std::vector<C> z;
    for (std::size_t j = 0; j < n; ++j) z.emplace_back(2 * rng.unit() - 1, 2 * rng.unit() - 1);
    C fz = evaluate(f, z);
    CHECK(std::abs(reproduce(f, z) - fz) <= 1e-10 * (1 + std::abs(fz)));
    CHECK(std::norm(fz) <= kernel_diagonal(z) * inner_gaussian(f, f).to_double() * (1 + 1e-12));
  }
}

TEST_CASE("Gaussian Bergman projection") {
  // zbar z^2 -> 2 z
  auto m = MixedPoly::monomial(MultiIndex{2}, MultiIndex{1});
  CHECK(bergman_project_gaussian(m) == HoloPoly::monomial(MultiIndex{1}, QComplex(2)));
  CHECK(bergman_project_gaussian(MixedPoly::monomial(MultiIndex{0}, MultiIndex{1})).is_zero());
  auto z1 = HoloPoly::variable(2, 0);
  CHECK(bergman_project_gaussian(MixedPoly(z1)) == z1);
}

TEST_CASE("projection of zbar_j f is the derivative d f / d z_j") {
  FormSampler rng(17);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
    auto f = rng.holo(n, 4);
    for (std::size_t j = 0; j < n; ++j) CHECK(bergman_project_gaussian(MixedPoly(f).times_zbar(j)) == f.derivative(j));
  }
}

TEST_CASE("Volterra primitive") {
  CHECK(volterra_primitive(HoloPoly::constant(1, QComplex(1))) == HoloPoly::variable(1, 0));
  CHECK(volterra_primitive(HoloPoly::variable(1, 0)) == HoloPoly::monomial(MultiIndex{2}, QComplex(Rational(1, 2))));
  CHECK_THROWS_AS(volterra_primitive(HoloPoly::variable(2, 0)), std::invalid_argument);
  // ||T phi_k|| = 1/sqrt(k+1): ||T z^k||^2 / ||z^k||^2 = 1/(k+1) exactly.
  for (int k = 0; k < 12; ++k) {
    auto zk = HoloPoly::monomial(MultiIndex{k});
    auto tz = volterra_primitive(zk);
    CHECK(norm_sq_gaussian(tz).value() * QComplex(k + 1) == norm_sq_gaussian(zk).value());
  }
  for (int cutoff : {0, 1, 5, 20}) {
    CHECK(std::abs(volterra_section_norm(cutoff, 30) - 1 / std::sqrt(cutoff + 1.0)) < 1e-12);
  }
}

TEST_CASE("witness partial norms") {
  auto f2 = witness_partial_norms({WitnessKind::F}, 2);
  CHECK(f2.series_norm_sq == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(f2.operator_norm_sq == doctest::Approx(1.0).epsilon(1e-15));
  double harmonic = 0;
  for (int k = 1; k < 10000; ++k) harmonic += 1.0 / k;
  auto f = witness_partial_norms({WitnessKind::F}, 10000);
  CHECK(f.operator_norm_sq == doctest::Approx(harmonic).epsilon(1e-12));
  CHECK(f.operator_norm_sq > 9.78);
  CHECK(f.series_norm_sq < 1.0);
  auto g = witness_partial_norms({WitnessKind::G}, 200000);
  CHECK(std::abs(g.series_norm_sq - kPi * kPi / 6) < 1e-5);
  double prev = 0;
  for (int n : {2, 10, 100, 1000}) {
    auto w = witness_partial_norms({WitnessKind::G}, n);
    CHECK(w.operator_norm_sq > prev);
    prev = w.operator_norm_sq;
  }
  CHECK_THROWS(witness_partial_norms({WitnessKind::F}, 1));
}

TEST_CASE("ladder operators satisfy [a, a*] = I on coefficient vectors") {
  std::vector<double> f{0.5, -1.0, 2.0, 0.25, 0.0};
  auto a_astar = annihilate(create(f));
  auto astar_a = create(annihilate(f));
  for (std::size_t k = 0; k < f.size(); ++k) CHECK(a_astar[k] - astar_a[k] == doctest::Approx(f[k]).epsilon(1e-14));
  // ||a f||^2 + ||a* f||^2 = 2 ||a f||^2 + ||f||^2
  auto sq = [](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return s;
  };
  CHECK(sq(annihilate(f)) + sq(create(f)) == doctest::Approx(2 * sq(annihilate(f)) + sq(f)).epsilon(1e-14));
}
