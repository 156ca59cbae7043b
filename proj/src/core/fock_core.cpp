#include "fock/fock_core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fock/linalg/dense.hpp"
#include "fock/simd/kernels.hpp"

namespace fock {

namespace {

void check_point(std::size_t n, std::span<const std::complex<double>> z) {
  if (z.size() != n) throw std::invalid_argument("point dimension does not match polynomial dimension");
}

// powers[j][k] = z_j^k for k <= max exponent of variable j.
template <class Poly>
std::vector<std::vector<std::complex<double>>> power_table(const Poly& f,
                                                           std::span<const std::complex<double>> z) {
  std::vector<int> top(f.dim(), 0);
  for (const auto& [a, c] : f.terms()) {
    for (std::size_t j = 0; j < f.dim(); ++j) top[j] = std::max(top[j], a[j]);
  }
  std::vector<std::vector<std::complex<double>>> powers(f.dim());
  for (std::size_t j = 0; j < f.dim(); ++j) {
    powers[j].resize(static_cast<std::size_t>(top[j]) + 1);
    powers[j][0] = 1.0;
    for (int k = 1; k <= top[j]; ++k) powers[j][k] = powers[j][k - 1] * z[j];
  }
  return powers;
}

template <class Poly>
std::complex<double> evaluate_impl(const Poly& f, std::span<const std::complex<double>> z) {
  check_point(f.dim(), z);
  auto powers = power_table(f, z);
  std::complex<double> sum = 0.0;
  for (const auto& [a, c] : f.terms()) {
    std::complex<double> m = ScalarTraits<typename Poly::Coeff>::to_complex(c);
    for (std::size_t j = 0; j < f.dim(); ++j) m *= powers[j][static_cast<std::size_t>(a[j])];
    sum += m;
  }
  return sum;
}

double pi_pow(std::size_t n) { return std::pow(std::numbers::pi, static_cast<double>(n)); }

}  // namespace

ExactScalar monomial_norm_sq(const MultiIndex& alpha) {
  return {QComplex(Rational(alpha.factorial())), static_cast<int>(alpha.dim())};
}

ExactScalar inner_gaussian(const HoloPoly& f, const HoloPoly& g) {
  f.check_dim(g);
  QComplex sum;
  // Both maps share the graded order; walk them in lockstep.
  auto it = f.terms().begin();
  auto jt = g.terms().begin();
  GradedLex lt;
  while (it != f.terms().end() && jt != g.terms().end()) {
    if (lt(it->first, jt->first)) {
      ++it;
    } else if (lt(jt->first, it->first)) {
      ++jt;
    } else {
      sum += it->second * jt->second.conj() * QComplex(Rational(it->first.factorial()));
      ++it;
      ++jt;
    }
  }
  return {std::move(sum), static_cast<int>(f.dim())};
}

OrthonormalCoeffs to_orthonormal(const HoloPoly& f) {
  OrthonormalCoeffs out;
  double scale = pi_pow(f.dim());
  for (const auto& [a, c] : f.terms()) {
    out.emplace(a, c.to_complex() * std::sqrt(scale * a.factorial().get_d()));
  }
  return out;
}

double parseval_norm_sq(const OrthonormalCoeffs& coeffs) {
  std::vector<double> flat;
  flat.reserve(2 * coeffs.size());
  for (const auto& [a, c] : coeffs) {
    flat.push_back(c.real());
    flat.push_back(c.imag());
  }
  return simd::dot(flat, flat);
}

std::complex<double> evaluate(const HoloPoly& f, std::span<const std::complex<double>> z) {
  return evaluate_impl(f, z);
}

std::complex<double> evaluate(const HoloPolyF& f, std::span<const std::complex<double>> z) {
  return evaluate_impl(f, z);
}

std::complex<double> kernel_truncated(std::span<const std::complex<double>> z,
                                      std::span<const std::complex<double>> w, int cutoff) {
  if (z.size() != w.size()) throw std::invalid_argument("kernel arguments differ in dimension");
  std::complex<double> t = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) t += z[j] * std::conj(w[j]);
  std::complex<double> term = 1.0;
  std::complex<double> sum = 1.0;
  for (int k = 1; k <= cutoff; ++k) {
    term *= t / static_cast<double>(k);
    sum += term;
  }
  return sum / pi_pow(z.size());
}

double kernel_diagonal(std::span<const std::complex<double>> z) {
  double r2 = 0.0;
  for (auto v : z) r2 += std::norm(v);
  return std::exp(r2) / pi_pow(z.size());
}

std::complex<double> reproduce(const HoloPoly& f, std::span<const std::complex<double>> z) {
  check_point(f.dim(), z);
  auto deg = f.degree();
  if (!deg) return 0.0;
  // K(w, z) = sum_alpha w^alpha conj(z^alpha) / ||w^alpha||^2; pair each
  // kernel coefficient with f through monomial orthogonality.
  std::complex<double> sum = 0.0;
  double scale = pi_pow(f.dim());
  for (const MultiIndex& alpha : enumerate_up_to(f.dim(), *deg)) {
    auto it = f.terms().find(alpha);
    if (it == f.terms().end()) continue;
    double nsq = scale * alpha.factorial().get_d();
    std::complex<double> zalpha = 1.0;
    for (std::size_t j = 0; j < f.dim(); ++j) zalpha *= std::pow(z[j], alpha[j]);
    std::complex<double> kernel_coeff = std::conj(zalpha) / nsq;
    sum += it->second.to_complex() * std::conj(kernel_coeff) * nsq;
  }
  return sum;
}

HoloPoly bergman_project_gaussian(const MixedPoly& m) {
  HoloPoly out(m.dim());
  for (const auto& [k, c] : m.terms()) {
    if (!k.z.dominates(k.zbar)) continue;
    // (z^a zbar^b, z^g) / ||z^g||^2 = a! / (a-b)! when g = a - b.
    MultiIndex g = k.z - k.zbar;
    mpz_class ratio = k.z.factorial() / g.factorial();
    out.add_term(g, c * QComplex(Rational(ratio)));
  }
  return out;
}

HoloPoly volterra_primitive(const HoloPoly& f) {
  if (f.dim() != 1) throw std::invalid_argument("volterra primitive is defined for one variable only");
  HoloPoly out(1);
  for (const auto& [a, c] : f.terms()) {
    out.add_term(MultiIndex{a[0] + 1}, c * QComplex(Rational(1, a[0] + 1)));
  }
  return out;
}

double volterra_section_norm(int cutoff, int width) {
  if (cutoff < 0 || width < 1) throw std::invalid_argument("section needs cutoff >= 0 and width >= 1");
  // Column j holds T phi_{cutoff+j} in the orthonormal basis phi_{cutoff+1}, ..., phi_{cutoff+width}.
  const auto w = static_cast<std::size_t>(width);
  linalg::Matrix t(w, w);
  for (std::size_t j = 0; j < w; ++j) {
    const int k = cutoff + static_cast<int>(j);
    const double phi_scale = std::sqrt(std::numbers::pi * factorial(k).get_d());
    for (const auto& [a, c] : to_orthonormal(volterra_primitive(HoloPoly::monomial(MultiIndex{k})))) {
      const auto row = static_cast<std::size_t>(a[0] - cutoff - 1);
      if (row < w) t(row, j) = c.real() / phi_scale;
    }
  }
  linalg::Matrix gram(w, w);
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      double s = 0;
      for (std::size_t r = 0; r < w; ++r) s += t(r, i) * t(r, j);
      gram(i, j) = s;
    }
  }
  return std::sqrt(linalg::symmetric_eigenvalues(gram).back());
}

double WitnessSeries::coefficient(int k) const {
  if (k < 0) return 0.0;
  if (kind == WitnessKind::F) {
    return k >= 2 ? 1.0 / std::sqrt(static_cast<double>(k) * (k - 1)) : 0.0;
  }
  return 1.0 / (k + 1.0);
}

std::vector<double> annihilate(std::span<const double> coeffs) {
  std::vector<double> out(coeffs.empty() ? 0 : coeffs.size() - 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::sqrt(static_cast<double>(k + 1)) * coeffs[k + 1];
  return out;
}

std::vector<double> create(std::span<const double> coeffs) {
  std::vector<double> out(coeffs.size() + 1, 0.0);
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = std::sqrt(static_cast<double>(k)) * coeffs[k - 1];
  return out;
}

WitnessNorms witness_partial_norms(const WitnessSeries& w, int cutoff) {
  if (cutoff < 2) throw std::invalid_argument("witness cutoff must be at least 2");
  std::vector<double> c(static_cast<std::size_t>(cutoff) + 1);
  for (int k = 0; k <= cutoff; ++k) c[static_cast<std::size_t>(k)] = w.coefficient(k);
  std::vector<double> image = w.kind == WitnessKind::F ? annihilate(c) : create(c);
  return {simd::dot(c, c), simd::dot(image, image)};
}

}  // namespace fock
