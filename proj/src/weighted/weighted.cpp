#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fock/dbar.hpp"
#include "fock/weighted.hpp"

namespace fock {

namespace {

// (z^a zbar^b, z^c zbar^d)_phi; zero off the selection rule.
double monomial_pairing(const MixedIndex& x, const MixedIndex& y, const MomentTable& m) {
  double v = 1.0;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    const int k = x.z[j] + y.zbar[j];
    if (k != x.zbar[j] + y.z[j]) return 0.0;
    v *= 2.0 * std::numbers::pi * m.moment(j, k);
  }
  return v;
}

void check_weight_dim(std::size_t n, const MomentTable& m) {
  if (n != m.dim()) throw std::invalid_argument("weight and polynomial dimensions differ");
}

}  // namespace

std::complex<double> inner_weighted(const MixedPolyF& f, const MixedPolyF& g, const MomentTable& m) {
  f.check_dim(g);
  check_weight_dim(f.dim(), m);
  std::complex<double> sum = 0;
  for (const auto& [x, cx] : f.terms()) {
    for (const auto& [y, cy] : g.terms()) {
      double v = monomial_pairing(x, y, m);
      if (v != 0.0) sum += cx * std::conj(cy) * v;
    }
  }
  return sum;
}

std::complex<double> inner_weighted(const HoloPolyF& f, const HoloPolyF& g, const MomentTable& m) {
  f.check_dim(g);
  check_weight_dim(f.dim(), m);
  // Holomorphic monomials are orthogonal for radial weights.
  std::complex<double> sum = 0;
  auto it = g.terms().begin();
  for (const auto& [a, c] : f.terms()) {
    while (it != g.terms().end() && GradedLex{}(it->first, a)) ++it;
    if (it == g.terms().end()) break;
    if (it->first == a) {
      double v = 1.0;
      for (std::size_t j = 0; j < m.dim(); ++j) v *= 2.0 * std::numbers::pi * m.moment(j, a[j]);
      sum += c * std::conj(it->second) * v;
    }
  }
  return sum;
}

double norm_sq_weighted(const PFormF& u, const MomentTable& m) {
  double sum = 0;
  for (const auto& [J, f] : u.components()) sum += inner_weighted(f, f, m).real();
  return sum;
}

HoloPolyF project_weighted(const MixedPolyF& f, const MomentTable& m) {
  check_weight_dim(f.dim(), m);
  HoloPolyF out(f.dim());
  for (const auto& [x, c] : f.terms()) {
    if (!x.z.dominates(x.zbar)) continue;
    MultiIndex g = x.z - x.zbar;
    double ratio = 1.0;
    for (std::size_t j = 0; j < m.dim(); ++j) ratio *= m.moment(j, x.z[j]) / m.moment(j, g[j]);
    out.add_term(g, c * ratio);
  }
  return out;
}

std::vector<std::pair<FormIndex, MixedPolyF>> adjoint_symbols(const PFormF& u, const RadialPolyWeight& w) {
  if (u.degree() == 0) throw FormDegreeError("weighted adjoint is not defined on functions");
  if (u.dim() != w.dim()) throw std::invalid_argument("weight and form dimensions differ");
  std::vector<std::pair<FormIndex, MixedPolyF>> out;
  for (const auto& K : increasing_indices(u.dim(), u.degree() - 1)) {
    MixedPolyF v(u.dim());
    for (std::size_t j = 0; j < u.dim(); ++j) {
      auto c = u.signed_component(static_cast<int>(j), K);
      if (!c.is_zero()) v += w.dbar_phi(j) * MixedPolyF(c);
    }
    out.emplace_back(K, std::move(v));
  }
  return out;
}

PFormF partial_star_weighted(const PFormF& u, const MomentTable& m) {
  PFormF out(u.dim(), u.degree() == 0 ? 0 : u.degree() - 1);
  for (const auto& [K, v] : adjoint_symbols(u, m.weight())) out.add(K, project_weighted(v, m));
  return out;
}

double KohnMorreyReport::scale() const { return 1.0 + std::abs(lhs); }

KohnMorreyReport kohn_morrey_report(const PFormF& u, const MomentTable& m) {
  check_weight_dim(u.dim(), m);
  const RadialPolyWeight& w = m.weight();
  const std::size_t n = u.dim();
  KohnMorreyReport r;
  if (u.degree() < n) r.lhs += norm_sq_weighted(partial(u), m);
  for (const auto& [J, f] : u.components()) {
    for (std::size_t j = 0; j < n; ++j) {
      auto df = f.derivative(j);
      r.derivative_term += inner_weighted(df, df, m).real();
    }
  }
  if (u.degree() > 0) {
    for (const auto& K : increasing_indices(n, u.degree() - 1)) {
      std::vector<MixedPolyF> v(n, MixedPolyF(n));
      std::vector<MixedPolyF> defect(n, MixedPolyF(n));
      std::vector<MixedPolyF> comp(n, MixedPolyF(n));
      MixedPolyF big_v(n);
      MixedPolyF sum_defect(n);
      for (std::size_t j = 0; j < n; ++j) {
        comp[j] = MixedPolyF(u.signed_component(static_cast<int>(j), K));
        v[j] = w.dbar_phi(j) * comp[j];
        defect[j] = v[j] - MixedPolyF(project_weighted(v[j], m));
        big_v += v[j];
        sum_defect += defect[j];
      }
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          r.torsion += inner_weighted(defect[j], v[k], m).real();
          auto levi = w.levi(j, k);
          if (!levi.is_zero()) r.levi_term += inner_weighted(levi * comp[j], comp[k], m).real();
        }
      }
      HoloPolyF pv = project_weighted(big_v, m);
      const double pv_sq = inner_weighted(pv, pv, m).real();
      r.lhs += pv_sq;
      r.torsion_alt1 += inner_weighted(big_v, big_v, m).real() - pv_sq;
      r.torsion_alt2 += inner_weighted(sum_defect, sum_defect, m).real();
    }
  }
  r.residual = r.lhs - (r.derivative_term + r.levi_term - r.torsion);
  return r;
}

FormnormCheck formnorm_check(const HoloPolyF& u, std::size_t k, const MomentTable& m) {
  check_weight_dim(u.dim(), m);
  if (k >= u.dim()) throw std::out_of_range("variable index out of range");
  const RadialPolyWeight& w = m.weight();
  FormnormCheck c;
  auto du = u.derivative(k);
  c.lhs = inner_weighted(du, du, m).real();
  MixedPolyF mu(u);
  MixedPolyF v = w.dbar_phi(k) * mu;
  c.rhs = inner_weighted(v, v, m).real() - inner_weighted(w.levi(k, k) * mu, mu, m).real();
  c.residual = c.lhs - c.rhs;
  return c;
}

}  // namespace fock
