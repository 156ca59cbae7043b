#include "fock/dbar.hpp"

#include <algorithm>
#include <stdexcept>

namespace fock {

PForm partial_star(const PForm& u) {
  if (u.degree() == 0) throw FormDegreeError("partial_star is not defined on functions");
  PForm out(u.dim(), u.degree() - 1);
  for (const auto& [J, f] : u.components()) {
    for (int j : J) {
      FormIndex K;
      std::copy_if(J.begin(), J.end(), std::back_inserter(K), [j](int k) { return k != j; });
      Wedge w = wedge(j, K);
      HoloPoly term = f.shifted(MultiIndex::unit(u.dim(), static_cast<std::size_t>(j)));
      if (w.sign < 0) term *= QComplex(-1);
      out.add(K, term);
    }
  }
  return out;
}

PForm box_closed_form(const PForm& u) {
  const auto p = static_cast<long>(u.degree());
  return u.map_components([&](const HoloPoly& f) {
    // sum_k z_k d/dz_k is the Euler operator: multiplies the degree-m part by m.
    return f.map_coefficients([&](const MultiIndex& a, const QComplex& c) { return c * QComplex(a.degree() + p); });
  });
}

PForm box(const PForm& u) {
  PForm out(u.dim(), u.degree());
  if (u.degree() < u.dim()) out += partial_star(partial(u));
  if (u.degree() > 0) out += partial(partial_star(u));
  if (!(out == box_closed_form(u))) {
    throw std::logic_error("Laplacian disagrees with its closed form");
  }
  return out;
}

SpectrumTable spectrum_table(std::size_t n, std::size_t p, int m_max) {
  if (n == 0) throw std::invalid_argument("dimension must be at least 1");
  if (p > n) throw FormDegreeError("form degree exceeds dimension");
  if (m_max < 0) throw std::invalid_argument("m_max must be non-negative");
  SpectrumTable rows;
  mpz_class copies = binomial(static_cast<long>(n), static_cast<long>(p));
  for (int m = 0; m <= m_max; ++m) {
    rows.push_back({m + static_cast<long>(p), binomial(static_cast<long>(n) + m - 1, static_cast<long>(n) - 1) * copies});
  }
  return rows;
}

linalg::CMatrix assemble_box_matrix(std::size_t n, std::size_t p, int cutoff) {
  if (p > n) throw FormDegreeError("form degree exceeds dimension");
  FormBasis basis(n, p, 0, cutoff);
  return orthonormal_matrix(basis, operator_gram_matrix(basis, [](const PForm& e) { return box(e); }));
}

PForm neumann(const PForm& u) {
  if (u.degree() == 0) throw FormDegreeError("0 is in the spectrum on functions; the Laplacian is not invertible");
  const auto p = static_cast<long>(u.degree());
  return u.map_components([&](const HoloPoly& f) {
    return f.map_coefficients(
        [&](const MultiIndex& a, const QComplex& c) { return c * QComplex(Rational(1, a.degree() + p)); });
  });
}

PForm solve_partial(const PForm& alpha) {
  if (alpha.degree() == 0) throw FormDegreeError("canonical solution needs a form of degree at least 1");
  if (alpha.degree() < alpha.dim()) {
    PForm r = partial(alpha);
    if (!r.is_zero()) {
      double norm = std::sqrt(norm_sq_form(r).to_double());
      throw NotClosedError("right-hand side is not d-closed", r, norm);
    }
  }
  return partial_star(neumann(alpha));
}

bool DbarSolution::orthogonal() const {
  return std::all_of(kernel_pairings.begin(), kernel_pairings.end(), [](const ExactScalar& s) { return s.is_zero(); });
}

DbarSolution solve_partial_report(const PForm& alpha) {
  DbarSolution s;
  s.u0 = solve_partial(alpha);
  s.residual = partial(s.u0) - alpha;
  s.u0_norm_sq = norm_sq_form(s.u0);
  s.alpha_norm_sq = norm_sq_form(alpha);
  int deg = s.u0.max_poly_degree().value_or(0);
  for (const PForm& k : kernel_basis_partial(alpha.dim(), alpha.degree() - 1, deg)) {
    s.kernel_pairings.push_back(inner_form(s.u0, k));
  }
  return s;
}

std::vector<PForm> kernel_basis_partial(std::size_t n, std::size_t p, int max_degree) {
  std::vector<PForm> out;
  for (int m = 0; m <= max_degree; ++m) {
    FormBasis from(n, p, m, m);
    if (p == n) {
      for (std::size_t i = 0; i < from.size(); ++i) out.push_back(from.form(i));
      continue;
    }
    FormBasis to(n, p + 1, m - 1, m - 1);
    auto block = kernel_forms(from, to, [](const PForm& e) { return partial(e); });
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

ExactScalar graph_norm_sq(const HoloPoly& f) {
  ExactScalar sum = norm_sq_gaussian(f);
  for (std::size_t k = 0; k < f.dim(); ++k) sum += norm_sq_gaussian(f.derivative(k));
  return sum;
}

double graph_norm_sq(const OrthonormalCoeffs& f) {
  double sum = 0.0;
  for (const auto& [a, c] : f) sum += std::norm(c) * (1.0 + a.degree());
  return sum;
}

EnergyTerms energy_terms(const PForm& u) {
  const int pi_power = static_cast<int>(u.dim());
  EnergyTerms t{ExactScalar({}, pi_power), ExactScalar({}, pi_power), ExactScalar({}, pi_power),
                norm_sq_form(u)};
  if (u.degree() < u.dim()) t.lhs += norm_sq_form(partial(u));
  if (u.degree() > 0) t.lhs += norm_sq_form(partial_star(u));
  for (const auto& [J, f] : u.components()) {
    for (std::size_t j = 0; j < u.dim(); ++j) t.derivative_term += norm_sq_gaussian(f.derivative(j));
  }
  t.p_norm_term = t.norm_sq.scaled(Rational(static_cast<long>(u.degree())));
  return t;
}

}  // namespace fock
