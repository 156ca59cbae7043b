#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fock/exact_scalar.hpp"
#include "fock/fock_core.hpp"
#include "fock/form_basis.hpp"
#include "fock/linalg/dense.hpp"
#include "fock/pform.hpp"

namespace fock {

/// Raised when an operator is applied outside 0 <= p <= n or at a boundary degree
/// where it is not defined (d at p = n, its adjoint at p = 0).
class FormDegreeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by the canonical solvers when the right-hand side is not closed.
class NotClosedError : public std::domain_error {
 public:
  NotClosedError(const std::string& what, PForm residual, double residual_norm)
      : std::domain_error(what), residual_(std::move(residual)), residual_norm_(residual_norm) {}
  const PForm& residual() const { return residual_; }
  double residual_norm() const { return residual_norm_; }

 private:
  PForm residual_;
  double residual_norm_;
};

/// d u = sum'_J sum_j (d u_J / d z_j) dz_j ^ dz_J. Weight-independent.
template <class C>
PFormT<C> partial(const PFormT<C>& u) {
  if (u.degree() >= u.dim()) throw FormDegreeError("partial is not defined on (n,0)-forms");
  PFormT<C> out(u.dim(), u.degree() + 1);
  for (const auto& [J, f] : u.components()) {
    for (std::size_t j = 0; j < u.dim(); ++j) {
      Wedge w = wedge(static_cast<int>(j), J);
      if (w.sign == 0) continue;
      auto df = f.derivative(j);
      if (w.sign < 0) df *= ScalarTraits<C>::from_integer(-1);
      out.add(w.index, df);
    }
  }
  return out;
}

/// Gaussian adjoint: (d* u)_K = sum_j z_j u_{jK}.
PForm partial_star(const PForm& u);

/// Laplacian via d* d + d d* (terms dropped where the operator is undefined).
PForm box(const PForm& u);
/// Closed form sum'_J (sum_k z_k d u_J / d z_k + p u_J) dz_J.
PForm box_closed_form(const PForm& u);

struct SpectrumRow {
  long eigenvalue;
  mpz_class multiplicity;
};
using SpectrumTable = std::vector<SpectrumRow>;

/// Eigenvalues m + p with multiplicity C(n+m-1, n-1) C(n, p) for m = 0..m_max.
SpectrumTable spectrum_table(std::size_t n, std::size_t p, int m_max);

/// Finite section of the Laplacian on degree <= N forms in the orthonormal basis.
linalg::CMatrix assemble_box_matrix(std::size_t n, std::size_t p, int cutoff);

/// Inverse Laplacian: each degree-m homogeneous part scaled by 1/(m+p). Rejects p = 0.
PForm neumann(const PForm& u);

/// Canonical solution of d u = alpha and its certificates.
struct DbarSolution {
  PForm u0;
  PForm residual;                             ///< d u0 - alpha, exactly zero on success
  ExactScalar u0_norm_sq;
  ExactScalar alpha_norm_sq;
  std::vector<ExactScalar> kernel_pairings;   ///< (u0, k) for a spanning set of ker d
  bool orthogonal() const;
};

/// u0 = d* N alpha. Throws NotClosedError when d alpha != 0 (p < n).
PForm solve_partial(const PForm& alpha);
/// solve_partial plus residual, norms and kernel orthogonality up to the degree of u0.
DbarSolution solve_partial_report(const PForm& alpha);

/// Spanning set of ker d on (p,0)-forms of degree <= max_degree, by brute-force nullspace
/// per homogeneous block (d lowers degree by one).
std::vector<PForm> kernel_basis_partial(std::size_t n, std::size_t p, int max_degree);

/// ||f||^2 + sum_k ||d f / d z_k||^2, exact.
ExactScalar graph_norm_sq(const HoloPoly& f);
/// Same norm from orthonormal coefficients: sum |f_alpha|^2 (1 + |alpha|).
double graph_norm_sq(const OrthonormalCoeffs& f);

/// Terms of the Gaussian energy identity
/// ||du||^2 + ||d*u||^2 = sum'_J sum_j ||d u_J / d z_j||^2 + p ||u||^2.
struct EnergyTerms {
  ExactScalar lhs;
  ExactScalar derivative_term;
  ExactScalar p_norm_term;
  ExactScalar norm_sq;
  ExactScalar residual() const { return lhs - (derivative_term + p_norm_term); }
};
EnergyTerms energy_terms(const PForm& u);

}  // namespace fock
