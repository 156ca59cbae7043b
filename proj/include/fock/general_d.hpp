#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fock/exact_scalar.hpp"
#include "fock/form_basis.hpp"
#include "fock/pform.hpp"
#include "fock/weyl.hpp"

namespace fock {

/// D u = sum'_J sum_k p_k(u_J) dz_k ^ dz_J for constant-coefficient p_1..p_n.
class DOperator {
 public:
  /// Throws std::invalid_argument unless there are n operators in n variables, all without z-part.
  explicit DOperator(std::vector<WeylOperator> p);
  /// p_j = d_j, so D is the holomorphic exterior derivative.
  static DOperator dbar(std::size_t n);

  std::size_t dim() const { return p_.size(); }
  const std::vector<WeylOperator>& ops() const { return p_; }
  const std::vector<WeylOperator>& adjoints() const { return p_star_; }
  /// d when every p_j is a nonzero form of pure order d; then the Laplacian preserves degree.
  std::optional<int> homogeneous_degree() const { return homogeneous_degree_; }
  /// Largest derivative order over all p_j.
  int max_order() const { return max_order_; }

 private:
  std::vector<WeylOperator> p_;
  std::vector<WeylOperator> p_star_;
  std::optional<int> homogeneous_degree_;
  int max_order_ = 0;
};

/// Parses one operator expression per variable.
DOperator parse_d_operator(const std::vector<std::string>& exprs, std::size_t n);

PForm apply_D(const DOperator& d, const PForm& u);
PFormF apply_D(const DOperator& d, const PFormF& u);
/// D*v = sum'_K sum_j p_j*(v_{jK}) dz_K.
PForm apply_Dstar(const DOperator& d, const PForm& v);
PFormF apply_Dstar(const DOperator& d, const PFormF& v);

/// sum'_K sum_jk ([p_k, p_j*] u_{jK}, v_{kK}); the commutator form is its diagonal.
ExactScalar commutator_pairing(const DOperator& d, const PForm& u, const PForm& v);
ExactScalar commutator_form(const DOperator& d, const PForm& u);

/// ||Du||^2 + ||D*u||^2 = sum'_J sum_k ||p_k u_J||^2 + commutator form, all exact.
struct DEnergyTerms {
  ExactScalar lhs;
  ExactScalar pure_term;
  ExactScalar commutator_term;
  ExactScalar residual() const { return lhs - (pure_term + commutator_term); }
};
DEnergyTerms d_energy_terms(const DOperator& d, const PForm& u);

struct EstimateCertificate {
  int window = 0;                        ///< forms of degree 0..window
  double lambda_min = 0;                 ///< smallest eigenvalue of the commutator form, orthonormal basis
  std::optional<double> constant;        ///< 1 / lambda_min when positive
  std::optional<Rational> certified;     ///< c with commutator form >= c ||u||^2 proven exactly
  bool positive() const { return lambda_min > 0; }
};
/// Commutator form on p-forms of degree <= window.
EstimateCertificate estimate_constant(const DOperator& d, std::size_t p, int window);
/// Exact: commutator form - c ||.||^2 is positive semidefinite on the window.
bool certify_lower_bound(const DOperator& d, std::size_t p, int window, const Rational& c);

/// Hermitian form matrices over FormBasis(n, p, 0, window), in units of pi^n.
linalg::QMatrix commutator_matrix(const DOperator& d, const FormBasis& basis);
linalg::QMatrix energy_matrix(const DOperator& d, const FormBasis& basis);
linalg::QMatrix gram_matrix(const FormBasis& basis);

/// Float Gaussian norm of a form with float coefficients.
double norm_sq_gaussian_float(const PFormF& u);

enum class SolveMode { Auto, Exact, Galerkin };

struct CanonicalSolution {
  bool exact = false;
  std::optional<PForm> exact_solution;   ///< set on the exact block path
  std::optional<PForm> exact_neumann;    ///< N_D applied to the right-hand side, exact path
  PFormF solution;
  int window = 0;
  double residual_norm = 0;              ///< ||D u0 - alpha|| (or ||D* v0 - beta||)
  std::optional<double> previous_residual;  ///< same at window - 2 on the Galerkin path
  bool converged = true;
  std::vector<std::complex<double>> kernel_pairings;  ///< (u0, k) / (||u0|| ||k||) for a kernel basis
  bool exactly_orthogonal = false;       ///< every pairing exactly zero (exact path)
  double solution_norm = 0;
  double rhs_norm = 0;
  double norm_ratio() const { return rhs_norm == 0 ? 0 : solution_norm / rhs_norm; }
  EstimateCertificate certificate;
};

/// u0 = D* N_D alpha on forms of degree <= window. Throws NotClosedError when D alpha != 0 and
/// std::domain_error when the certificate is not positive.
CanonicalSolution solve_canonical_D(const DOperator& d, const PForm& alpha, int window,
                                    SolveMode mode = SolveMode::Auto);
/// v0 = D N_D beta. Requires n > 1, 1 <= p <= n - 1 and D* beta = 0.
CanonicalSolution solve_canonical_Dstar(const DOperator& d, const PForm& beta, int window,
                                        SolveMode mode = SolveMode::Auto);

/// Spanning sets of ker D and ker D* on p-forms of degree <= window.
std::vector<PForm> kernel_basis_D(const DOperator& d, std::size_t p, int window);
std::vector<PForm> kernel_basis_Dstar(const DOperator& d, std::size_t p, int window);

}  // namespace fock
