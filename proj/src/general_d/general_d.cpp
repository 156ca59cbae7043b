#include "fock/general_d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "fock/dbar.hpp"
#include "fock/linalg/dense.hpp"
#include "fock/linalg/exact.hpp"

namespace fock {

DOperator::DOperator(std::vector<WeylOperator> p) : p_(std::move(p)) {
  if (p_.empty()) throw std::invalid_argument("D needs one operator per variable");
  const std::size_t n = p_.size();
  std::set<int> orders;
  for (const auto& op : p_) {
    if (op.dim() != n) throw std::invalid_argument("D needs exactly n operators in n variables");
    if (!op.is_constant_coefficient()) throw std::invalid_argument("D operators must have constant coefficients");
    for (const auto& [k, c] : op.terms()) orders.insert(k.d.degree());
    p_star_.push_back(formal_adjoint_constant(op));
  }
  if (orders.size() == 1) homogeneous_degree_ = *orders.begin();
  max_order_ = orders.empty() ? 0 : *orders.rbegin();
}

DOperator DOperator::dbar(std::size_t n) {
  std::vector<WeylOperator> p;
  for (std::size_t j = 0; j < n; ++j) p.push_back(WeylOperator::diff(n, j));
  return DOperator(std::move(p));
}

DOperator parse_d_operator(const std::vector<std::string>& exprs, std::size_t n) {
  if (exprs.size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " operators, got " + std::to_string(exprs.size()));
  }
  std::vector<WeylOperator> p;
  for (const auto& e : exprs) p.push_back(parse_weyl(e, n));
  return DOperator(std::move(p));
}

namespace {

template <class C>
PFormT<C> apply_D_impl(const DOperator& d, const PFormT<C>& u) {
  if (u.dim() != d.dim()) throw std::invalid_argument("operator and form dimensions differ");
  if (u.degree() >= u.dim()) throw FormDegreeError("D is not defined on (n,0)-forms");
  PFormT<C> out(u.dim(), u.degree() + 1);
  for (const auto& [J, f] : u.components()) {
    for (std::size_t k = 0; k < u.dim(); ++k) {
      Wedge w = wedge(static_cast<int>(k), J);
      if (w.sign == 0) continue;
      auto g = fock::apply(d.ops()[k], f);
      if (w.sign < 0) g *= ScalarTraits<C>::from_integer(-1);
      out.add(w.index, g);
    }
  }
  return out;
}

template <class C>
PFormT<C> apply_Dstar_impl(const DOperator& d, const PFormT<C>& v) {
  if (v.dim() != d.dim()) throw std::invalid_argument("operator and form dimensions differ");
  if (v.degree() == 0) throw FormDegreeError("D* is not defined on functions");
  PFormT<C> out(v.dim(), v.degree() - 1);
  for (const auto& K : increasing_indices(v.dim(), v.degree() - 1)) {
    for (std::size_t j = 0; j < v.dim(); ++j) {
      auto c = v.signed_component(static_cast<int>(j), K);
      if (!c.is_zero()) out.add(K, fock::apply(d.adjoints()[j], c));
    }
  }
  return out;
}

// (A u)_J = sum over (k, K) with dz_k ^ dz_K = sign dz_J of sign sum_j [p_k, p_j*] u_{jK},
// so that the commutator pairing is (A u, v).
class CommutatorAction {
 public:
  explicit CommutatorAction(const DOperator& d) : n_(d.dim()), c_(n_ * n_) {
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t j = 0; j < n_; ++j) c_[k * n_ + j] = commutator(d.ops()[k], d.adjoints()[j]);
    }
  }
  PForm operator()(const PForm& u) const {
    if (u.degree() == 0) throw FormDegreeError("commutator form needs p >= 1");
    PForm out(n_, u.degree());
    for (const auto& K : increasing_indices(n_, u.degree() - 1)) {
      std::vector<HoloPoly> comp;
      for (std::size_t j = 0; j < n_; ++j) comp.push_back(u.signed_component(static_cast<int>(j), K));
      for (std::size_t k = 0; k < n_; ++k) {
        Wedge w = wedge(static_cast<int>(k), K);
        if (w.sign == 0) continue;
        HoloPoly acc(n_);
        for (std::size_t j = 0; j < n_; ++j) {
          if (!comp[j].is_zero()) acc += apply(c_[k * n_ + j], comp[j]);
        }
        if (w.sign < 0) acc *= QComplex(-1);
        out.add(w.index, acc);
      }
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<WeylOperator> c_;
};

// Q(i, j) = (img_j, e_i) / pi^n; terms of img_j outside the basis pair to zero.
linalg::QMatrix pairing_matrix(const FormBasis& basis, const std::vector<PForm>& images) {
  const std::size_t m = basis.size();
  linalg::QMatrix q(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& [J, f] : images[j].components()) {
      for (const auto& [alpha, c] : f.terms()) {
        auto i = basis.find(J, alpha);
        if (i) q(*i, j) = c * QComplex(Rational(basis.weight(*i)));
      }
    }
  }
  return q;
}

double norm_of(const ExactScalar& s) { return std::sqrt(std::max(0.0, s.to_double())); }

std::complex<double> inner_gaussian_float(const PFormF& u, const PFormF& v) {
  const double pi_n = std::pow(std::numbers::pi, static_cast<double>(u.dim()));
  std::complex<double> sum = 0;
  for (const auto& [J, f] : u.components()) {
    auto it = v.components().find(J);
    if (it == v.components().end()) continue;
    for (const auto& [a, c] : f.terms()) {
      auto g = it->second.coeff(a);
      if (g != std::complex<double>{}) sum += c * std::conj(g) * a.factorial().get_d() * pi_n;
    }
  }
  return sum;
}

PForm box_D(const DOperator& d, const PForm& u) {
  PForm out(u.dim(), u.degree());
  if (u.degree() < u.dim()) out += apply_Dstar(d, apply_D(d, u));
  if (u.degree() > 0) out += apply_D(d, apply_Dstar(d, u));
  return out;
}

// Exact N_D on a degree-preserving Laplacian, one homogeneous block at a time.
PForm neumann_blocks(const DOperator& d, const PForm& rhs) {
  PForm out(rhs.dim(), rhs.degree());
  auto top = rhs.max_poly_degree();
  if (!top) return out;
  for (int m = 0; m <= *top; ++m) {
    PForm part = rhs.map_components([m](const HoloPoly& f) { return f.homogeneous_part(m); });
    if (part.is_zero()) continue;
    FormBasis block(rhs.dim(), rhs.degree(), m, m);
    auto a = map_matrix(block, block, [&](const PForm& e) { return box_D(d, e); });
    auto x = linalg::solve(a, block.coordinates(part));
    if (!x) throw std::domain_error("Laplacian block of degree " + std::to_string(m) + " is singular");
    out += block.combine(*x);
  }
  return out;
}

// Galerkin approximation of N_D rhs on forms of degree <= window.
PFormF neumann_galerkin(const DOperator& d, const PForm& rhs, int window) {
  FormBasis basis(rhs.dim(), rhs.degree(), 0, window);
  linalg::CMatrix h = orthonormal_matrix(basis, energy_matrix(d, basis));
  std::vector<std::complex<double>> b(basis.size());
  std::vector<double> root_w(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    root_w[i] = std::sqrt(basis.weight(i).get_d());
    b[i] = rhs.component(basis[i].J).coeff(basis[i].alpha).to_complex() * root_w[i];
  }
  auto cg = linalg::conjugate_gradient(h, b);
  PFormF w(rhs.dim(), rhs.degree());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (cg.x[i] != std::complex<double>{}) w.add(basis[i].J, HoloPolyF::monomial(basis[i].alpha, cg.x[i] / root_w[i]));
  }
  return w;
}

enum class Direction { D, Dstar };

struct GalerkinStep {
  PFormF solution;
  double residual;
};

GalerkinStep galerkin_step(const DOperator& d, const PForm& rhs, int window, Direction dir) {
  PFormF w = neumann_galerkin(d, rhs, window);
  GalerkinStep s;
  if (dir == Direction::D) {
    s.solution = apply_Dstar(d, w);
    s.residual = std::sqrt(norm_sq_gaussian_float(apply_D(d, s.solution) - to_float(rhs)));
  } else {
    s.solution = apply_D(d, w);
    s.residual = std::sqrt(norm_sq_gaussian_float(apply_Dstar(d, s.solution) - to_float(rhs)));
  }
  return s;
}

CanonicalSolution solve_impl(const DOperator& d, const PForm& rhs, int window, SolveMode mode, Direction dir) {
  if (rhs.dim() != d.dim()) throw std::invalid_argument("operator and form dimensions differ");
  const std::size_t p = rhs.degree();
  if (dir == Direction::D) {
    if (p == 0) throw FormDegreeError("canonical solution of Du = alpha needs p >= 1");
    if (p < rhs.dim()) {
      PForm r = apply_D(d, rhs);
      if (!r.is_zero()) throw NotClosedError("right-hand side is not D-closed", r, norm_of(norm_sq_form(r)));
    }
  } else {
    if (rhs.dim() < 2 || p == 0 || p >= rhs.dim()) {
      throw FormDegreeError("canonical solution of D*v = beta needs n > 1 and 1 <= p <= n-1");
    }
    PForm r = apply_Dstar(d, rhs);
    if (!r.is_zero()) throw NotClosedError("right-hand side is not D*-closed", r, norm_of(norm_sq_form(r)));
  }
  const int deg = rhs.max_poly_degree().value_or(0);
  if (window < deg) throw std::invalid_argument("window is below the degree of the right-hand side");

  CanonicalSolution s;
  s.window = window;
  s.certificate = estimate_constant(d, p, window);
  if (!s.certificate.positive()) throw std::domain_error("commutator form is not positive on the window");
  s.rhs_norm = norm_of(norm_sq_form(rhs));

  const bool exact = mode == SolveMode::Exact || (mode == SolveMode::Auto && d.homogeneous_degree());
  if (exact && !d.homogeneous_degree()) throw std::invalid_argument("exact solve needs a homogeneous D");

  const std::size_t kernel_degree = dir == Direction::D ? p - 1 : p + 1;
  auto kernel = dir == Direction::D ? kernel_basis_D(d, kernel_degree, window)
                                    : kernel_basis_Dstar(d, kernel_degree, window);

  if (exact) {
    s.exact = true;
    PForm nrhs = neumann_blocks(d, rhs);
    PForm sol = dir == Direction::D ? apply_Dstar(d, nrhs) : apply_D(d, nrhs);
    PForm res = (dir == Direction::D ? apply_D(d, sol) : apply_Dstar(d, sol)) - rhs;
    s.residual_norm = norm_of(norm_sq_form(res));
    s.solution_norm = norm_of(norm_sq_form(sol));
    s.exactly_orthogonal = true;
    for (const auto& k : kernel) {
      ExactScalar pair = inner_form(sol, k);
      if (!pair.is_zero()) s.exactly_orthogonal = false;
      const double scale = s.solution_norm * norm_of(norm_sq_form(k));
      s.kernel_pairings.push_back(scale == 0 ? std::complex<double>{} : pair.to_complex() / scale);
    }
    s.converged = res.is_zero();
    s.solution = to_float(sol);
    s.exact_solution = std::move(sol);
    s.exact_neumann = std::move(nrhs);
    return s;
  }

  GalerkinStep now = galerkin_step(d, rhs, window, dir);
  s.solution = now.solution;
  s.residual_norm = now.residual;
  s.solution_norm = std::sqrt(norm_sq_gaussian_float(now.solution));
  if (window - 2 >= deg) {
    GalerkinStep before = galerkin_step(d, rhs, window - 2, dir);
    s.previous_residual = before.residual;
    // A residual at rounding level cannot halve further.
    const double floor = 1e-12 * (1.0 + s.rhs_norm);
    s.converged = now.residual <= 0.5 * before.residual || now.residual <= floor;
  }
  for (const auto& k : kernel) {
    PFormF kf = to_float(k);
    const double scale = s.solution_norm * std::sqrt(norm_sq_gaussian_float(kf));
    s.kernel_pairings.push_back(scale == 0 ? std::complex<double>{} : inner_gaussian_float(s.solution, kf) / scale);
  }
  return s;
}

}  // namespace

PForm apply_D(const DOperator& d, const PForm& u) { return apply_D_impl(d, u); }
PFormF apply_D(const DOperator& d, const PFormF& u) { return apply_D_impl(d, u); }
PForm apply_Dstar(const DOperator& d, const PForm& v) { return apply_Dstar_impl(d, v); }
PFormF apply_Dstar(const DOperator& d, const PFormF& v) { return apply_Dstar_impl(d, v); }

ExactScalar commutator_pairing(const DOperator& d, const PForm& u, const PForm& v) {
  u.check_shape(v);
  return inner_form(CommutatorAction(d)(u), v);
}

ExactScalar commutator_form(const DOperator& d, const PForm& u) { return commutator_pairing(d, u, u); }

DEnergyTerms d_energy_terms(const DOperator& d, const PForm& u) {
  const int pi_power = static_cast<int>(u.dim());
  DEnergyTerms t{ExactScalar({}, pi_power), ExactScalar({}, pi_power), ExactScalar({}, pi_power)};
  if (u.degree() < u.dim()) t.lhs += norm_sq_form(apply_D(d, u));
  if (u.degree() > 0) {
    t.lhs += norm_sq_form(apply_Dstar(d, u));
    t.commutator_term = commutator_form(d, u);
  }
  for (const auto& [J, f] : u.components()) {
    for (const auto& op : d.ops()) t.pure_term += norm_sq_gaussian(apply(op, f));
  }
  return t;
}

linalg::QMatrix commutator_matrix(const DOperator& d, const FormBasis& basis) {
  CommutatorAction act(d);
  std::vector<PForm> images;
  images.reserve(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) images.push_back(act(basis.form(j)));
  return pairing_matrix(basis, images);
}

linalg::QMatrix energy_matrix(const DOperator& d, const FormBasis& basis) {
  std::vector<PForm> images;
  images.reserve(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) images.push_back(box_D(d, basis.form(j)));
  return pairing_matrix(basis, images);
}

linalg::QMatrix gram_matrix(const FormBasis& basis) {
  linalg::QMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) g(i, i) = QComplex(Rational(basis.weight(i)));
  return g;
}

bool certify_lower_bound(const DOperator& d, std::size_t p, int window, const Rational& c) {
  FormBasis basis(d.dim(), p, 0, window);
  return linalg::is_positive_semidefinite(linalg::shifted(commutator_matrix(d, basis), gram_matrix(basis), c));
}

EstimateCertificate estimate_constant(const DOperator& d, std::size_t p, int window) {
  if (p == 0) throw FormDegreeError("commutator estimate needs p >= 1");
  if (p > d.dim()) throw FormDegreeError("form degree exceeds dimension");
  FormBasis basis(d.dim(), p, 0, window);
  linalg::QMatrix q = commutator_matrix(d, basis);
  EstimateCertificate cert;
  cert.window = window;
  auto ev = linalg::hermitian_eigenvalues(orthonormal_matrix(basis, q));
  cert.lambda_min = ev.empty() ? 0.0 : ev.front();
  if (cert.lambda_min > 0) cert.constant = 1.0 / cert.lambda_min;

  const linalg::QMatrix g = gram_matrix(basis);
  constexpr long grid = 1L << 20;
  auto psd_at = [&](const Rational& c) { return linalg::is_positive_semidefinite(linalg::shifted(q, g, c)); };
  // Integral spectra are common, so try the rounded value before backing off.
  Rational rounded(std::lround(cert.lambda_min * grid), grid);
  rounded.canonicalize();
  if (rounded.get_d() <= cert.lambda_min + 1e-9 * (1.0 + std::abs(cert.lambda_min)) && psd_at(rounded)) {
    cert.certified = rounded;
  } else {
    Rational lower(std::lround(std::floor((cert.lambda_min - 1e-6 * (1.0 + std::abs(cert.lambda_min))) * grid)), grid);
    lower.canonicalize();
    if (psd_at(lower)) cert.certified = lower;
  }
  return cert;
}

double norm_sq_gaussian_float(const PFormF& u) { return inner_gaussian_float(u, u).real(); }

CanonicalSolution solve_canonical_D(const DOperator& d, const PForm& alpha, int window, SolveMode mode) {
  return solve_impl(d, alpha, window, mode, Direction::D);
}

CanonicalSolution solve_canonical_Dstar(const DOperator& d, const PForm& beta, int window, SolveMode mode) {
  return solve_impl(d, beta, window, mode, Direction::Dstar);
}

std::vector<PForm> kernel_basis_D(const DOperator& d, std::size_t p, int window) {
  FormBasis from(d.dim(), p, 0, window);
  if (p == d.dim()) {
    std::vector<PForm> all;
    for (std::size_t i = 0; i < from.size(); ++i) all.push_back(from.form(i));
    return all;
  }
  FormBasis to(d.dim(), p + 1, 0, window);
  return kernel_forms(from, to, [&](const PForm& e) { return apply_D(d, e); });
}

std::vector<PForm> kernel_basis_Dstar(const DOperator& d, std::size_t p, int window) {
  FormBasis from(d.dim(), p, 0, window);
  if (p == 0) {
    std::vector<PForm> all;
    for (std::size_t i = 0; i < from.size(); ++i) all.push_back(from.form(i));
    return all;
  }
  FormBasis to(d.dim(), p - 1, 0, window + d.max_order());
  return kernel_forms(from, to, [&](const PForm& e) { return apply_Dstar(d, e); });
}

}  // namespace fock
