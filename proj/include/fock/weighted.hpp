#pragma once

#include <complex>
#include <cstddef>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "fock/holo_poly.hpp"
#include "fock/mixed_poly.hpp"
#include "fock/pform.hpp"

namespace fock {

/// c |z_j|^{2s} for one variable.
struct RadialFactor {
  double c = 1.0;
  int s = 1;
};

/// phi(z) = sum_j c_j |z_j|^{2 s_j} with c_j > 0 and integer s_j >= 1.
class RadialPolyWeight {
 public:
  explicit RadialPolyWeight(std::vector<RadialFactor> factors);
  static RadialPolyWeight gaussian(std::size_t n);

  std::size_t dim() const { return factors_.size(); }
  const std::vector<RadialFactor>& factors() const { return factors_; }
  bool is_gaussian() const;

  /// d phi / d zbar_j = c_j s_j z_j^{s_j} zbar_j^{s_j - 1}.
  MixedPolyF dbar_phi(std::size_t j) const;
  /// d^2 phi / d z_k d zbar_j; diagonal for this family with entries c_j s_j^2 |z_j|^{2(s_j - 1)}.
  MixedPolyF levi(std::size_t j, std::size_t k) const;

  /// Canonical text "c1|z1|^2s1 + ..." accepted by parse_weight.
  std::string to_string() const;

 private:
  std::vector<RadialFactor> factors_;
};

/// Reads "1|z|^4", "1|z1|^2 + 2|z2|^4" (omitted c means 1) or
/// {"weights": [{"c": 1.0, "s": 2}]}. The exponent must be a positive even integer.
/// Throws std::invalid_argument.
RadialPolyWeight parse_weight(std::string_view text);

enum class MomentMethod { ClosedForm, Quadrature };

/// M_j(k) = int_0^inf r^{2k+1} exp(-c_j r^{2 s_j}) dr, memoized per variable.
/// Safe for concurrent reads; entries are computed once under a lock.
class MomentTable {
 public:
  explicit MomentTable(RadialPolyWeight weight, MomentMethod method = MomentMethod::ClosedForm);
  MomentTable(const MomentTable&) = delete;
  MomentTable& operator=(const MomentTable&) = delete;

  const RadialPolyWeight& weight() const { return weight_; }
  MomentMethod method() const { return method_; }
  std::size_t dim() const { return weight_.dim(); }
  double moment(std::size_t j, int k) const;

 private:
  RadialPolyWeight weight_;
  MomentMethod method_;
  mutable std::mutex mu_;
  mutable std::vector<std::vector<double>> cache_;
};

/// Gamma((k+1)/s) / (2 s c^{(k+1)/s}).
double radial_moment_closed_form(double c, int s, int k);
/// Adaptive Gauss-Kronrod 7/15 over a tail-truncated interval.
double radial_moment_quadrature(double c, int s, int k, double rel_tol = 1e-13);

/// (f, g)_phi = int f conj(g) e^{-phi}: products of 2 pi M_j over the selection rule
/// a_j + d_j = b_j + c_j for the pairing of z^a zbar^b with z^c zbar^d.
std::complex<double> inner_weighted(const MixedPolyF& f, const MixedPolyF& g, const MomentTable& m);
std::complex<double> inner_weighted(const HoloPolyF& f, const HoloPolyF& g, const MomentTable& m);
double norm_sq_weighted(const PFormF& u, const MomentTable& m);

/// Weighted Bergman projection; z^a zbar^b maps to prod_j M_j(a_j)/M_j(a_j - b_j) z^{a-b} when a >= b.
HoloPolyF project_weighted(const MixedPolyF& f, const MomentTable& m);

/// V_K = sum_j (d phi / d zbar_j) u_{jK}, the un-projected weighted adjoint.
std::vector<std::pair<FormIndex, MixedPolyF>> adjoint_symbols(const PFormF& u, const RadialPolyWeight& w);
/// d*_phi u = sum'_K P_phi(V_K) dz_K. Throws for p = 0.
PFormF partial_star_weighted(const PFormF& u, const MomentTable& m);

/// Terms of the weighted energy identity
/// lhs = derivative_term + levi_term - torsion.
struct KohnMorreyReport {
  double lhs = 0;
  double derivative_term = 0;
  double levi_term = 0;
  double torsion = 0;         ///< sum_K sum_jk (v_j - P v_j, v_k)
  double torsion_alt1 = 0;    ///< sum_K ||V_K||^2 - ||P V_K||^2
  double torsion_alt2 = 0;    ///< sum_K ||sum_j (I - P) v_j||^2
  double residual = 0;        ///< lhs - (derivative_term + levi_term - torsion)
  double scale() const;       ///< 1 + |lhs|
};
KohnMorreyReport kohn_morrey_report(const PFormF& u, const MomentTable& m);

struct FormnormCheck {
  double lhs = 0;  ///< ||d u / d z_k||^2_phi
  double rhs = 0;  ///< ||(d phi / d zbar_k) u||^2_phi - int phi_{k kbar} |u|^2 e^{-phi}
  double residual = 0;
};
FormnormCheck formnorm_check(const HoloPolyF& u, std::size_t k, const MomentTable& m);

}  // namespace fock
