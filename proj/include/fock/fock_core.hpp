#pragma once

#include <complex>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "fock/exact_scalar.hpp"
#include "fock/holo_poly.hpp"
#include "fock/mixed_poly.hpp"

namespace fock {

using Point = std::vector<std::complex<double>>;
using OrthonormalCoeffs = std::map<MultiIndex, std::complex<double>, GradedLex>;

/// ||z^alpha||^2 = pi^n alpha! in the Gaussian-weighted space.
ExactScalar monomial_norm_sq(const MultiIndex& alpha);

/// (f, g) = int f conj(g) e^{-|z|^2}, exact.
ExactScalar inner_gaussian(const HoloPoly& f, const HoloPoly& g);
inline ExactScalar norm_sq_gaussian(const HoloPoly& f) { return inner_gaussian(f, f); }

/// Coefficients against phi_alpha = z^alpha / sqrt(pi^n alpha!).
OrthonormalCoeffs to_orthonormal(const HoloPoly& f);

/// sum |c_alpha|^2 over orthonormal coefficients.
double parseval_norm_sq(const OrthonormalCoeffs& coeffs);

std::complex<double> evaluate(const HoloPoly& f, std::span<const std::complex<double>> z);
std::complex<double> evaluate(const HoloPolyF& f, std::span<const std::complex<double>> z);

/// pi^{-n} sum_{k=0}^{N} (z . conj(w))^k / k!
std::complex<double> kernel_truncated(std::span<const std::complex<double>> z,
                                      std::span<const std::complex<double>> w, int cutoff);

/// Closed-form kernel diagonal e^{|z|^2} / pi^n.
double kernel_diagonal(std::span<const std::complex<double>> z);

/// (f, K(., z)) computed from the kernel's monomial expansion up to degree(f).
std::complex<double> reproduce(const HoloPoly& f, std::span<const std::complex<double>> z);

/// Orthogonal projection of a mixed polynomial onto holomorphic polynomials.
HoloPoly bergman_project_gaussian(const MixedPoly& m);

/// Primitive with zero constant term (n = 1 only).
HoloPoly volterra_primitive(const HoloPoly& f);
/// Operator norm of T on span{phi_k : cutoff <= k < cutoff + width} (orthonormal section).
double volterra_section_norm(int cutoff, int width);

/// Unboundedness witnesses F = sum_{k>=2} phi_k / sqrt(k(k-1)) and G = sum_k phi_k / (k+1).
enum class WitnessKind { F, G };

struct WitnessSeries {
  WitnessKind kind;
  /// Orthonormal coefficient of phi_k.
  double coefficient(int k) const;
};

struct WitnessNorms {
  double series_norm_sq;    ///< ||partial sum||^2
  double operator_norm_sq;  ///< ||a(partial sum)||^2 for F, ||a*(partial sum)||^2 for G
};

/// Partial sums up to phi_N; F pairs with a (differentiation), G with a* (multiplication by z).
WitnessNorms witness_partial_norms(const WitnessSeries& w, int cutoff);

/// Annihilation / creation operators on 1-D orthonormal coefficient vectors (index = k).
std::vector<double> annihilate(std::span<const double> coeffs);
std::vector<double> create(std::span<const double> coeffs);

}  // namespace fock
