#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fock/exact_scalar.hpp"
#include "fock/fock_core.hpp"
#include "fock/linalg/dense.hpp"
#include "fock/linalg/exact.hpp"
#include "fock/pform.hpp"

namespace fock {

/// Monomial (p,0)-forms z^alpha dz_J, enumerated by total degree block, then J, then alpha
/// in graded lexicographic order.
class FormBasis {
 public:
  struct Element {
    FormIndex J;
    MultiIndex alpha;
  };

  /// All z^alpha dz_J with |J| = p and min_degree <= |alpha| <= max_degree.
  FormBasis(std::size_t n, std::size_t p, int min_degree, int max_degree);

  std::size_t dim() const { return n_; }
  std::size_t form_degree() const { return p_; }
  std::size_t size() const { return elements_.size(); }
  const Element& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Element>& elements() const { return elements_; }

  PForm form(std::size_t i) const;
  /// Position of z^alpha dz_J, none when outside the basis.
  std::optional<std::size_t> find(const FormIndex& J, const MultiIndex& alpha) const {
    auto it = lookup_.find({J, alpha});
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }
  /// Coordinates of u; throws std::out_of_range when u has a term outside the basis span.
  linalg::QVector coordinates(const PForm& u) const;
  PForm combine(const linalg::QVector& coords) const;

  /// alpha! for element i; the Gaussian norm^2 is pi^n times this.
  mpz_class weight(std::size_t i) const { return elements_[i].alpha.factorial(); }

 private:
  std::size_t n_;
  std::size_t p_;
  std::vector<Element> elements_;
  struct KeyLess {
    bool operator()(const std::pair<FormIndex, MultiIndex>& x, const std::pair<FormIndex, MultiIndex>& y) const {
      if (x.first != y.first) return x.first < y.first;
      return GradedLex{}(x.second, y.second);
    }
  };
  std::map<std::pair<FormIndex, MultiIndex>, std::size_t, KeyLess> lookup_;
};

/// Gaussian inner product of forms: sum'_J (u_J, v_J), exact.
ExactScalar inner_form(const PForm& u, const PForm& v);
inline ExactScalar norm_sq_form(const PForm& u) { return inner_form(u, u); }

/// Matrix of the sesquilinear form B(e_j, e_i) / pi^n over the basis (exact); B must be
/// (rational) * pi^n valued.
linalg::QMatrix form_matrix(const FormBasis& basis, const std::function<ExactScalar(const PForm&, const PForm&)>& b);

/// Matrix of a linear map between form spaces in monomial coordinates (exact).
linalg::QMatrix map_matrix(const FormBasis& from, const FormBasis& to, const std::function<PForm(const PForm&)>& op);

/// Matrix (A e_j, e_i) / pi^n for an operator A mapping span(basis) into itself.
linalg::QMatrix operator_gram_matrix(const FormBasis& basis, const std::function<PForm(const PForm&)>& op);

/// Entries Q_ij / sqrt(w_i w_j): the form matrix in the orthonormal basis.
linalg::CMatrix orthonormal_matrix(const FormBasis& basis, const linalg::QMatrix& q);

/// Basis of the kernel of a linear map restricted to span(from), as forms.
std::vector<PForm> kernel_forms(const FormBasis& from, const FormBasis& to, const std::function<PForm(const PForm&)>& op);

}  // namespace fock
