#include "fock/form_basis.hpp"

#include <cmath>
#include <stdexcept>

namespace fock {

FormBasis::FormBasis(std::size_t n, std::size_t p, int min_degree, int max_degree)
    : n_(n), p_(p) {
  if (p > n) throw std::invalid_argument("form degree exceeds dimension");
  auto indices = increasing_indices(n, p);
  for (int m = std::max(min_degree, 0); m <= max_degree; ++m) {
    auto block = enumerate_degree(n, m);
    for (const auto& J : indices) {
      for (const auto& alpha : block) {
        lookup_.emplace(std::make_pair(J, alpha), elements_.size());
        elements_.push_back({J, alpha});
      }
    }
  }
}

PForm FormBasis::form(std::size_t i) const {
  PForm u(n_, p_);
  u.add(elements_[i].J, HoloPoly::monomial(elements_[i].alpha));
  return u;
}

linalg::QVector FormBasis::coordinates(const PForm& u) const {
  if (u.dim() != n_ || u.degree() != p_) throw std::invalid_argument("form shape does not match basis");
  linalg::QVector v(elements_.size());
  for (const auto& [J, f] : u.components()) {
    for (const auto& [alpha, c] : f.terms()) {
      auto it = lookup_.find({J, alpha});
      if (it == lookup_.end()) throw std::out_of_range("form term outside the truncated basis");
      v[it->second] = c;
    }
  }
  return v;
}

PForm FormBasis::combine(const linalg::QVector& coords) const {
  if (coords.size() != elements_.size()) throw std::invalid_argument("coordinate length mismatch");
  PForm u(n_, p_);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) u.add(elements_[i].J, HoloPoly::monomial(elements_[i].alpha, coords[i]));
  }
  return u;
}

ExactScalar inner_form(const PForm& u, const PForm& v) {
  u.check_shape(v);
  ExactScalar sum({}, static_cast<int>(u.dim()));
  for (const auto& [J, f] : u.components()) {
    auto it = v.components().find(J);
    if (it != v.components().end()) sum += inner_gaussian(f, it->second);
  }
  return sum;
}

linalg::QMatrix form_matrix(const FormBasis& basis, const std::function<ExactScalar(const PForm&, const PForm&)>& b) {
  const std::size_t m = basis.size();
  const int pi_power = static_cast<int>(basis.dim());
  std::vector<PForm> forms;
  forms.reserve(m);
  for (std::size_t i = 0; i < m; ++i) forms.push_back(basis.form(i));
  linalg::QMatrix q(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      ExactScalar s = b(forms[j], forms[i]);
      if (s.is_zero()) continue;
      if (s.pi_power() != pi_power) throw std::domain_error("form values must carry pi^n");
      q(i, j) = s.value();
    }
  }
  return q;
}

linalg::QMatrix map_matrix(const FormBasis& from, const FormBasis& to, const std::function<PForm(const PForm&)>& op) {
  linalg::QMatrix m(to.size(), from.size());
  for (std::size_t j = 0; j < from.size(); ++j) {
    auto col = to.coordinates(op(from.form(j)));
    for (std::size_t i = 0; i < to.size(); ++i) m(i, j) = col[i];
  }
  return m;
}

linalg::QMatrix operator_gram_matrix(const FormBasis& basis, const std::function<PForm(const PForm&)>& op) {
  linalg::QMatrix q = map_matrix(basis, basis, op);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    QComplex w(Rational(basis.weight(i)));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (!q(i, j).is_zero()) q(i, j) *= w;
    }
  }
  return q;
}

linalg::CMatrix orthonormal_matrix(const FormBasis& basis, const linalg::QMatrix& q) {
  const std::size_t m = basis.size();
  std::vector<double> scale(m);
  for (std::size_t i = 0; i < m; ++i) scale[i] = 1.0 / std::sqrt(basis.weight(i).get_d());
  linalg::CMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!q(i, j).is_zero()) out(i, j) = q(i, j).to_complex() * scale[i] * scale[j];
    }
  }
  return out;
}

std::vector<PForm> kernel_forms(const FormBasis& from, const FormBasis& to, const std::function<PForm(const PForm&)>& op) {
  auto basis = linalg::nullspace(map_matrix(from, to, op));
  std::vector<PForm> out;
  out.reserve(basis.size());
  for (const auto& v : basis) out.push_back(from.combine(v));
  return out;
}

}  // namespace fock
