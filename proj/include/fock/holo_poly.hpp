#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "fock/multi_index.hpp"
#include "fock/rational.hpp"

namespace fock {

/// Holomorphic polynomial in n variables, sparse over the monomial basis.
/// Zero coefficients are never stored.
template <class C>
class HoloPolyT {
 public:
  using Coeff = C;
  using Terms = std::map<MultiIndex, C, GradedLex>;
  using Traits = ScalarTraits<C>;

  HoloPolyT() = default;
  explicit HoloPolyT(std::size_t n) : dim_(n) {
    if (n == 0) throw std::invalid_argument("polynomial dimension must be at least 1");
  }

  static HoloPolyT monomial(const MultiIndex& alpha, C coeff = Traits::from_integer(1)) {
    HoloPolyT f(alpha.dim());
    f.add_term(alpha, std::move(coeff));
    return f;
  }
  static HoloPolyT constant(std::size_t n, C coeff) { return monomial(MultiIndex(n), std::move(coeff)); }
  /// The coordinate function z_j (0-based j).
  static HoloPolyT variable(std::size_t n, std::size_t j) { return monomial(MultiIndex::unit(n, j)); }

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Highest total degree, none for the zero polynomial.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
  }
  std::optional<int> min_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();
  }

  C coeff(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? C{} : it->second;
  }

  void add_term(const MultiIndex& alpha, const C& c) {
    if (alpha.dim() != dim_) throw std::invalid_argument("monomial dimension mismatch");
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  HoloPolyT& operator+=(const HoloPolyT& o) {
    check_dim(o);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }
  HoloPolyT& operator-=(const HoloPolyT& o) {
    check_dim(o);
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
  }
  HoloPolyT& operator*=(const C& s) {
    if (Traits::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      it = Traits::is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend HoloPolyT operator+(HoloPolyT a, const HoloPolyT& b) { return a += b; }
  friend HoloPolyT operator-(HoloPolyT a, const HoloPolyT& b) { return a -= b; }
  friend HoloPolyT operator-(HoloPolyT a) { return a *= Traits::from_integer(-1); }
  friend HoloPolyT operator*(HoloPolyT a, const C& s) { return a *= s; }
  friend HoloPolyT operator*(const C& s, HoloPolyT a) { return a *= s; }

  friend HoloPolyT operator*(const HoloPolyT& a, const HoloPolyT& b) {
    a.check_dim(b);
    HoloPolyT out(a.dim_);
    for (const auto& [x, cx] : a.terms_) {
      for (const auto& [y, cy] : b.terms_) out.add_term(x + y, cx * cy);
    }
    return out;
  }

  friend bool operator==(const HoloPolyT& a, const HoloPolyT& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// z^shift * f
  HoloPolyT shifted(const MultiIndex& shift) const {
    HoloPolyT out(dim_);
    for (const auto& [a, c] : terms_) out.terms_.emplace(a + shift, c);
    return out;
  }

  /// Partial derivative with respect to z_j (0-based).
  HoloPolyT derivative(std::size_t j) const {
    HoloPolyT out(dim_);
    for (const auto& [a, c] : terms_) {
      if (a[j] == 0) continue;
      MultiIndex b = a;
      b[j] -= 1;
      out.add_term(b, c * Traits::from_integer(a[j]));
    }
    return out;
  }

  /// Degree-m homogeneous component.
  HoloPolyT homogeneous_part(int m) const {
    HoloPolyT out(dim_);
    for (const auto& [a, c] : terms_) {
      if (a.degree() == m) out.terms_.emplace(a, c);
    }
    return out;
  }

  /// Terms of degree <= m.
  HoloPolyT truncated(int m) const {
    HoloPolyT out(dim_);
    for (const auto& [a, c] : terms_) {
      if (a.degree() <= m) out.terms_.emplace(a, c);
    }
    return out;
  }

  template <class F>
  HoloPolyT map_coefficients(F&& fn) const {
    HoloPolyT out(dim_);
    for (const auto& [a, c] : terms_) out.add_term(a, fn(a, c));
    return out;
  }

  void check_dim(const HoloPolyT& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("polynomial dimension mismatch");
  }

 private:
  std::size_t dim_ = 1;
  Terms terms_;
};

using HoloPoly = HoloPolyT<QComplex>;
using HoloPolyF = HoloPolyT<std::complex<double>>;

inline HoloPolyF to_float(const HoloPoly& f) {
  HoloPolyF out(f.dim());
  for (const auto& [a, c] : f.terms()) out.add_term(a, c.to_complex());
  return out;
}

}  // namespace fock
