#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <utility>

#include "fock/holo_poly.hpp"

namespace fock {

/// Monomial z^a zbar^b.
struct MixedIndex {
  MultiIndex z;
  MultiIndex zbar;
  friend bool operator==(const MixedIndex&, const MixedIndex&) = default;
};

struct MixedOrder {
  bool operator()(const MixedIndex& x, const MixedIndex& y) const {
    GradedLex lt;
    if (lt(x.z, y.z)) return true;
    if (lt(y.z, x.z)) return false;
    return lt(x.zbar, y.zbar);
  }
};

/// Polynomial in z and zbar, sparse over z^a zbar^b. Zero coefficients are never stored.
template <class C>
class MixedPolyT {
 public:
  using Terms = std::map<MixedIndex, C, MixedOrder>;
  using Traits = ScalarTraits<C>;

  MixedPolyT() = default;
  explicit MixedPolyT(std::size_t n) : dim_(n) {
    if (n == 0) throw std::invalid_argument("polynomial dimension must be at least 1");
  }

  /// Embeds a holomorphic polynomial.
  explicit MixedPolyT(const HoloPolyT<C>& f) : dim_(f.dim()) {
    for (const auto& [a, c] : f.terms()) terms_.emplace(MixedIndex{a, MultiIndex(dim_)}, c);
  }

  static MixedPolyT monomial(const MultiIndex& a, const MultiIndex& b, C coeff = Traits::from_integer(1)) {
    MixedPolyT m(a.dim());
    m.add_term(a, b, std::move(coeff));
    return m;
  }

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& a, const MultiIndex& b, const C& c) {
    if (a.dim() != dim_ || b.dim() != dim_) throw std::invalid_argument("monomial dimension mismatch");
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(MixedIndex{a, b}, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  MixedPolyT& operator+=(const MixedPolyT& o) {
    check_dim(o);
    for (const auto& [k, c] : o.terms_) add_term(k.z, k.zbar, c);
    return *this;
  }
  MixedPolyT& operator-=(const MixedPolyT& o) {
    check_dim(o);
    for (const auto& [k, c] : o.terms_) add_term(k.z, k.zbar, -c);
    return *this;
  }
  MixedPolyT& operator*=(const C& s) {
    if (Traits::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend MixedPolyT operator+(MixedPolyT a, const MixedPolyT& b) { return a += b; }
  friend MixedPolyT operator-(MixedPolyT a, const MixedPolyT& b) { return a -= b; }
  friend MixedPolyT operator*(MixedPolyT a, const C& s) { return a *= s; }

  friend MixedPolyT operator*(const MixedPolyT& a, const MixedPolyT& b) {
    a.check_dim(b);
    MixedPolyT out(a.dim_);
    for (const auto& [x, cx] : a.terms_) {
      for (const auto& [y, cy] : b.terms_) out.add_term(x.z + y.z, x.zbar + y.zbar, cx * cy);
    }
    return out;
  }

  friend bool operator==(const MixedPolyT& a, const MixedPolyT& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// Complex conjugate: swaps the roles of z and zbar and conjugates coefficients.
  MixedPolyT conj() const {
    MixedPolyT out(dim_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(MixedIndex{k.zbar, k.z}, Traits::conj(c));
    return out;
  }

  /// zbar_j * m (0-based j).
  MixedPolyT times_zbar(std::size_t j) const {
    MixedPolyT out(dim_);
    MultiIndex e = MultiIndex::unit(dim_, j);
    for (const auto& [k, c] : terms_) out.terms_.emplace(MixedIndex{k.z, k.zbar + e}, c);
    return out;
  }

  bool is_holomorphic() const {
    for (const auto& [k, c] : terms_) {
      if (k.zbar.degree() != 0) return false;
    }
    return true;
  }

  void check_dim(const MixedPolyT& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("polynomial dimension mismatch");
  }

 private:
  std::size_t dim_ = 1;
  Terms terms_;
};

using MixedPoly = MixedPolyT<QComplex>;
using MixedPolyF = MixedPolyT<std::complex<double>>;

inline MixedPolyF to_float(const MixedPoly& m) {
  MixedPolyF out(m.dim());
  for (const auto& [k, c] : m.terms()) out.add_term(k.z, k.zbar, c.to_complex());
  return out;
}

}  // namespace fock
