#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fock/holo_poly.hpp"

namespace fock {

/// Strictly increasing list of 0-based coordinate indices J = (j_1 < ... < j_p).
using FormIndex = std::vector<int>;

/// All increasing p-subsets of {0..n-1} in lexicographic order.
std::vector<FormIndex> increasing_indices(std::size_t n, std::size_t p);

/// dz_j ^ dz_J = sign * dz_{J'} with J' = J u {j} sorted; sign is 0 when j is in J.
struct Wedge {
  int sign = 0;
  FormIndex index;
};
Wedge wedge(int j, const FormIndex& J);

/// "1,2" style text with 1-based indices; "" for the empty index.
std::string format_index(const FormIndex& J);
FormIndex parse_index(const std::string& text, std::size_t n);

/// (p,0)-form sum'_J u_J dz_J with polynomial coefficients. Absent keys are zero
/// components; zero components are never stored.
template <class C>
class PFormT {
 public:
  using Poly = HoloPolyT<C>;
  using Components = std::map<FormIndex, Poly>;

  PFormT() = default;
  PFormT(std::size_t n, std::size_t p) : dim_(n), degree_(p) {
    if (n == 0) throw std::invalid_argument("form dimension must be at least 1");
    if (p > n) throw std::invalid_argument("form degree exceeds dimension");
  }

  /// A 0-form.
  static PFormT function(const Poly& f) {
    PFormT u(f.dim(), 0);
    u.add(FormIndex{}, f);
    return u;
  }

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const Components& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  Poly component(const FormIndex& J) const {
    auto it = comps_.find(J);
    return it == comps_.end() ? Poly(dim_) : it->second;
  }

  /// u_{jK}: the coefficient of dz_j ^ dz_K expressed through the stored
  /// increasing component, with the wedge sign applied.
  Poly signed_component(int j, const FormIndex& K) const {
    Wedge w = wedge(j, K);
    if (w.sign == 0) return Poly(dim_);
    Poly c = component(w.index);
    if (w.sign < 0) c *= ScalarTraits<C>::from_integer(-1);
    return c;
  }

  void add(const FormIndex& J, const Poly& f) {
    validate(J);
    if (f.dim() != dim_) throw std::invalid_argument("component dimension mismatch");
    if (f.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(J, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  PFormT& operator+=(const PFormT& o) {
    check_shape(o);
    for (const auto& [J, f] : o.comps_) add(J, f);
    return *this;
  }
  PFormT& operator-=(const PFormT& o) {
    check_shape(o);
    for (const auto& [J, f] : o.comps_) add(J, -f);
    return *this;
  }
  PFormT& operator*=(const C& s) {
    for (auto it = comps_.begin(); it != comps_.end();) {
      it->second *= s;
      it = it->second.is_zero() ? comps_.erase(it) : std::next(it);
    }
    return *this;
  }
  friend PFormT operator+(PFormT a, const PFormT& b) { return a += b; }
  friend PFormT operator-(PFormT a, const PFormT& b) { return a -= b; }
  friend PFormT operator*(PFormT a, const C& s) { return a *= s; }
  friend bool operator==(const PFormT& a, const PFormT& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.comps_ == b.comps_;
  }

  /// Applies fn to every component.
  template <class F>
  PFormT map_components(F&& fn) const {
    PFormT out(dim_, degree_);
    for (const auto& [J, f] : comps_) out.add(J, fn(f));
    return out;
  }

  std::optional<int> max_poly_degree() const {
    std::optional<int> d;
    for (const auto& [J, f] : comps_) {
      auto fd = f.degree();
      if (fd && (!d || *fd > *d)) d = fd;
    }
    return d;
  }

  void check_shape(const PFormT& o) const {
    if (dim_ != o.dim_ || degree_ != o.degree_) throw std::invalid_argument("form shape mismatch");
  }

 private:
  void validate(const FormIndex& J) const {
    if (J.size() != degree_) throw std::invalid_argument("form index length differs from form degree");
    for (std::size_t i = 0; i < J.size(); ++i) {
      if (J[i] < 0 || static_cast<std::size_t>(J[i]) >= dim_) throw std::invalid_argument("form index out of range");
      if (i && J[i] <= J[i - 1]) throw std::invalid_argument("form index must be strictly increasing");
    }
  }

  std::size_t dim_ = 1;
  std::size_t degree_ = 0;
  Components comps_;
};

using PForm = PFormT<QComplex>;
using PFormF = PFormT<std::complex<double>>;

inline PFormF to_float(const PForm& u) {
  PFormF out(u.dim(), u.degree());
  for (const auto& [J, f] : u.components()) out.add(J, to_float(f));
  return out;
}

}  // namespace fock
