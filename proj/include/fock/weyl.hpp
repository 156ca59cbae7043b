#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fock/holo_poly.hpp"
#include "fock/multi_index.hpp"
#include "fock/rational.hpp"

namespace fock {

/// Normal-ordered monomial z^a d^b (all multiplications left of all derivatives).
struct WeylIndex {
  MultiIndex z;
  MultiIndex d;
  friend bool operator==(const WeylIndex&, const WeylIndex&) = default;
};

struct WeylOrder {
  bool operator()(const WeylIndex& x, const WeylIndex& y) const {
    GradedLex lt;
    if (lt(x.d, y.d)) return true;
    if (lt(y.d, x.d)) return false;
    return lt(x.z, y.z);
  }
};

/// Element of the Weyl algebra in n variables, stored in normal order so that
/// equal operators have equal term maps.
class WeylOperator {
 public:
  using Terms = std::map<WeylIndex, QComplex, WeylOrder>;

  WeylOperator() = default;
  explicit WeylOperator(std::size_t n);

  static WeylOperator identity(std::size_t n) { return scalar(n, QComplex(1)); }
  static WeylOperator scalar(std::size_t n, const QComplex& c);
  /// Multiplication by z_j (0-based).
  static WeylOperator mul(std::size_t n, std::size_t j, int power = 1);
  /// d/dz_j (0-based).
  static WeylOperator diff(std::size_t n, std::size_t j, int power = 1);
  static WeylOperator term(const MultiIndex& z, const MultiIndex& d, const QComplex& c);
  /// Multiplication operator by a holomorphic polynomial.
  static WeylOperator multiplication(const HoloPoly& f);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& z, const MultiIndex& d, const QComplex& c);

  /// No z-part in any term.
  bool is_constant_coefficient() const;
  /// Largest |a| over terms (0 for the zero operator).
  int max_z_degree() const;
  /// Smallest |b| over terms (0 for the zero operator).
  int min_d_degree() const;
  /// When every term has the same |a| - |b|, that shift; none otherwise or for zero.
  std::optional<int> degree_shift() const;

  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  WeylOperator& operator*=(const QComplex& s);
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(WeylOperator a, const QComplex& s) { return a *= s; }
  friend bool operator==(const WeylOperator& a, const WeylOperator& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  void check_dim(const WeylOperator& o) const;

 private:
  std::size_t dim_ = 1;
  Terms terms_;
};

/// Exact action z^a d^b z^g = g!/(g-b)! z^{g-b+a} (zero unless g >= b).
HoloPoly apply(const WeylOperator& op, const HoloPoly& f);
HoloPolyF apply(const WeylOperator& op, const HoloPolyF& f);

/// Normal-ordered product A B.
WeylOperator compose(const WeylOperator& a, const WeylOperator& b);

/// [A, B] = AB - BA.
WeylOperator commutator(const WeylOperator& a, const WeylOperator& b);

/// Gaussian-weight adjoint of a constant-coefficient operator p(d): the
/// multiplication operator by p with conjugated coefficients.
/// Throws std::invalid_argument when p has a z-part.
WeylOperator formal_adjoint_constant(const WeylOperator& p);

class WeylParseError : public std::runtime_error {
 public:
  WeylParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the operator grammar, e.g. "z1*d1 + 1", "(1/2+3/4 i)*d2^2", "i*d1".
/// Variables are z1..zn and d1..dn; the result is normal ordered.
WeylOperator parse_weyl(std::string_view text, std::size_t n);

/// Canonical text that parse_weyl reads back to the same operator.
std::string to_string(const WeylOperator& op);

}  // namespace fock
