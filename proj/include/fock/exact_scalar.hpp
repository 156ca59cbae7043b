#pragma once

#include <complex>
#include <string>

#include "fock/rational.hpp"

namespace fock {

/// A Gaussian rational times an integer power of pi, kept symbolic.
///
/// Gaussian-weight inner products of polynomials in n variables are always
/// (rational) * pi^n, so all identities on that path are exact comparisons.
/// Zero is pi-power agnostic: adding zero of any power is allowed.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(QComplex value, int pi_power) : value_(std::move(value)), pi_power_(pi_power) {}

  const QComplex& value() const { return value_; }
  int pi_power() const { return pi_power_; }
  bool is_zero() const { return value_.is_zero(); }
  bool is_real() const { return value_.is_real(); }

  /// Throws std::domain_error when both operands are nonzero with different pi powers.
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o) {
    value_ *= o.value_;
    pi_power_ += o.pi_power_;
    return *this;
  }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator-(const ExactScalar& a) { return {-a.value_, a.pi_power_}; }

  /// Exact equality; zeros compare equal regardless of pi power.
  friend bool operator==(const ExactScalar& a, const ExactScalar& b);

  ExactScalar conj() const { return {value_.conj(), pi_power_}; }
  ExactScalar scaled(const Rational& r) const { return {value_ * QComplex(r), pi_power_}; }

  /// Sign of the real part; requires a real value (pi > 0 so the power is irrelevant).
  int real_sign() const;

  std::complex<double> to_complex() const;
  double to_double() const { return to_complex().real(); }

  /// "k/m*pi^n" form; "0" for zero.
  std::string to_string() const;

 private:
  QComplex value_;
  int pi_power_ = 0;
};

/// Exact a <= b for real scalars with equal pi power (zero allowed on either side).
bool exact_less_equal(const ExactScalar& a, const ExactScalar& b);

}  // namespace fock
