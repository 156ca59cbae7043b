#include "fock/exact_scalar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fock {

namespace {

int merged_power(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_zero()) return b.pi_power();
  if (b.is_zero()) return a.pi_power();
  if (a.pi_power() != b.pi_power()) {
    throw std::domain_error("adding exact scalars with different powers of pi");
  }
  return a.pi_power();
}

}  // namespace

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  pi_power_ = merged_power(*this, o);
  value_ += o.value_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  pi_power_ = merged_power(*this, o);
  value_ -= o.value_;
  return *this;
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.pi_power_ == b.pi_power_ && a.value_ == b.value_;
}

int ExactScalar::real_sign() const {
  if (!is_real()) throw std::domain_error("sign of a non-real exact scalar");
  return sgn(value_.re);
}

std::complex<double> ExactScalar::to_complex() const {
  double scale = std::pow(std::numbers::pi, pi_power_);
  return value_.to_complex() * scale;
}

std::string ExactScalar::to_string() const {
  if (is_zero()) return "0";
  std::string v = fock::to_string(value_);
  if (pi_power_ == 0) return v;
  if (!value_.is_real()) v = "(" + v + ")";
  return v + "*pi^" + std::to_string(pi_power_);
}

bool exact_less_equal(const ExactScalar& a, const ExactScalar& b) {
  return (b - a).real_sign() >= 0;
}

}  // namespace fock
