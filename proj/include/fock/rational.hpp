#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fock {

using Rational = mpq_class;

/// Parses "p/q" or "p" (optionally signed). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Gaussian rational a + b i with exact parts.
struct QComplex {
  Rational re{0};
  Rational im{0};

  QComplex() = default;
  QComplex(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  QComplex(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  QComplex(int r) : re(r) {}   // NOLINT(google-explicit-constructor)

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  QComplex conj() const { return {re, -im}; }
  Rational norm_sq() const { return re * re + im * im; }

  QComplex& operator+=(const QComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  QComplex& operator-=(const QComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  QComplex& operator*=(const QComplex& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  QComplex& operator/=(const QComplex& o);

  friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
  friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
  friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
  friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
  friend QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const QComplex& a, const QComplex& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

/// "re" or "re+im i" / "re-im i" with rationals in p/q form.
std::string to_string(const QComplex& c);

/// Scalar traits shared by the exact and floating coefficient rings.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<QComplex> {
  static bool is_zero(const QComplex& c) { return c.is_zero(); }
  static QComplex conj(const QComplex& c) { return c.conj(); }
  static std::complex<double> to_complex(const QComplex& c) { return c.to_complex(); }
  static QComplex from_integer(long v) { return QComplex(v); }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static bool is_zero(const std::complex<double>& c) { return c == std::complex<double>{}; }
  static std::complex<double> conj(const std::complex<double>& c) { return std::conj(c); }
  static std::complex<double> to_complex(const std::complex<double>& c) { return c; }
  static std::complex<double> from_integer(long v) { return {static_cast<double>(v), 0.0}; }
};

}  // namespace fock
