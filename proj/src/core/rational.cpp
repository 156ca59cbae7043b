#include "fock/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fock {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

QComplex& QComplex::operator/=(const QComplex& o) {
  Rational d = o.norm_sq();
  if (sgn(d) == 0) throw std::domain_error("division by zero Gaussian rational");
  Rational r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

std::string to_string(const QComplex& c) {
  if (c.is_real()) return to_string(c.re);
  std::string out;
  if (sgn(c.re) != 0) out = to_string(c.re);
  if (sgn(c.im) < 0) {
    out += "-" + to_string(Rational(-c.im)) + " i";
  } else {
    out += (out.empty() ? "" : "+") + to_string(c.im) + " i";
  }
  return out;
}

}  // namespace fock
