#include "fock/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <climits>

namespace fock {

WeylOperator::WeylOperator(std::size_t n) : dim_(n) {
  if (n == 0) throw std::invalid_argument("operator dimension must be at least 1");
}

WeylOperator WeylOperator::scalar(std::size_t n, const QComplex& c) {
  WeylOperator op(n);
  op.add_term(MultiIndex(n), MultiIndex(n), c);
  return op;
}

WeylOperator WeylOperator::mul(std::size_t n, std::size_t j, int power) {
  WeylOperator op(n);
  op.add_term(MultiIndex::unit(n, j, power), MultiIndex(n), QComplex(1));
  return op;
}

WeylOperator WeylOperator::diff(std::size_t n, std::size_t j, int power) {
  WeylOperator op(n);
  op.add_term(MultiIndex(n), MultiIndex::unit(n, j, power), QComplex(1));
  return op;
}

WeylOperator WeylOperator::term(const MultiIndex& z, const MultiIndex& d, const QComplex& c) {
  WeylOperator op(z.dim());
  op.add_term(z, d, c);
  return op;
}

WeylOperator WeylOperator::multiplication(const HoloPoly& f) {
  WeylOperator op(f.dim());
  for (const auto& [a, c] : f.terms()) op.add_term(a, MultiIndex(f.dim()), c);
  return op;
}

void WeylOperator::add_term(const MultiIndex& z, const MultiIndex& d, const QComplex& c) {
  if (z.dim() != dim_ || d.dim() != dim_) throw std::invalid_argument("operator term dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(WeylIndex{z, d}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool WeylOperator::is_constant_coefficient() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.z.degree() == 0; });
}

int WeylOperator::max_z_degree() const {
  int m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.z.degree());
  return m;
}

int WeylOperator::min_d_degree() const {
  if (terms_.empty()) return 0;
  int m = INT_MAX;
  for (const auto& [k, c] : terms_) m = std::min(m, k.d.degree());
  return m;
}

std::optional<int> WeylOperator::degree_shift() const {
  std::optional<int> shift;
  for (const auto& [k, c] : terms_) {
    int s = k.z.degree() - k.d.degree();
    if (shift && *shift != s) return std::nullopt;
    shift = s;
  }
  return shift;
}

void WeylOperator::check_dim(const WeylOperator& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("operator dimension mismatch");
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  check_dim(o);
  for (const auto& [k, c] : o.terms_) add_term(k.z, k.d, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  check_dim(o);
  for (const auto& [k, c] : o.terms_) add_term(k.z, k.d, -c);
  return *this;
}

WeylOperator& WeylOperator::operator*=(const QComplex& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

HoloPoly apply(const WeylOperator& op, const HoloPoly& f) {
  if (op.dim() != f.dim()) throw std::invalid_argument("operator and polynomial dimensions differ");
  HoloPoly out(f.dim());
  for (const auto& [k, c] : op.terms()) {
    for (const auto& [g, fc] : f.terms()) {
      if (!g.dominates(k.d)) continue;
      MultiIndex rest = g - k.d;
      mpz_class ratio = g.factorial() / rest.factorial();
      out.add_term(rest + k.z, c * fc * QComplex(Rational(ratio)));
    }
  }
  return out;
}

HoloPolyF apply(const WeylOperator& op, const HoloPolyF& f) {
  if (op.dim() != f.dim()) throw std::invalid_argument("operator and polynomial dimensions differ");
  HoloPolyF out(f.dim());
  for (const auto& [k, c] : op.terms()) {
    const std::complex<double> cf = c.to_complex();
    for (const auto& [g, fc] : f.terms()) {
      if (!g.dominates(k.d)) continue;
      MultiIndex rest = g - k.d;
      mpz_class ratio = g.factorial() / rest.factorial();
      out.add_term(rest + k.z, cf * fc * ratio.get_d());
    }
  }
  return out;
}

namespace {

// d^b z^c = sum_{k <= min(b, c)} prod_j C(b_j, k_j) c_j!/(c_j - k_j)! z^{c-k} d^{b-k},
// the closed form of rewriting d_j z_j -> z_j d_j + 1 until no d stands left of a z.
void reorder_into(WeylOperator& out, const MultiIndex& a, const MultiIndex& b, const MultiIndex& c,
                  const MultiIndex& d, const QComplex& coeff) {
  const std::size_t n = a.dim();
  MultiIndex k(n);
  auto rec = [&](auto&& self, std::size_t j, mpz_class weight) -> void {
    if (j == n) {
      out.add_term(a + (c - k), (b - k) + d, coeff * QComplex(Rational(weight)));
      return;
    }
    int top = std::min(b[j], c[j]);
    for (int kj = 0; kj <= top; ++kj) {
      k[j] = kj;
      self(self, j + 1, weight * binomial(b[j], kj) * falling_factorial(c[j], kj));
    }
    k[j] = 0;
  };
  rec(rec, 0, mpz_class(1));
}

}  // namespace

WeylOperator compose(const WeylOperator& a, const WeylOperator& b) {
  a.check_dim(b);
  WeylOperator out(a.dim());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) reorder_into(out, ka.z, ka.d, kb.z, kb.d, ca * cb);
  }
  return out;
}

WeylOperator commutator(const WeylOperator& a, const WeylOperator& b) { return compose(a, b) - compose(b, a); }

WeylOperator formal_adjoint_constant(const WeylOperator& p) {
  if (!p.is_constant_coefficient()) {
    throw std::invalid_argument("adjoint is only defined for constant-coefficient operators");
  }
  WeylOperator out(p.dim());
  for (const auto& [k, c] : p.terms()) out.add_term(k.d, k.z, c.conj());
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

  WeylOperator parse() {
    if (n_ == 0) throw std::invalid_argument("operator dimension must be at least 1");
    WeylOperator out(n_);
    skip_ws();
    if (at_end()) throw WeylParseError("empty operator expression", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    while (true) {
      WeylOperator t = term();
      if (negative) t *= QComplex(-1);
      out += t;
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw WeylParseError(std::string("unexpected character '") + c + "'", pos_);
      negative = get() == '-';
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  WeylOperator term() {
    WeylOperator out = item();
    while (true) {
      skip_ws();
      if (peek() != '*') return out;
      ++pos_;
      out = compose(out, item());
    }
  }

  WeylOperator item() {
    skip_ws();
    char c = peek();
    if (c == 'z' || c == 'd') return factor();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'i') {
      return WeylOperator::scalar(n_, coeff());
    }
    if (at_end()) throw WeylParseError("unexpected end of expression", pos_);
    throw WeylParseError(std::string("unknown symbol '") + c + "'", pos_);
  }

  WeylOperator factor() {
    std::size_t start = pos_;
    char kind = get();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw WeylParseError(std::string("expected variable index after '") + kind + "'", pos_);
    }
    long idx = integer();
    if (idx < 1 || static_cast<std::size_t>(idx) > n_) {
      throw WeylParseError("unknown symbol '" + std::string(1, kind) + std::to_string(idx) + "'", start);
    }
    int power = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw WeylParseError("expected exponent", pos_);
      long p = integer();
      if (p < 1 || p > 1000) throw WeylParseError("exponent must be a positive integer", pos_);
      power = static_cast<int>(p);
    }
    auto j = static_cast<std::size_t>(idx - 1);
    return kind == 'z' ? WeylOperator::mul(n_, j, power) : WeylOperator::diff(n_, j, power);
  }

  long integer() {
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > 1'000'000'000L) throw WeylParseError("integer too large", pos_);
    }
    return v;
  }

  // number ['i'] | 'i'
  QComplex real_or_imag() {
    skip_ws();
    Rational q = 1;
    bool has_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw WeylParseError("expected denominator", pos_);
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      try {
        q = parse_rational(s_.substr(start, pos_ - start));
      } catch (const std::invalid_argument& e) {
        throw WeylParseError(e.what(), start);
      }
      has_number = true;
      skip_ws();
    }
    if (peek() == 'i') {
      ++pos_;
      return QComplex(Rational(0), q);
    }
    if (!has_number) throw WeylParseError("expected coefficient", pos_);
    return QComplex(q);
  }

  QComplex coeff() {
    skip_ws();
    if (peek() != '(') return real_or_imag();
    ++pos_;
    QComplex sum;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    while (true) {
      QComplex part = real_or_imag();
      sum += negative ? -part : part;
      skip_ws();
      if (peek() == ')') {
        ++pos_;
        return sum;
      }
      if (peek() != '+' && peek() != '-') throw WeylParseError("expected ')' in coefficient", pos_);
      negative = get() == '-';
    }
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::string factors_text(const WeylIndex& k) {
  std::string out;
  auto emit = [&](char kind, const MultiIndex& m) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (m[j] == 0) continue;
      if (!out.empty()) out += "*";
      out += kind + std::to_string(j + 1);
      if (m[j] > 1) out += "^" + std::to_string(m[j]);
    }
  };
  emit('z', k.z);
  emit('d', k.d);
  return out;
}

}  // namespace

WeylOperator parse_weyl(std::string_view text, std::size_t n) { return Parser(text, n).parse(); }

std::string to_string(const WeylOperator& op) {
  if (op.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : op.terms()) {
    std::string factors = factors_text(k);
    std::string coeff;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re) < 0;
      Rational mag = abs(c.re);
      if (mag != 1 || factors.empty()) coeff = to_string(mag);
    } else {
      coeff = "(" + to_string(c) + ")";
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coeff;
    if (!coeff.empty() && !factors.empty()) out += "*";
    out += factors;
  }
  return out;
}

}  // namespace fock
