#include "fock/linalg/exact.hpp"

#include <stdexcept>
#include <utility>

namespace fock::linalg {

bool QMatrix::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i).conj())) return false;
    }
  }
  return true;
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    QComplex inv = QComplex(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      QComplex f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<QVector> nullspace(const QMatrix& m) {
  QMatrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = QComplex(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (m.rows() != m.cols() || b.size() != m.rows()) throw std::invalid_argument("solve needs a square system");
  const std::size_t n = m.rows();
  QMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  QVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

bool is_positive_semidefinite(const QMatrix& h) {
  if (!h.is_hermitian()) throw std::invalid_argument("PSD test needs a hermitian matrix");
  QMatrix a = h;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const QComplex& d = a(k, k);
    if (!d.is_real()) return false;
    int s = sgn(d.re);
    if (s < 0) return false;
    if (s == 0) {
      for (std::size_t i = k + 1; i < n; ++i) {
        if (!a(i, k).is_zero()) return false;
      }
      continue;
    }
    // Schur complement A <- A - a_k a_k^* / d on the trailing block.
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      QComplex f = a(i, k) / d;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
      }
    }
  }
  return true;
}

QMatrix shifted(const QMatrix& h, const QMatrix& g, const Rational& c) {
  if (h.rows() != g.rows() || h.cols() != g.cols()) throw std::invalid_argument("shape mismatch");
  QMatrix out = h;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < h.cols(); ++j) {
      if (!g(i, j).is_zero()) out(i, j) -= g(i, j) * QComplex(c);
    }
  }
  return out;
}

}  // namespace fock::linalg
