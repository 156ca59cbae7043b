#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fock/rational.hpp"

namespace fock::linalg {

using QVector = std::vector<QComplex>;

/// Dense row-major matrix over the Gaussian rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QComplex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const QComplex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_hermitian() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QComplex> data_;
};

/// Basis of {x : M x = 0} from the reduced row echelon form, one vector per free column.
std::vector<QVector> nullspace(const QMatrix& m);

/// Unique solution of M x = b for square nonsingular M; none when M is singular.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

/// Exact positive-semidefiniteness of a hermitian matrix (symmetric elimination;
/// a zero pivot requires its whole remaining column to vanish).
bool is_positive_semidefinite(const QMatrix& h);

/// H - c G for hermitian H and G of equal shape.
QMatrix shifted(const QMatrix& h, const QMatrix& g, const Rational& c);

}  // namespace fock::linalg
