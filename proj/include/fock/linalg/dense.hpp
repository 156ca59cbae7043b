#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fock::linalg {

/// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double* row(std::size_t r) { return data_.data() + r * cols_; }
  const double* row(std::size_t r) const { return data_.data() + r * cols_; }
  const double* data() const { return data_.data(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::complex<double>& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::complex<double>& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::complex<double>> data_;
};

/// Real symmetric [[Re H, -Im H], [Im H, Re H]]; each eigenvalue of H appears twice.
Matrix real_embedding(const CMatrix& h);

/// Eigenvalues of a real symmetric matrix, ascending (cyclic Jacobi).
std::vector<double> symmetric_eigenvalues(Matrix a);

/// Eigenvalues of a complex hermitian matrix, ascending.
std::vector<double> hermitian_eigenvalues(const CMatrix& h);

struct CgResult {
  std::vector<std::complex<double>> x;
  int iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
};

/// Conjugate gradients on a hermitian positive-definite system H x = b.
CgResult conjugate_gradient(const CMatrix& h, const std::vector<std::complex<double>>& b, double tol = 1e-14,
                            int max_iter = 0);

}  // namespace fock::linalg
