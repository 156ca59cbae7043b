#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace fock::simd {

// Dense double-precision inner loops. Every ISA variant must agree with the
// scalar reference up to reassociation of floating-point sums.
struct KernelTable {
  std::string_view name;
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // (x, y) <- (c x - s y, s x + c y)
  void (*rotate)(double* x, double* y, double c, double s, std::size_t n);
  // y = A x, A row-major rows x cols
  void (*gemv)(const double* a, const double* x, double* y, std::size_t rows, std::size_t cols);
};

const KernelTable& scalar_kernels();
/// nullptr when the ISA is not compiled in or not supported by this CPU.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Best table for this CPU. FOCK_SIMD=scalar in the environment forces the reference path.
const KernelTable& active_kernels();

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active_kernels().dot(a.data(), b.data(), a.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active_kernels().axpy(alpha, x.data(), y.data(), x.size());
}
inline void rotate(std::span<double> x, std::span<double> y, double c, double s) {
  active_kernels().rotate(x.data(), y.data(), c, s, x.size());
}

}  // namespace fock::simd
