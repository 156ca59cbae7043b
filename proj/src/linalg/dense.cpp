#include "fock/linalg/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fock/simd/kernels.hpp"

namespace fock::linalg {

Matrix real_embedding(const CMatrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("embedding needs a square matrix");
  const std::size_t n = h.rows();
  Matrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = h(i, j).real();
      out(i, j + n) = -h(i, j).imag();
      out(i + n, j) = h(i, j).imag();
      out(i + n, j + n) = h(i, j).real();
    }
  }
  return out;
}

std::vector<double> symmetric_eigenvalues(Matrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigenvalues need a square matrix");
  const std::size_t n = a.rows();
  const auto& k = simd::active_kernels();

  auto off_norm_sq = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    }
    return s;
  };
  double total = k.dot(a.data(), a.data(), n * n);
  const double eps = 1e-28 * std::max(total, 1e-300);

  for (int sweep = 0; sweep < 100 && off_norm_sq() > eps; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (apq == 0.0) continue;
        double app = a(p, p);
        double aqq = a(q, q);
        double tau = (aqq - app) / (2.0 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        // Rows p, q of J^T A; the column update follows by symmetry.
        k.rotate(a.row(p), a.row(q), c, s, n);
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          a(i, p) = a(p, i);
          a(i, q) = a(q, i);
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
  auto doubled = symmetric_eigenvalues(real_embedding(h));
  std::vector<double> ev;
  ev.reserve(h.rows());
  for (std::size_t i = 0; i < doubled.size(); i += 2) ev.push_back(doubled[i]);
  return ev;
}

CgResult conjugate_gradient(const CMatrix& h, const std::vector<std::complex<double>>& b, double tol,
                            int max_iter) {
  if (h.rows() != h.cols() || b.size() != h.rows()) throw std::invalid_argument("CG needs a square system");
  const std::size_t n = h.rows();
  const std::size_t m = 2 * n;
  Matrix a = real_embedding(h);
  const auto& k = simd::active_kernels();

  std::vector<double> rhs(m);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = b[i].real();
    rhs[i + n] = b[i].imag();
  }
  std::vector<double> x(m, 0.0);
  std::vector<double> r = rhs;
  std::vector<double> p = r;
  std::vector<double> ap(m);
  double bnorm = std::sqrt(k.dot(rhs.data(), rhs.data(), m));
  double rr = k.dot(r.data(), r.data(), m);
  if (max_iter <= 0) max_iter = static_cast<int>(4 * m + 10);

  CgResult res;
  if (bnorm == 0.0) {
    res.x.assign(n, 0.0);
    res.converged = true;
    return res;
  }
  int it = 0;
  for (; it < max_iter && std::sqrt(rr) > tol * bnorm; ++it) {
    k.gemv(a.data(), p.data(), ap.data(), m, m);
    double pap = k.dot(p.data(), ap.data(), m);
    if (pap <= 0.0) break;
    double alpha = rr / pap;
    k.axpy(alpha, p.data(), x.data(), m);
    k.axpy(-alpha, ap.data(), r.data(), m);
    double rr_next = k.dot(r.data(), r.data(), m);
    double beta = rr_next / rr;
    rr = rr_next;
    for (std::size_t i = 0; i < m; ++i) p[i] = r[i] + beta * p[i];
  }
  // Report the true residual rather than the recurrence.
  k.gemv(a.data(), x.data(), ap.data(), m, m);
  for (std::size_t i = 0; i < m; ++i) ap[i] -= rhs[i];
  res.relative_residual = std::sqrt(k.dot(ap.data(), ap.data(), m)) / bnorm;
  res.iterations = it;
  res.converged = res.relative_residual <= std::max(tol, 1e-12) * 10;
  res.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) res.x[i] = {x[i], x[i + n]};
  return res;
}

}  // namespace fock::linalg
