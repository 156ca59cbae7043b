#include <array>
#include <cmath>
#include <stdexcept>

#include "fock/weighted.hpp"

namespace fock {

double radial_moment_closed_form(double c, int s, int k) {
  if (k < 0) throw std::invalid_argument("moment index must be non-negative");
  const double a = static_cast<double>(k + 1) / s;
  double g = std::tgamma(a);
  if (std::isfinite(g)) return g / (2.0 * s * std::pow(c, a));
  return std::exp(std::lgamma(a) - a * std::log(c)) / (2.0 * s);
}

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gk15(const F& f, double a, double b, double& result, double& error) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[i] * sum;
    if (i % 2 == 1) gauss += kWg[i / 2] * sum;
  }
  result = kronrod * half;
  error = std::abs((kronrod - gauss) * half);
}

template <class F>
double adaptive(const F& f, double a, double b, double abs_tol, int depth) {
  double r = 0;
  double e = 0;
  gk15(f, a, b, r, e);
  if (e <= abs_tol || depth >= 50) return r;
  const double m = 0.5 * (a + b);
  return adaptive(f, a, m, 0.5 * abs_tol, depth + 1) + adaptive(f, m, b, 0.5 * abs_tol, depth + 1);
}

}  // namespace

double radial_moment_quadrature(double c, int s, int k, double rel_tol) {
  if (k < 0) throw std::invalid_argument("moment index must be non-negative");
  // In t = c r^{2s} the integrand is a Gamma(a) density shape; cut where it is ~e^{-60} below the mode.
  const double a = static_cast<double>(k + 1) / s;
  const double t_max = a + 12.0 * std::sqrt(a) + 80.0;
  const double r_max = std::pow(t_max / c, 1.0 / (2.0 * s));
  auto f = [=](double r) { return std::pow(r, 2 * k + 1) * std::exp(-c * std::pow(r, 2 * s)); };
  // Panels give a scale estimate for the absolute tolerance.
  constexpr int panels = 16;
  double rough = 0;
  for (int i = 0; i < panels; ++i) {
    double r = 0;
    double e = 0;
    gk15(f, r_max * i / panels, r_max * (i + 1) / panels, r, e);
    rough += r;
  }
  const double tol = rel_tol * std::abs(rough) / panels;
  double total = 0;
  for (int i = 0; i < panels; ++i) total += adaptive(f, r_max * i / panels, r_max * (i + 1) / panels, tol, 0);
  return total;
}

MomentTable::MomentTable(RadialPolyWeight weight, MomentMethod method)
    : weight_(std::move(weight)), method_(method), cache_(weight_.dim()) {}

double MomentTable::moment(std::size_t j, int k) const {
  if (j >= weight_.dim()) throw std::out_of_range("moment variable out of range");
  if (k < 0) throw std::invalid_argument("moment index must be non-negative");
  std::lock_guard<std::mutex> lock(mu_);
  auto& row = cache_[j];
  const auto& f = weight_.factors()[j];
  while (static_cast<int>(row.size()) <= k) {
    int i = static_cast<int>(row.size());
    row.push_back(method_ == MomentMethod::ClosedForm ? radial_moment_closed_form(f.c, f.s, i)
                                                      : radial_moment_quadrature(f.c, f.s, i));
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace fock
