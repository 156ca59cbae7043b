#include "fock/random.hpp"

namespace fock {

QComplex FormSampler::coefficient() {
  if (uniform(0, 1) == 0) return {};
  Rational re(uniform(-4, 4), uniform(1, 3));
  Rational im(uniform(-4, 4), uniform(1, 3));
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

HoloPoly FormSampler::holo(std::size_t n, int max_degree) {
  HoloPoly f(n);
  for (const auto& a : enumerate_up_to(n, max_degree)) f.add_term(a, coefficient());
  return f;
}

PForm FormSampler::form(std::size_t n, std::size_t p, int max_degree) {
  auto indices = increasing_indices(n, p);
  PForm u(n, p);
  while (u.is_zero()) {
    for (const auto& J : indices) u.add(J, holo(n, max_degree));
  }
  return u;
}

}  // namespace fock
