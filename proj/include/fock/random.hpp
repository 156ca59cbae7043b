#pragma once

#include <cstdint>
#include <random>

#include "fock/holo_poly.hpp"
#include "fock/pform.hpp"

namespace fock {

/// Seeded generator for randomized suites. Uses raw mt19937_64 output only, so
/// sequences are identical across standard libraries.
class FormSampler {
 public:
  explicit FormSampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
  }
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  /// (a + b i) / c with small integers, zero with probability about 1/2.
  QComplex coefficient();
  /// Each monomial of degree <= max_degree present with probability about 1/2.
  HoloPoly holo(std::size_t n, int max_degree);
  /// Random (p,0)-form; never the zero form unless n, p leave no room.
  PForm form(std::size_t n, std::size_t p, int max_degree);

 private:
  std::mt19937_64 rng_;
};

}  // namespace fock
