#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "fock/rational.hpp"

namespace fock {

/// Exponent vector alpha in N_0^n indexing the monomial z^alpha.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : exps_(n, 0) {}
  MultiIndex(std::initializer_list<int> e);
  explicit MultiIndex(std::vector<int> e);

  std::size_t dim() const { return exps_.size(); }
  int operator[](std::size_t j) const { return exps_[j]; }
  int& operator[](std::size_t j) { return exps_[j]; }
  const std::vector<int>& exponents() const { return exps_; }

  int degree() const;
  /// alpha! = alpha_1! ... alpha_n!
  mpz_class factorial() const;

  /// Componentwise alpha >= beta.
  bool dominates(const MultiIndex& beta) const;

  static MultiIndex unit(std::size_t n, std::size_t j, int power = 1);

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  /// Requires a.dominates(b).
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;

  std::string to_string() const;

 private:
  std::vector<int> exps_;
};

/// Graded lexicographic order: total degree first, then lexicographically
/// larger exponent vectors first, so degree 3 in two variables runs
/// (3,0),(2,1),(1,2),(0,3).
struct GradedLex {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All alpha in N_0^n with |alpha| = m, in graded lexicographic order.
std::vector<MultiIndex> enumerate_degree(std::size_t n, int m);

/// All alpha with |alpha| <= m, graded lexicographic.
std::vector<MultiIndex> enumerate_up_to(std::size_t n, int m);

mpz_class factorial(int k);
mpz_class binomial(long n, long k);
/// k! / (k - j)!, zero when j > k.
mpz_class falling_factorial(int k, int j);

}  // namespace fock
