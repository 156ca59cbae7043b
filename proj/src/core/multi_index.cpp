#include "fock/multi_index.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace fock {

namespace {

// Initialize-once, read-many factorial table; grows under a lock.
class FactorialTable {
 public:
  mpz_class get(int k) {
    if (k < 0) throw std::invalid_argument("negative factorial argument");
    std::lock_guard lock(mu_);
    while (static_cast<int>(table_.size()) <= k) {
      mpz_class next = table_.back() * static_cast<unsigned long>(table_.size());
      table_.push_back(next);
    }
    return table_[static_cast<std::size_t>(k)];
  }

 private:
  std::mutex mu_;
  std::vector<mpz_class> table_{mpz_class(1)};
};

FactorialTable& factorials() {
  static FactorialTable table;
  return table;
}

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<int> e) : MultiIndex(std::vector<int>(e)) {}

MultiIndex::MultiIndex(std::vector<int> e) : exps_(std::move(e)) {
  for (int v : exps_) {
    if (v < 0) throw std::invalid_argument("multi-index exponents must be non-negative");
  }
}

int MultiIndex::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

mpz_class MultiIndex::factorial() const {
  mpz_class out = 1;
  for (int v : exps_) out *= fock::factorial(v);
  return out;
}

bool MultiIndex::dominates(const MultiIndex& beta) const {
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] < beta.exps_[j]) return false;
  }
  return true;
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t j, int power) {
  MultiIndex m(n);
  m.exps_.at(j) = power;
  return m;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("multi-index dimension mismatch");
  MultiIndex out(a);
  for (std::size_t j = 0; j < a.dim(); ++j) out.exps_[j] += b.exps_[j];
  return out;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("multi-index dimension mismatch");
  MultiIndex out(a);
  for (std::size_t j = 0; j < a.dim(); ++j) {
    out.exps_[j] -= b.exps_[j];
    if (out.exps_[j] < 0) throw std::invalid_argument("multi-index subtraction underflow");
  }
  return out;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(exps_[j]);
  }
  return s + ")";
}

bool GradedLex::operator()(const MultiIndex& a, const MultiIndex& b) const {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();
}

std::vector<MultiIndex> enumerate_degree(std::size_t n, int m) {
  if (n == 0) throw std::invalid_argument("dimension must be at least 1");
  if (m < 0) throw std::invalid_argument("degree must be non-negative");
  std::vector<MultiIndex> out;
  std::vector<int> cur(n, 0);
  // Depth-first with the first slot taking the largest share first.
  auto rec = [&](auto&& self, std::size_t slot, int remaining) -> void {
    if (slot + 1 == n) {
      cur[slot] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      cur[slot] = v;
      self(self, slot + 1, remaining - v);
    }
  };
  rec(rec, 0, m);
  return out;
}

std::vector<MultiIndex> enumerate_up_to(std::size_t n, int m) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= m; ++d) {
    auto block = enumerate_degree(n, d);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

mpz_class factorial(int k) { return factorials().get(k); }

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class falling_factorial(int k, int j) {
  if (j > k) return 0;
  mpz_class out = 1;
  for (int i = 0; i < j; ++i) out *= (k - i);
  return out;
}

}  // namespace fock
