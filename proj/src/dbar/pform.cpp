#include "fock/pform.hpp"

#include <algorithm>
#include <sstream>

namespace fock {

std::vector<FormIndex> increasing_indices(std::size_t n, std::size_t p) {
  std::vector<FormIndex> out;
  if (p > n) return out;
  FormIndex cur(p);
  auto rec = [&](auto&& self, std::size_t slot, int next) -> void {
    if (slot == p) {
      out.push_back(cur);
      return;
    }
    for (int j = next; j <= static_cast<int>(n - (p - slot)); ++j) {
      cur[slot] = j;
      self(self, slot + 1, j + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

Wedge wedge(int j, const FormIndex& J) {
  Wedge w;
  if (std::find(J.begin(), J.end(), j) != J.end()) return w;
  auto smaller = std::count_if(J.begin(), J.end(), [j](int k) { return k < j; });
  w.sign = smaller % 2 == 0 ? 1 : -1;
  w.index = J;
  w.index.insert(std::lower_bound(w.index.begin(), w.index.end(), j), j);
  return w;
}

std::string format_index(const FormIndex& J) {
  std::string out;
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(J[i] + 1);
  }
  return out;
}

FormIndex parse_index(const std::string& text, std::size_t n) {
  FormIndex J;
  if (text.empty()) return J;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed form index '" + text + "'");
    }
    if (used != item.size() || v < 1 || static_cast<std::size_t>(v) > n) {
      throw std::invalid_argument("malformed form index '" + text + "'");
    }
    J.push_back(v - 1);
  }
  for (std::size_t i = 1; i < J.size(); ++i) {
    if (J[i] <= J[i - 1]) throw std::invalid_argument("form index must be strictly increasing: '" + text + "'");
  }
  return J;
}

}  // namespace fock
