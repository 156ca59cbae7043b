#include <cctype>
#include <cmath>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fock/weighted.hpp"

namespace fock {

RadialPolyWeight::RadialPolyWeight(std::vector<RadialFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("weight needs at least one variable");
  for (const auto& f : factors_) {
    if (!(f.c > 0) || !std::isfinite(f.c)) throw std::invalid_argument("weight coefficient c must be positive");
    if (f.s < 1) throw std::invalid_argument("weight exponent s must be at least 1");
  }
}

RadialPolyWeight RadialPolyWeight::gaussian(std::size_t n) {
  return RadialPolyWeight(std::vector<RadialFactor>(n, RadialFactor{1.0, 1}));
}

bool RadialPolyWeight::is_gaussian() const {
  for (const auto& f : factors_) {
    if (f.c != 1.0 || f.s != 1) return false;
  }
  return true;
}

MixedPolyF RadialPolyWeight::dbar_phi(std::size_t j) const {
  const auto& f = factors_.at(j);
  return MixedPolyF::monomial(MultiIndex::unit(dim(), j, f.s), MultiIndex::unit(dim(), j, f.s - 1),
                              {f.c * f.s, 0.0});
}

MixedPolyF RadialPolyWeight::levi(std::size_t j, std::size_t k) const {
  if (j != k) return MixedPolyF(dim());
  const auto& f = factors_.at(j);
  MultiIndex e = MultiIndex::unit(dim(), j, f.s - 1);
  return MixedPolyF::monomial(e, e, {f.c * f.s * f.s, 0.0});
}

std::string RadialPolyWeight::to_string() const {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (j) os << " + ";
    os << factors_[j].c << "|z";
    if (factors_.size() > 1) os << j + 1;
    os << "|^" << 2 * factors_[j].s;
  }
  return os.str();
}

namespace {

RadialPolyWeight parse_weight_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("weight JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("weights") || !j["weights"].is_array()) {
    throw std::invalid_argument("weight JSON needs a \"weights\" array");
  }
  std::vector<RadialFactor> out;
  for (const auto& w : j["weights"]) {
    if (!w.contains("c") || !w.contains("s") || !w["c"].is_number() || !w["s"].is_number_integer()) {
      throw std::invalid_argument("each weight needs numeric \"c\" and integer \"s\"");
    }
    out.push_back({w["c"].get<double>(), w["s"].get<int>()});
  }
  return RadialPolyWeight(std::move(out));
}

}  // namespace

RadialPolyWeight parse_weight(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_weight_json(text);

  static const std::regex term_re(R"(^\s*([0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)?\s*\*?\s*\|\s*z([0-9]*)\s*\|\s*\^\s*([0-9]+)\s*$)");
  std::vector<std::pair<int, RadialFactor>> terms;
  bool bare = false;
  std::string s(text);
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t plus = s.find('+', start);
    // '+' inside an exponent like 1e+3 belongs to the number.
    while (plus != std::string::npos && plus > 0 && (s[plus - 1] == 'e' || s[plus - 1] == 'E')) {
      plus = s.find('+', plus + 1);
    }
    std::string piece = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    std::smatch m;
    if (!std::regex_match(piece, m, term_re)) throw std::invalid_argument("cannot parse weight term '" + piece + "'");
    double c = m[1].matched ? std::stod(m[1].str()) : 1.0;
    int index = 1;
    if (m[2].length() == 0) {
      bare = true;
    } else {
      index = std::stoi(m[2].str());
      if (index < 1) throw std::invalid_argument("weight variable index must start at 1");
    }
    int e = std::stoi(m[3].str());
    if (e < 2 || e % 2 != 0) throw std::invalid_argument("weight exponent must be a positive even integer");
    terms.push_back({index, {c, e / 2}});
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  if (bare && terms.size() > 1) throw std::invalid_argument("use z1, z2, ... when the weight has several variables");
  std::vector<RadialFactor> factors(terms.size());
  std::vector<bool> seen(terms.size(), false);
  for (const auto& [index, f] : terms) {
    auto j = static_cast<std::size_t>(index - 1);
    if (j >= terms.size()) throw std::invalid_argument("weight variable indices must be 1..n without gaps");
    if (seen[j]) throw std::invalid_argument("weight variable z" + std::to_string(index) + " given twice");
    seen[j] = true;
    factors[j] = f;
  }
  return RadialPolyWeight(std::move(factors));
}

}  // namespace fock
