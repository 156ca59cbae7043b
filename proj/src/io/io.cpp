#include "fock/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fock::io {

namespace {

void write(std::ostringstream& os, const Json& j, int indent, int level) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (level + 1)), ' ') : "";
  const std::string close = indent > 0 ? std::string(static_cast<std::size_t>(indent * level), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << Json(it.key()).dump() << (indent > 0 ? ": " : ":");
        write(os, it.value(), indent, level + 1);
      }
      os << nl << close << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << '[' << nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ',' << nl;
        os << pad;
        write(os, j[i], indent, level + 1);
      }
      os << nl << close << ']';
      return;
    }
    case Json::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        os << "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      os << buf;
      return;
    }
    default:
      os << j.dump();
  }
}

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw std::invalid_argument("field '" + field + "': " + why);
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where + key, "missing");
  return j[key];
}

std::size_t read_dim(const Json& j, const std::string& where) {
  const Json& n = require(j, "n", where);
  if (!n.is_number_integer() || n.get<long>() < 1) fail(where + "n", "must be a positive integer");
  return n.get<std::size_t>();
}

Rational read_rational(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(field, "expected a rational string like \"3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(field, e.what());
  }
}

MultiIndex read_index(const Json& j, std::size_t n, const std::string& field) {
  if (!j.is_array() || j.size() != n) fail(field, "expected " + std::to_string(n) + " exponents");
  std::vector<int> e;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long>() < 0) fail(field, "exponents must be non-negative integers");
    e.push_back(x.get<int>());
  }
  return MultiIndex(std::move(e));
}

QComplex read_coeff(const Json& t, const std::string& where) {
  QComplex c;
  if (t.contains("re")) c.re = read_rational(t["re"], where + "re");
  if (t.contains("im")) c.im = read_rational(t["im"], where + "im");
  return c;
}

Json index_json(const MultiIndex& a) { return Json(a.exponents()); }

}  // namespace

std::string dump(const Json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent, 0);
  return os.str();
}

Json to_json(const HoloPoly& f) {
  Json terms = Json::array();
  for (const auto& [a, c] : f.terms()) {
    terms.push_back({{"z", index_json(a)}, {"re", to_string(c.re)}, {"im", to_string(c.im)}});
  }
  return {{"n", f.dim()}, {"terms", terms}};
}

Json to_json(const HoloPolyF& f) {
  Json terms = Json::array();
  for (const auto& [a, c] : f.terms()) terms.push_back({{"z", index_json(a)}, {"re", c.real()}, {"im", c.imag()}});
  return {{"n", f.dim()}, {"terms", terms}};
}

Json to_json(const MixedPoly& m) {
  Json terms = Json::array();
  for (const auto& [k, c] : m.terms()) {
    terms.push_back(
        {{"z", index_json(k.z)}, {"zbar", index_json(k.zbar)}, {"re", to_string(c.re)}, {"im", to_string(c.im)}});
  }
  return {{"n", m.dim()}, {"terms", terms}};
}

Json to_json(const PForm& u) {
  Json comps = Json::object();
  for (const auto& [J, f] : u.components()) comps[format_index(J)] = to_json(f);
  return {{"n", u.dim()}, {"p", u.degree()}, {"components", comps}};
}

Json to_json(const PFormF& u) {
  Json comps = Json::object();
  for (const auto& [J, f] : u.components()) comps[format_index(J)] = to_json(f);
  return {{"n", u.dim()}, {"p", u.degree()}, {"components", comps}};
}

Json to_json(const ExactScalar& s) { return {{"exact", s.to_string()}, {"value", s.to_double()}}; }

Json to_json(const SpectrumTable& t) {
  Json rows = Json::array();
  for (const auto& r : t) rows.push_back({{"eigenvalue", r.eigenvalue}, {"multiplicity", r.multiplicity.get_str()}});
  return rows;
}

Json to_json(const EstimateCertificate& c) {
  Json j = {{"window", c.window}, {"lambda_min", c.lambda_min}, {"positive", c.positive()}};
  j["C"] = c.constant ? Json(*c.constant) : Json(nullptr);
  j["certified_lower_bound"] = c.certified ? Json(to_string(*c.certified)) : Json(nullptr);
  return j;
}

Json to_json(const KohnMorreyReport& r) {
  return {{"lhs", r.lhs},
          {"derivative_term", r.derivative_term},
          {"levi_term", r.levi_term},
          {"torsion", r.torsion},
          {"torsion_alt1", r.torsion_alt1},
          {"torsion_alt2", r.torsion_alt2},
          {"residual", r.residual},
          {"scale", r.scale()}};
}

HoloPoly holo_from_json(const Json& j) {
  const std::size_t n = read_dim(j, "");
  const Json& terms = require(j, "terms", "");
  if (!terms.is_array()) fail("terms", "must be an array");
  HoloPoly f(n);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "terms[" + std::to_string(i) + "].";
    const Json& t = terms[i];
    if (t.contains("zbar")) {
      MultiIndex b = read_index(t["zbar"], n, where + "zbar");
      if (b.degree() != 0) fail(where + "zbar", "a holomorphic polynomial cannot contain zbar");
    }
    f.add_term(read_index(require(t, "z", where), n, where + "z"), read_coeff(t, where));
  }
  return f;
}

MixedPoly mixed_from_json(const Json& j) {
  const std::size_t n = read_dim(j, "");
  const Json& terms = require(j, "terms", "");
  if (!terms.is_array()) fail("terms", "must be an array");
  MixedPoly m(n);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "terms[" + std::to_string(i) + "].";
    const Json& t = terms[i];
    MultiIndex a = read_index(require(t, "z", where), n, where + "z");
    MultiIndex b = t.contains("zbar") ? read_index(t["zbar"], n, where + "zbar") : MultiIndex(n);
    m.add_term(a, b, read_coeff(t, where));
  }
  return m;
}

PForm pform_from_json(const Json& j) {
  const std::size_t n = read_dim(j, "");
  const Json& pj = require(j, "p", "");
  if (!pj.is_number_integer() || pj.get<long>() < 0 || pj.get<std::size_t>() > n) fail("p", "must satisfy 0 <= p <= n");
  const std::size_t p = pj.get<std::size_t>();
  const Json& comps = require(j, "components", "");
  if (!comps.is_object()) fail("components", "must be an object keyed by \"j1,j2,...\"");
  PForm u(n, p);
  for (auto it = comps.begin(); it != comps.end(); ++it) {
    FormIndex J;
    try {
      J = parse_index(it.key(), n);
    } catch (const std::invalid_argument& e) {
      fail("components." + it.key(), e.what());
    }
    if (J.size() != p) fail("components." + it.key(), "index length differs from p");
    HoloPoly f;
    try {
      f = holo_from_json(it.value());
    } catch (const std::invalid_argument& e) {
      fail("components." + it.key(), e.what());
    }
    if (f.dim() != n) fail("components." + it.key() + ".n", "differs from the form dimension");
    u.add(J, f);
  }
  return u;
}

DOperator d_operator_from_json(const Json& j) {
  const std::size_t n = read_dim(j, "");
  const Json& ops = require(j, "p", "");
  if (!ops.is_array()) fail("p", "must be an array of operator expressions");
  std::vector<std::string> exprs;
  for (const auto& e : ops) {
    if (!e.is_string()) fail("p", "entries must be strings");
    exprs.push_back(e.get<std::string>());
  }
  return parse_d_operator(exprs, n);
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

std::string spectrum_csv(const SpectrumTable& t) {
  std::string out = "eigenvalue,multiplicity\n";
  for (const auto& r : t) out += std::to_string(r.eigenvalue) + "," + r.multiplicity.get_str() + "\n";
  return out;
}

}  // namespace fock::io
