#include <doctest.h>

#include "fock/io.hpp"
#include "fock/random.hpp"

using namespace fock;

TEST_CASE("exact forms round trip") {
  FormSampler rng(9);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t p = 0; p <= n; ++p) {
      auto u = rng.form(n, p, 3);
      auto text = io::dump(io::to_json(u));
      CHECK(io::pform_from_json(io::parse_text(text)) == u);
      CHECK(io::holo_from_json(io::to_json(u.components().begin()->second)) == u.components().begin()->second);
    }
  }
}

TEST_CASE("mixed polynomials round trip") {
  MixedPoly m(2);
  m.add_term(MultiIndex{2, 0}, MultiIndex{1, 0}, QComplex(Rational(3, 4), Rational(-1)));
  m.add_term(MultiIndex{0, 1}, MultiIndex{0, 0}, QComplex(2));
  CHECK(io::mixed_from_json(io::to_json(m)) == m);
}

TEST_CASE("output is deterministic") {
  io::Json j = {{"b", 0.1}, {"a", {1.0 / 3, 2}}, {"c", "x"}};
  const std::string s = io::dump(j);
  CHECK(s == io::dump(io::parse_text(s)));
  CHECK(s.find("0.10000000000000001") != std::string::npos);
  CHECK(s.find("\"a\"") < s.find("\"b\""));
  CHECK(io::dump(io::Json::object(), 0) == "{}");
}

TEST_CASE("reader errors name the field") {
  auto expect = [](const char* text, const char* field) {
    try {
      io::pform_from_json(io::parse_text(text));
      FAIL("expected an error");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find(field) != std::string::npos);
    }
  };
  expect(R"({"p": 1, "components": {}})", "'n'");
  expect(R"({"n": 2, "p": 3, "components": {}})", "'p'");
  expect(R"({"n": 2, "p": 1, "components": {"3": {"n": 2, "terms": []}}})", "components.3");
  expect(R"({"n": 2, "p": 1, "components": {"1": {"n": 2, "terms": [{"z": [1], "re": "1"}]}}})", "z");
  expect(R"({"n": 2, "p": 1, "components": {"1": {"n": 2, "terms": [{"z": [1, 0], "re": "1/0"}]}}})", "re");
  CHECK_THROWS_AS(io::parse_text("{"), std::invalid_argument);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), std::invalid_argument);
}

TEST_CASE("operator files") {
  auto d = io::d_operator_from_json(io::parse_text(R"({"n": 2, "p": ["d1*d2", "d1^2 + d2^2"]})"));
  CHECK(d.dim() == 2);
  CHECK(d.homogeneous_degree() == 2);
  CHECK_THROWS(io::d_operator_from_json(io::parse_text(R"({"n": 2, "p": "d1"})")));
}

TEST_CASE("spectrum csv") {
  CHECK(io::spectrum_csv(spectrum_table(2, 1, 1)) == "eigenvalue,multiplicity\n1,2\n2,4\n");
  auto j = io::to_json(spectrum_table(1, 0, 0));
  CHECK(j[0]["multiplicity"] == "1");
}
