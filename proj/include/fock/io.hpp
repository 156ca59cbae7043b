#pragma once

#include <string>

#include <json.hpp>

#include "fock/dbar.hpp"
#include "fock/general_d.hpp"
#include "fock/holo_poly.hpp"
#include "fock/mixed_poly.hpp"
#include "fock/pform.hpp"
#include "fock/weighted.hpp"

namespace fock::io {

using Json = nlohmann::json;

/// Deterministic text: sorted keys, doubles with 17 significant digits.
std::string dump(const Json& j, int indent = 2);

/// {"n", "terms": [{"z", "re", "im"}]} with rational strings.
Json to_json(const HoloPoly& f);
/// Float coefficients are written as numbers.
Json to_json(const HoloPolyF& f);
/// {"n", "terms": [{"z", "zbar", "re", "im"}]}.
Json to_json(const MixedPoly& m);
/// {"n", "p", "components": {"1,2": poly}}.
Json to_json(const PForm& u);
Json to_json(const PFormF& u);
Json to_json(const ExactScalar& s);
Json to_json(const SpectrumTable& t);
Json to_json(const EstimateCertificate& c);
Json to_json(const KohnMorreyReport& r);

/// Readers throw std::invalid_argument naming the offending field. Coefficients may be
/// rational strings or integers.
HoloPoly holo_from_json(const Json& j);
MixedPoly mixed_from_json(const Json& j);
PForm pform_from_json(const Json& j);
/// {"n", "p": ["d1^2", ...]}.
DOperator d_operator_from_json(const Json& j);

Json parse_text(const std::string& text);
Json read_file(const std::string& path);

/// "eigenvalue,multiplicity" rows with a header line.
std::string spectrum_csv(const SpectrumTable& t);

}  // namespace fock::io
