#pragma once

#include <json.hpp>

#include "perioknot/algebra.hpp"
#include "perioknot/homs.hpp"
#include "perioknot/periodic.hpp"
#include "perioknot/periods.hpp"
#include "perioknot/wirtinger.hpp"

namespace perioknot {

using Json = nlohmann::ordered_json;

/// [["a1_0", -1], ["a1_1", 1], ...]
Json word_to_json(const Word& w, const Presentation& pres);
Word word_from_json(const Json& j, const Presentation& pres);

/// {"generators": [...], "relators": [[[name, exp], ...], ...]}
Json to_json(const Presentation& pres);
Presentation presentation_from_json(const Json& j);

Json to_json(const PeripheralPair& pp, const Presentation& pres);

/// {"p": int, "code": "<gauss string>", "voltage": {"<id>": int}}
Json to_json(const VoltageGaussCode& q);
VoltageGaussCode voltage_code_from_json(const Json& j);

/// {"degree": d, "images": {"<generator>": "<cycle notation>"}}
Json to_json(const FiniteHom& h, const Presentation& pres);

/// {"offset": low exponent, "coefficients": [...]}
Json to_json(const LaurentPoly& poly);

Json to_json(const OrderInfo& info);

/// Schema "v1", fixed key order. `pres` names the witness generators.
Json to_json(const CertificationReport& report, const Presentation& pres);

}  // namespace perioknot
