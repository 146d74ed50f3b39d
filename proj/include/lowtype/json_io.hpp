#pragma once

#include <json.hpp>

#include "lowtype/branching.hpp"
#include "lowtype/laurent.hpp"
#include "lowtype/sl2.hpp"

namespace lowtype {

using Json = nlohmann::ordered_json;

// {"terms": [[exponent, "coefficient"], ...]}, ascending exponents,
// coefficients as decimal strings so 64-bit JSON readers never truncate.
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

// {"mults": [...], "lowest": j, "highest": j, "dim": "decimal-string"};
// lowest/highest are null for the zero representation.  Multiplicities are
// emitted as numbers while they all fit in 64 bits, as decimal strings
// otherwise.
Json decomposition_to_json(const Sl2Decomposition& dec);

// {"n":, "max_boxes":, "checked":, "max_min_dim":, "witnesses": [[text, min_dim], ...],
//  "violations": [text, ...]}
Json bound_report_to_json(const BoundReport& report);

}  // namespace lowtype
