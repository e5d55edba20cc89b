#pragma once

#include "json.hpp"
#include "shuffleforge/ratfunc.hpp"

namespace shuffleforge {

using Json = nlohmann::ordered_json;

// [{"coeff": "p/q", "exps": {"x(0,1)": 1, "q": -2}}, ...] in canonical term
// order; exps keys in VarId order.
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

// {"num": <poly>, "den": [<poly>, ...]}
Json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

}  // namespace shuffleforge
