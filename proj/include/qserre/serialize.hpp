#pragma once

#include <json.hpp>

#include "qserre/aqbridge.hpp"
#include "qserre/tdpair.hpp"

namespace qserre {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const Mat& m);
Mat mat_from_json(const Json& j);

Json to_json(const ModuleSpec& spec);
/// Accepts {"q": "p/q", "factors": [{"d": n, "a": "p/q"}, ...]}; "q" falls
/// back to default_q, "a" and "q" accept integers as shorthand.
ModuleSpec spec_from_json(const Json& j, const Rational& default_q);

Json to_json(const RelationReport& report);
Json to_json(const DrinfeldData& d);
Json to_json(const IrreducibilityVerdict& v);
Json to_json(const TdReport& report);

}  // namespace qserre
