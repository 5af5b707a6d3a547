#pragma once

// JSON encodings. Integers and rationals travel as decimal strings so that
// nothing is truncated; key order is fixed so output is byte-stable.

#include "romik/berggren.hpp"
#include "romik/lagrange.hpp"

#include <json.hpp>

namespace romik {

using Json = nlohmann::ordered_json;

/// {"a": "p/q", "b": "r/s", "d": "D"}
Json to_json(const QFE& x);
Json to_json(const Vec3& v);
Json to_json(const Mat3& m);  // array of rows
Json to_json(const CirclePoint& p);  // {"x": ..., "y": ...}
Json to_json(const Word& w);  // [3, 1]
Json to_json(const RationalExpansion& e);  // {"prefix": [...], "tail": "ONES"}
Json to_json(const Triple& t);  // {"a": "3", "b": "4", "c": "5"}
Json to_json(const ExpansionResult& r);
Json to_json(const PeriodicPointData& p);
Json to_json(const GaloisReport& g);
Json to_json(const CircularRoot& r);

/// Accepts "d" as a string or a JSON integer. Throws ParseError.
QFE qfe_from_json(const Json& j);
Vec3 vec3_from_json(const Json& j);
Mat3 mat3_from_json(const Json& j);
CirclePoint point_from_json(const Json& j);

}  // namespace romik
