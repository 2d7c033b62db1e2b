#pragma once

#include "itinf/num.hpp"

#include <json.hpp>

namespace itinf {

using Json = nlohmann::ordered_json;

// Integers become JSON numbers when they fit in int64 and strings otherwise.
Json int_to_json(const Int& v);
Json nat_to_json(const Nat& v);
Json vec_to_json(const IntVec& v);
Int json_to_int(const Json& j);
Nat json_to_nat(const Json& j);
IntVec json_to_vec(const Json& j);

}  // namespace itinf
