#pragma once

#include <json.hpp>

#include "torus/bipoly.hpp"
#include "torus/laurent.hpp"
#include "torus/radical.hpp"

namespace torus::detail {

using Json = nlohmann::ordered_json;

Json to_json(const LaurentPoly& p);
Json to_json(const BiPoly& p);
Json to_json(const RadicalExpr& e);

LaurentPoly laurent_from_json(const Json& j);
BiPoly bipoly_from_json(const Json& j);

}  // namespace torus::detail
