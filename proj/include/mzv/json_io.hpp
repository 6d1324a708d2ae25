#pragma once

#include <json.hpp>

#include "mzv/eval_finite.hpp"
#include "mzv/eval_real.hpp"
#include "mzv/formal_sum.hpp"
#include "mzv/relations.hpp"

namespace mzv {

nlohmann::ordered_json to_json(const FormalSum& s);
nlohmann::ordered_json to_json(const Relation& rel);
nlohmann::ordered_json to_json(const EvalReport& rep);
nlohmann::ordered_json to_json(const ResidueVector& rv);
nlohmann::ordered_json to_json(const FiniteReport& rep);

}  // namespace mzv
