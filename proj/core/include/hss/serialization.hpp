#pragma once

#include "hss/family.hpp"
#include "hss/jordan.hpp"
#include "hss/matrix.hpp"
#include "hss/octonion.hpp"
#include "hss/proj_point.hpp"
#include "hss/tangent.hpp"

#include <json.hpp>

namespace hss {

// Rationals serialize as "p" / "p/q" strings; matrices and vectors as
// (nested) arrays of those strings.
nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json vec_to_json(const RatVec& v);
RatVec vec_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const nlohmann::json& j);

// {a, b, u: [3], v: [3]}
nlohmann::json oct_to_json(const Oct& o);
Oct oct_from_json(const nlohmann::json& j);

// {c: [3], x, y, z}
nlohmann::json jordan_to_json(const JordanElem& m);
JordanElem jordan_from_json(const nlohmann::json& j);

// {family, params, form?} (no payload)
nlohmann::json family_to_json(const HSSFamily& f);
HSSFamily family_from_json(const nlohmann::json& j);

// {family, params, payload}
nlohmann::json tangent_to_json(const TangentVec& v);
TangentVec tangent_from_json(const nlohmann::json& j);

// {point: [...], blocks?: [...]}
nlohmann::json proj_point_to_json(const ProjPoint& z);
ProjPoint proj_point_from_json(const nlohmann::json& j);

}  // namespace hss
