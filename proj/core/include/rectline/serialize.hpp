#pragma once

#include <json.hpp>

#include "rectline/rectify.hpp"

namespace rectline {

// Certificate-step schema:
//   {"type":"jonquieres_x"|"jonquieres_y","poly":"<univariate expr>"}
//   {"type":"affine","matrix":["a","b","c","d"],"translation":["e","f"]}
// Coefficients are "num/den" strings.
nlohmann::json step_to_json(const ElemAuto& step);
ElemAuto step_from_json(const nlohmann::json& j);

nlohmann::json seq_to_json(const AutoSeq& seq);
AutoSeq seq_from_json(const nlohmann::json& j);

nlohmann::json obstruction_to_json(const Obstruction& obs);

// Full decision schema:
//   {"decision":"coordinate"|"not_coordinate","steps":[...],"target":"y",
//    "verified":bool,"obstruction":{...}|null}
nlohmann::json decision_to_json(const Decision& d, bool verified);

}  // namespace rectline
