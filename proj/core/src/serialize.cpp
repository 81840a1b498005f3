#include "rectline/serialize.hpp"

#include "rectline/parse.hpp"

namespace rectline {

using nlohmann::json;

json step_to_json(const ElemAuto& step) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, JonquieresY>) {
                return {{"type", "jonquieres_y"}, {"poly", to_string(s.h, 'x')}};
            } else if constexpr (std::is_same_v<T, JonquieresX>) {
                return {{"type", "jonquieres_x"}, {"poly", to_string(s.g, 'y')}};
            } else {
                return {{"type", "affine"},
                        {"matrix",
                         {rational_to_string(s.a), rational_to_string(s.b),
                          rational_to_string(s.c), rational_to_string(s.d)}},
                        {"translation", {rational_to_string(s.e), rational_to_string(s.f)}}};
            }
        },
        step);
}

ElemAuto step_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "jonquieres_y")
        return JonquieresY{parse_unipoly(j.at("poly").get<std::string>(), 'x')};
    if (type == "jonquieres_x")
        return JonquieresX{parse_unipoly(j.at("poly").get<std::string>(), 'y')};
    if (type == "affine") {
        const auto& m = j.at("matrix");
        const auto& t = j.at("translation");
        Affine af{rational_from_string(m.at(0).get<std::string>()),
                  rational_from_string(m.at(1).get<std::string>()),
                  rational_from_string(m.at(2).get<std::string>()),
                  rational_from_string(m.at(3).get<std::string>()),
                  rational_from_string(t.at(0).get<std::string>()),
                  rational_from_string(t.at(1).get<std::string>())};
        return af;
    }
    throw std::invalid_argument("step_from_json: unknown step type '" + type + "'");
}

json seq_to_json(const AutoSeq& seq) {
    json arr = json::array();
    for (const auto& step : seq.steps) arr.push_back(step_to_json(step));
    return arr;
}

AutoSeq seq_from_json(const json& j) {
    AutoSeq seq;
    for (const auto& step : j) seq.steps.push_back(step_from_json(step));
    return seq;
}

json obstruction_to_json(const Obstruction& obs) {
    return std::visit(
        [](const auto& o) -> json {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, UnivariateNonlinear>) {
                return {{"type", "univariate_nonlinear"}};
            } else if constexpr (std::is_same_v<T, MultiplePointsAtInfinity>) {
                json w;
                if (o.witness_edge) {
                    w = {{"kind", "edge"},
                         {"k", o.witness_edge->weight.k},
                         {"l", o.witness_edge->weight.l},
                         {"i_min", o.witness_edge->i_min},
                         {"j_max", o.witness_edge->j_max},
                         {"steps", o.witness_edge->steps}};
                } else if (o.witness_vertex) {
                    w = {{"kind", "vertex"}, {"i", o.witness_vertex->i}, {"j", o.witness_vertex->j}};
                }
                return {{"type", "multiple_points_at_infinity"}, {"count", o.count}, {"witness", w}};
            } else {
                return {{"type", "both_weights_at_least_two"},
                        {"k", o.k},
                        {"l", o.l},
                        {"n", o.n},
                        {"chi", o.chi}};
            }
        },
        obs);
}

json decision_to_json(const Decision& d, bool verified) {
    json out;
    out["decision"] = d.is_coordinate ? "coordinate" : "not_coordinate";
    out["steps"] = d.certificate ? seq_to_json(d.certificate->seq) : json::array();
    out["target"] = "y";
    out["verified"] = verified;
    out["obstruction"] = d.obstruction ? obstruction_to_json(*d.obstruction) : json();
    return out;
}

}  // namespace rectline
