#include "painleve/json_io.hpp"

namespace painleve {

Json params_json(const std::vector<Param>& params) {
    Json out = Json::array();
    for (const Param& p : params) out.push_back(to_string(p));
    return out;
}

Json params_json(const ParamVector& params) {
    Json out = Json::array();
    for (const auto& z : params) out.push_back(to_string(z));
    return out;
}

Json degree_json(const DegreeValue& d) {
    return std::visit(
        [](const auto& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ExactDegree>) {
                return {{"exact", v.value}};
            } else if constexpr (std::is_same_v<T, DegreeRange>) {
                return {{"range", {v.lo, v.hi}}};
            } else if constexpr (std::is_same_v<T, DegreeConflict>) {
                return {{"conflict", v.values}};
            } else {
                return "outside_paper_scope";
            }
        },
        d);
}

namespace {

Json optional_rank(const std::optional<int>& r) {
    if (r) return *r;
    return "outside_paper_scope";
}

}  // namespace

Json xc_report_json(const XcReport& r) {
    return {
        {"c_kind", r.c_kind == CKind::Rational ? "rational" : "non_rational_constant"},
        {"fiber_lascar", optional_rank(r.fiber_lascar)},
        {"fiber_morley", optional_rank(r.fiber_morley)},
        {"family_lascar", r.family_lascar},
        {"family_morley", r.family_morley},
        {"notes", r.notes},
    };
}

Json classification_json(const Classification& c) {
    Json out = {
        {"family", std::string(family_name(c.family))},
        {"params", params_json(c.params)},
        {"stratum", c.stratum},
        {"morley_rank", optional_rank(c.morley_rank)},
        {"morley_degree", degree_json(c.morley_degree)},
        {"citation", c.citation},
        {"notes", c.notes},
    };
    if (c.xc) out["xc"] = xc_report_json(*c.xc);
    return out;
}

Json word_json(const GroupWord& w) {
    Json out = Json::array();
    for (Generator g : w.letters) out.push_back(std::string(generator_name(g)));
    return out;
}

}  // namespace painleve
