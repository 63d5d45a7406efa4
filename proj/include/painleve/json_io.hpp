#pragma once

#include "painleve/strata.hpp"

#include <json.hpp>

namespace painleve {

using Json = nlohmann::json;

Json params_json(const std::vector<Param>& params);
Json params_json(const ParamVector& params);
/// {"exact": n} | {"range": [lo, hi]} | {"conflict": [...]} | "outside_paper_scope"
Json degree_json(const DegreeValue& d);
Json xc_report_json(const XcReport& r);
/// family, params, stratum, morley_rank, morley_degree, citation, notes and,
/// for X_c, an "xc" rank report.
Json classification_json(const Classification& c);
Json word_json(const GroupWord& w);

}  // namespace painleve
