#pragma once
// JSON renderings of the pipeline reports. Big numbers are decimal strings,
// polynomials coefficient arrays (lowest degree first).

#include <json.hpp>

#include "dwork/cli/suites.hpp"
#include "dwork/config.hpp"
#include "dwork/ffield/field.hpp"
#include "dwork/momentzeta/momentzeta.hpp"
#include "dwork/zeta0/zeta0.hpp"

namespace dwork {

nlohmann::json versions_json();
nlohmann::json field_json(const FieldCtx& F);
// {method, oracle_checked, seed, precision_bits, versions, fields}
nlohmann::json provenance_json(const std::string& method, bool oracle_checked, const RunConfig& cfg,
                               const nlohmann::json& fields = nlohmann::json::array());

nlohmann::json poly_to_json(const Poly& p);
nlohmann::json series_to_json(const ZetaSeries& s);

nlohmann::json to_json(const MomentReport& r);
nlohmann::json to_json(const GabReport& r);
nlohmann::json to_json(const Prop31Report& r);
nlohmann::json to_json(const ZetaX0Report& r);
// Deterministic: no wall time.
nlohmann::json to_json(const SuiteResult& r);

// {"n,a,b": {delta, D, degP, alpha, beta}}
nlohmann::json formulas_table(int n, int a_max, int a_only = -1, int b_only = -1);

}  // namespace dwork
