#include "dwork/cli/reports.hpp"

#include <gmp.h>

#include <boost/version.hpp>

#include "dwork/formulas/formulas.hpp"

namespace dwork {

using nlohmann::json;

namespace {

json strings(const std::vector<BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

json strings(const std::vector<BigRat>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

}  // namespace

json versions_json() {
    return {{"dwork", "0.1.0"}, {"gmp", gmp_version}, {"boost", BOOST_LIB_VERSION}};
}

json field_json(const FieldCtx& F) {
    return {{"p", F.p},
            {"m", F.m},
            {"seed", F.seed},
            {"modulus", F.modulus},
            {"generator", F.coeffs(F.g)},
            {"description", F.describe()}};
}

json provenance_json(const std::string& method, bool oracle_checked, const RunConfig& cfg, const json& fields) {
    return {{"method", method},
            {"oracle_checked", oracle_checked},
            {"seed", cfg.seed},
            {"precision_bits", cfg.precision_bits},
            {"fields", fields},
            {"versions", versions_json()}};
}

json poly_to_json(const Poly& p) {
    json a = json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(p[i].get_str());
    return a;
}

json series_to_json(const ZetaSeries& s) { return strings(s.coeffs); }

json to_json(const MomentReport& r) {
    json purity = json::array();
    for (const auto& e : r.purity)
        purity.push_back({{"part", e.part},
                          {"magnitude", static_cast<double>(e.magnitude)},
                          {"expected", static_cast<double>(e.expected)},
                          {"rel_error", static_cast<double>(e.rel_error)}});
    json cor = json::array();
    for (const auto& e : r.cor12)
        cor.push_back({{"k", e.k},
                       {"N", e.N.get_str()},
                       {"main_term", e.main_term.get_str()},
                       {"deviation", e.deviation.get_str()},
                       {"D", e.D},
                       {"holds", e.holds}});
    json partners = json::array();
    for (const auto& c : r.congruence_partners)
        partners.push_back({{"d2", c.d2}, {"m", c.m}, {"modulus", c.modulus.get_str()}, {"verified", c.verified}});
    return {{"n", r.n},
            {"q", r.q.get_str()},
            {"d", r.d},
            {"K", r.K},
            {"budget", r.budget},
            {"counts", strings(r.counts)},
            {"Z_d", series_to_json(r.Zd)},
            {"Q_d", r.Qd.to_string()},
            {"Q_d_display", r.Qd_display.to_string()},
            {"bad_fiber_sums", strings(r.bad_sums)},
            {"P_d", {{"num", poly_to_json(r.Pd.num)}, {"den", poly_to_json(r.Pd.den)}, {"verified_to", r.Pd.verified_to}}},
            {"degree_check",
             {{"predicted", {{"num", r.predicted.num}, {"den", r.predicted.den}}},
              {"observed", {{"num", r.observed_num}, {"den", r.observed_den}}},
              {"exact", r.degree_exact}}},
            {"factorization_ok", r.factorization_ok},
            {"functional_equation_signs", {r.fe_sign_num, r.fe_sign_den}},
            {"purity", purity},
            {"max_purity_error", static_cast<double>(r.max_purity_error)},
            {"estimate", cor},
            {"congruence_partners", partners}};
}

json to_json(const GabReport& r) {
    return {{"n", r.n},
            {"q", r.q.get_str()},
            {"a", r.a},
            {"b", r.b},
            {"K", r.K},
            {"S", strings(r.S)},
            {"L_series", series_to_json(r.L)},
            {"L", {{"num", poly_to_json(r.L_rf.num)}, {"den", poly_to_json(r.L_rf.den)}}},
            {"Q_bad", poly_to_json(r.Q_obs)},
            {"total_degree", {{"predicted", r.predicted_total}, {"observed", r.observed_total}}},
            {"delta", r.delta},
            {"alpha", {{"predicted", r.alpha_pred}, {"observed", r.alpha_obs}}},
            {"D", {{"predicted", r.D_pred}, {"observed", r.D_obs}}},
            {"P", poly_to_json(r.P)},
            {"degP", {{"predicted", r.degP_pred}, {"observed", r.degP_obs}}},
            {"P_is_polynomial", r.P_polynomial},
            {"purity_error", static_cast<double>(r.purity_error)},
            {"functional_equation_sign", r.fe_sign},
            {"ok", r.ok()}};
}

json to_json(const Prop31Report& r) {
    json bad = json::array();
    for (const auto& p : r.bad_charpolys) bad.push_back(poly_to_json(p));
    json mags = json::array();
    for (long double m : r.root_magnitudes) mags.push_back(static_cast<double>(m));
    return {{"n", r.n},
            {"q", r.q.get_str()},
            {"K", r.K},
            {"S", strings(r.S)},
            {"L_series", series_to_json(r.L)},
            {"P", poly_to_json(r.P)},
            {"bad_fiber_charpolys", bad},
            {"matches_bad_fibers", r.matches_bad_fibers},
            {"root_magnitudes", mags},
            {"purity_error", static_cast<double>(r.purity_error)}};
}

json to_json(const ZetaX0Report& r) {
    json orbits = json::array();
    for (const auto& f : r.factors)
        orbits.push_back({{"rep", f.orbit.rep},
                          {"length", f.orbit.length},
                          {"members", f.orbit.members},
                          {"index", f.index},
                          {"G", {f.G_re, f.G_im}},
                          {"c", {f.c_re, f.c_im}},
                          {"magnitude", static_cast<double>(f.magnitude)},
                          {"expected", static_cast<double>(f.expected)},
                          {"rel_error", static_cast<double>(f.rel_error)},
                          {"field", f.field}});
    json triv = json::object();
    for (auto [i, e] : r.trivial.exps) triv[std::to_string(i)] = e;
    return {{"p", r.p},
            {"n", r.n},
            {"m", r.m},
            {"a", r.a},
            {"trivial_exponents", triv},
            {"nontrivial_coeffs", poly_to_json(r.nontrivial)},
            {"orbit_table", orbits},
            {"rounding_error", static_cast<double>(r.rounding_error)}};
}

json to_json(const SuiteResult& r) {
    return {{"suite", r.name},
            {"run", r.run},
            {"passed", r.passed},
            {"capped", r.capped},
            {"status", r.ok() ? "pass" : (r.exit_code() == 1 ? "capped" : "fail")},
            {"first_failure", r.first_failure},
            {"cases", r.cases}};
}

json formulas_table(int n, int a_max, int a_only, int b_only) {
    json out = json::object();
    for (int a = 0; a <= a_max; ++a) {
        if (a_only >= 0 && a != a_only) continue;
        for (int b = 0; b <= n; ++b) {
            if (b_only >= 0 && b != b_only) continue;
            if (a + b == 0) continue;
            const int w = (a + b) * (n - 1);
            json beta_row = json::array();
            for (int k = 0; k <= w; ++k) beta_row.push_back(beta(n, b, k));
            out[std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b)] = {
                {"delta", delta(n, a, b)},
                {"D", D_local(n, a, b)},
                {"degP", degP(n, a, b)},
                {"rank", rank_G(n, a, b)},
                {"alpha", alpha_vector(n, a, b)},
                {"beta", beta_row}};
        }
    }
    return out;
}

}  // namespace dwork
