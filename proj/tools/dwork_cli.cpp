// dwork: point counts, zeta functions and moment L-functions of
// x_1 + ... + x_n + 1/(x_1 ... x_n) = lambda over finite fields.
//
// Exit codes: 0 pass, 1 computational failure (precision, caps),
// 2 usage error, 3 verification failure.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dwork/cli/reports.hpp"
#include "dwork/cli/suites.hpp"
#include "dwork/error.hpp"
#include "dwork/util/sha256.hpp"

using namespace dwork;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Opts {
    int n = 2, d = 1, a = -1, b = -1, m = 0, p = 0, terms = 0, validate = 0, a_max = 8;
    std::uint64_t q = 0;
    long long lambda = 0;
    std::string method, congruence, out, suite, suites;
};

void emit(const json& j, const std::string& out) {
    std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write " + out);
    f << text;
}

int cmd_count(const Opts& o, const RunConfig& cfg) {
    auto [p, m] = prime_power(o.q);
    FieldCtx F = build_field(p, m, cfg.seed, cfg.field_cap, cfg.cache_dir);
    FieldView v(F, F.m);
    if (o.lambda < 0 || static_cast<std::uint64_t>(o.lambda) >= o.q)
        throw InvalidArgument("--lambda must be an element code in [0, q)");
    FFElem l{static_cast<std::uint32_t>(o.lambda)};
    std::string method = o.method.empty() ? "both" : o.method;
    if (method != "brute" && method != "gauss" && method != "both") throw InvalidArgument("--method must be brute, gauss or both");

    const bool brute_ok = [&] {
        try {
            return static_cast<std::uint64_t>(torus_size(o.q, o.n)) <= cfg.work_cap;
        } catch (const CapExceeded&) {
            return false;
        }
    }();
    std::optional<FiberCount> brute, gauss;
    if (method != "gauss") {
        if (!brute_ok && method == "brute") throw WorkCapExceeded("(q-1)^n exceeds --work-cap");
        if (brute_ok) brute = count_bruteforce(v, o.n, l, cfg.work_cap);
    }
    if (method != "brute") gauss = count_fiber(v, o.n, l, cfg, CountMethod::Gauss);
    const FiberCount& res = gauss ? *gauss : *brute;
    const bool agree = !(brute && gauss) || brute->N == gauss->N;
    FiberKind kind = classify_fiber(v, o.n, l);

    json j = {{"n", o.n},
              {"q", std::to_string(o.q)},
              {"lambda", o.lambda},
              {"lambda_coeffs", F.coeffs(l)},
              {"kind", to_string(kind)},
              {"N", res.N.get_str()},
              {"t", frob_trace(o.n, BigInt(static_cast<unsigned long>(o.q)), res.N).get_str()}};
    json cc = json::object();
    if (brute) cc["brute"] = brute->N.get_str();
    if (gauss) cc["gauss"] = gauss->N.get_str();
    cc["agree"] = agree;
    j["cross_check"] = cc;
    j["provenance"] = provenance_json(brute && gauss ? "brute+gauss" : to_string(res.method), brute && gauss, cfg,
                                      json::array({field_json(F)}));
    emit(j, o.out);
    return agree ? 0 : 3;
}

int cmd_formulas(const Opts& o, const RunConfig& cfg) {
    json j = formulas_table(o.n, o.a >= 0 ? o.a : o.a_max, o.a, o.b);
    json wrap = {{"n", o.n}, {"table", j}, {"provenance", provenance_json("closed form", true, cfg)}};
    emit(wrap, o.out);
    return 0;
}

int cmd_zeta0(const Opts& o, const RunConfig& cfg) {
    auto rep = zeta_X0(o.p, o.n, cfg);
    json j = to_json(rep);
    bool checked = false;
    if (o.validate > 0) {
        validate_zeta_X0(rep, o.validate, cfg);
        auto counts = zero_fiber_counts(o.p, o.n, o.validate, cfg);
        json c = json::array();
        for (const auto& x : counts) c.push_back(x.get_str());
        j["validation"] = {{"K", o.validate}, {"counts", c}, {"match", true}};
        checked = true;
    } else {
        j["validation"] = nullptr;
    }
    j["provenance"] = provenance_json("gauss sums over p-orbits", checked, cfg);
    emit(j, o.out);
    return 0;
}

int cmd_moment(const Opts& o, const RunConfig& cfg) {
    MomentMethod method = parse_moment_method(o.method.empty() ? "charpoly" : o.method);
    auto rep = run_moment(o.n, o.q, o.d, o.terms, method, cfg);
    if (!o.congruence.empty()) {
        auto colon = o.congruence.find(':');
        if (colon == std::string::npos) throw InvalidArgument("--congruence expects d2:m");
        int d2 = std::stoi(o.congruence.substr(0, colon));
        int m = std::stoi(o.congruence.substr(colon + 1));
        int K = congruence_check(o.n, o.q, o.d, d2, m, rep.K, cfg);
        rep.congruence_partners.push_back({d2, m, ipow(BigInt(rep.p), m + 1), K});
    }
    json j = to_json(rep);
    json fields = json::array();
    for (const auto& f : rep.fields_used) fields.push_back(f);
    j["provenance"] = provenance_json(to_string(rep.method), method == MomentMethod::Both, cfg, fields);
    emit(j, o.out);
    bool ok = rep.factorization_ok;
    for (const auto& e : rep.cor12) ok = ok && e.holds;
    return ok ? 0 : 3;
}

int cmd_gab(const Opts& o, const RunConfig& cfg) {
    if (o.a < 0 || o.b < 0) throw InvalidArgument("gab needs --a and --b");
    auto rep = run_gab(o.n, o.q, o.a, o.b, o.terms, cfg);
    json j = to_json(rep);
    json fields = json::array();
    for (const auto& f : rep.fields_used) fields.push_back(f);
    j["provenance"] = provenance_json("charpoly traces", false, cfg, fields);
    emit(j, o.out);
    return rep.ok() ? 0 : 3;
}

int cmd_prop31(const Opts& o, const RunConfig& cfg) {
    auto rep = prop31_check(o.n, o.q, o.terms, cfg);
    json j = to_json(rep);
    j["provenance"] = provenance_json("all-fiber counts", false, cfg);
    emit(j, o.out);
    return rep.matches_bad_fibers ? 0 : 3;
}

int cmd_verify(const Opts& o, const RunConfig& cfg) {
    if (!is_suite(o.suite)) {
        std::cerr << "unknown suite '" << o.suite << "'; known:";
        for (const auto& s : suite_names()) std::cerr << " " << s;
        std::cerr << "\n";
        return 2;
    }
    SuiteResult r = run_suite(o.suite, cfg);
    json j = to_json(r);
    j["wall_seconds"] = r.wall_seconds;
    j["provenance"] = provenance_json("suite", true, cfg);
    emit(j, o.out);
    std::cerr << o.suite << ": " << r.passed << "/" << r.run << (r.ok() ? " pass" : " FAIL") << "\n";
    return r.exit_code();
}

int cmd_bundle(const Opts& o, const RunConfig& cfg) {
    fs::path dir = o.out.empty() ? fs::path("bundle") : fs::path(o.out);
    fs::create_directories(dir);
    std::vector<std::string> names;
    if (o.suites.empty()) {
        names = suite_names();
    } else {
        std::stringstream ss(o.suites);
        for (std::string s; std::getline(ss, s, ',');) names.push_back(s);
    }
    for (const auto& s : names)
        if (!is_suite(s)) throw InvalidArgument("unknown suite '" + s + "'");

    json artifacts = json::array();
    json timings = json::object();
    std::ostringstream csv;
    csv << "suite,run,passed,capped,status\n";
    int worst = 0;
    auto rank = [](int code) { return code == 3 ? 2 : code == 1 ? 1 : 0; };
    for (const auto& s : names) {
        SuiteResult r = run_suite(s, cfg);
        timings[s] = r.wall_seconds;
        json j = to_json(r);
        std::string file = s + ".json";
        std::string text = j.dump(2) + "\n";
        std::ofstream(dir / file, std::ios::binary) << text;
        std::string status = j["status"];
        artifacts.push_back({{"file", file}, {"sha256", sha256_hex(text)}, {"status", status}});
        csv << s << "," << r.run << "," << r.passed << "," << r.capped << "," << status << "\n";
        if (rank(r.exit_code()) > rank(worst)) worst = r.exit_code();
        std::cerr << s << ": " << status << " (" << r.passed << "/" << r.run << ")\n";
    }
    std::string csv_text = csv.str();
    std::ofstream(dir / "summary.csv", std::ios::binary) << csv_text;
    artifacts.push_back({{"file", "summary.csv"}, {"sha256", sha256_hex(csv_text)}, {"status", "table"}});
    json manifest = {{"inputs",
                      {{"seed", cfg.seed},
                       {"precision_bits", cfg.precision_bits},
                       {"field_cap", cfg.field_cap},
                       {"work_cap", cfg.work_cap},
                       {"suites", names}}},
                     {"versions", versions_json()},
                     {"artifacts", artifacts},
                     {"exit_code", worst},
                     {"timings_seconds", timings}};
    std::ofstream(dir / "manifest.json", std::ios::binary) << manifest.dump(2) << "\n";
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dwork: zeta functions of x_1+...+x_n+1/(x_1...x_n) = lambda over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();

    Opts o;
    RunConfig cfg;
    if (const char* env = std::getenv("DWORK_CACHE_DIR")) cfg.cache_dir = env;
    app.add_option("--precision-bits", cfg.precision_bits, "64, 128 or 256")->check(CLI::IsMember({64, 128, 256}));
    app.add_option("--field-cap", cfg.field_cap, "largest field size built")->check(CLI::PositiveNumber);
    app.add_option("--work-cap", cfg.work_cap, "largest brute-force enumeration")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "field construction seed");
    app.add_option("--cache-dir", cfg.cache_dir, "cache directory (default $DWORK_CACHE_DIR)");
    app.add_option("--out", o.out, "output file (bundle: directory)");
    app.add_flag("--force", cfg.force, "run below the degree budget");
    app.add_option("--p", o.p, "characteristic (with --m, an alternative to --q)");
    app.add_option("--m", o.m, "extension degree over F_p");

    auto* count = app.add_subcommand("count", "points on one fiber");
    count->add_option("--n", o.n)->required();
    count->add_option("--q", o.q);
    count->add_option("--lambda", o.lambda, "element code: base-p digits are the coefficients")->required();
    count->add_option("--method", o.method, "brute, gauss or both");

    auto* formulas = app.add_subcommand("formulas", "delta, D, degP, alpha, beta tables");
    formulas->add_option("--n", o.n)->required();
    formulas->add_option("--a", o.a);
    formulas->add_option("--b", o.b);
    formulas->add_option("--a-max", o.a_max);

    auto* zeta0 = app.add_subcommand("zeta0", "zeta function of the fiber at 0 over F_p");
    zeta0->add_option("--n", o.n)->required();
    zeta0->add_option("--validate", o.validate, "compare with point counts to order K");

    auto* moment = app.add_subcommand("moment", "moment zeta function Z_d and its pure part");
    moment->add_option("--n", o.n)->required();
    moment->add_option("--q", o.q);
    moment->add_option("--d", o.d)->required();
    moment->add_option("--terms", o.terms, "K (0 picks the degree budget)");
    moment->add_option("--method", o.method, "direct, charpoly, both");
    moment->add_option("--congruence", o.congruence, "d2:m");

    auto* gab = app.add_subcommand("gab", "L(U, Sym^a (x) wedge^b) for n = 2, 3");
    gab->add_option("--n", o.n)->required();
    gab->add_option("--q", o.q);
    gab->add_option("--a", o.a)->required();
    gab->add_option("--b", o.b)->required();
    gab->add_option("--terms", o.terms);

    auto* prop31 = app.add_subcommand("prop31", "L(U, F) = (1-T) P^{n+1}");
    prop31->add_option("--n", o.n)->required();
    prop31->add_option("--q", o.q);
    prop31->add_option("--terms", o.terms);

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", o.suite)->required();

    auto* bundle = app.add_subcommand("bundle", "run all suites into a directory with a manifest");
    bundle->add_option("--suites", o.suites, "comma-separated subset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (o.q == 0 && o.p > 0) {
            o.q = 1;
            for (int i = 0; i < std::max(o.m, 1); ++i) o.q *= static_cast<std::uint64_t>(o.p);
        }
        if ((*count || *moment || *gab || *prop31) && o.q == 0) throw InvalidArgument("--q (or --p/--m) is required");
        if (*zeta0 && o.p <= 0) throw InvalidArgument("zeta0 needs --p");
        if (*count) return cmd_count(o, cfg);
        if (*formulas) return cmd_formulas(o, cfg);
        if (*zeta0) return cmd_zeta0(o, cfg);
        if (*moment) return cmd_moment(o, cfg);
        if (*gab) return cmd_gab(o, cfg);
        if (*prop31) return cmd_prop31(o, cfg);
        if (*verify) return cmd_verify(o, cfg);
        if (*bundle) return cmd_bundle(o, cfg);
    } catch (const Error& e) {
        std::cerr << json({{"error", e.name()}, {"message", e.what()}}).dump() << "\n";
        switch (e.kind()) {
            case FailureKind::Usage: return 2;
            case FailureKind::Computational: return 1;
            default: return 3;
        }
    } catch (const std::exception& e) {
        std::cerr << json({{"error", "exception"}, {"message", e.what()}}).dump() << "\n";
        return 1;
    }
    return 2;
}
