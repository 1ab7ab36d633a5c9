#pragma once
// Named verification suites shared by `dwork verify`, `dwork bundle` and the
// acceptance binary.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "dwork/config.hpp"
#include "dwork/counting/counting.hpp"

namespace dwork {

struct SuiteResult {
    std::string name;
    int run = 0;
    int passed = 0;
    int capped = 0;  // cases skipped by a computational cap
    std::string first_failure;
    bool computational_failure = false;
    double wall_seconds = 0;
    nlohmann::json cases = nlohmann::json::array();

    bool ok() const { return run > 0 && passed == run; }
    // 0 pass, 1 computational failure, 3 verification failure
    int exit_code() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// Throws InvalidArgument for an unknown name.
SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

// One acceptance criterion (1..12); several share a suite's computations.
SuiteResult run_criterion(int i, const RunConfig& cfg);
std::string criterion_title(int i);

// Level censuses shared between suites within one process.
const std::vector<LevelCensus>& shared_census(int n, std::uint64_t q, int K, const RunConfig& cfg);

}  // namespace dwork
