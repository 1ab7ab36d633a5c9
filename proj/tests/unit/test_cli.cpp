#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(DWORK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (size_t k = fread(buf, 1, sizeof buf, f)) out.append(buf, k);
    int status = pclose(f);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, CountExamples) {
    auto r = run("count --n 2 --q 3 --lambda 2");
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["N"], "3");
    EXPECT_TRUE(j["cross_check"]["agree"]);

    EXPECT_EQ(json::parse(run("count --n 2 --q 2 --lambda 1").out)["N"], "1");
    EXPECT_EQ(json::parse(run("count --n 4 --q 5 --lambda 0").out)["N"], "51");
}

TEST(Cli, CountTraceSign) {
    // N = ((q-1)^n - (-1)^n)/q + (-1)^(n-1) t
    json j = json::parse(run("count --n 2 --q 7 --lambda 3 --method gauss").out);
    long N = std::stol(j["N"].get<std::string>()), t = std::stol(j["t"].get<std::string>());
    EXPECT_EQ(N, (36 - 1) / 7 - t);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("verify nosuch").code, 2);
    EXPECT_EQ(run("count --n 2 --q 6 --lambda 1").code, 2);
    EXPECT_EQ(run("count --n 2 --q 3").code, 2);
    EXPECT_EQ(run("count --n 2 --q 3 --lambda 9").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST(Cli, VerifyCombinatorics) {
    auto r = run("verify combinatorics");
    EXPECT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["passed"], j["run"]);
}

TEST(Cli, MomentJson) {
    auto r = run("moment --n 2 --q 5 --d 1 --congruence 5:0");
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_TRUE(j["factorization_ok"]);
    EXPECT_EQ(j["congruence_partners"][0]["modulus"], "5");
    EXPECT_TRUE(j.contains("provenance"));
}

TEST(Cli, BundleIsDeterministic) {
    namespace fs = std::filesystem;
    fs::path base = fs::temp_directory_path() / "dwork_bundle_test";
    fs::remove_all(base);
    for (const char* sub : {"a", "b"})
        ASSERT_EQ(run("bundle --suites combinatorics,sk_minus_one --out " + (base / sub).string()).code, 0);
    auto slurp = [](const fs::path& p) {
        std::ifstream f(p);
        return std::string((std::istreambuf_iterator<char>(f)), {});
    };
    json ma = json::parse(slurp(base / "a" / "manifest.json"));
    json mb = json::parse(slurp(base / "b" / "manifest.json"));
    EXPECT_EQ(ma["artifacts"], mb["artifacts"]);
    EXPECT_EQ(ma["exit_code"], 0);
    EXPECT_EQ(slurp(base / "a" / "combinatorics.json"), slurp(base / "b" / "combinatorics.json"));
    fs::remove_all(base);
}
