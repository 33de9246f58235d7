#include "cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace graphzeta::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kData = GRAPHZETA_TEST_DATA_DIR;

TEST(Cli, ZerosOfTriangle) {
    const auto r = invoke({"zeros", "--graph", "cycle:3", "--format", "text"});
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(r.out, "case: M_EQ_N\n1/2 - i*0.288675134595 (x2)\n1/2 + i*0.288675134595 (x2)\n1/2 + i*inf (x2)\n");
}

TEST(Cli, VerifyKonnoSatoOnStar) {
    const auto r = invoke({"verify", "--graph", "star:6", "--identity", "konno-sato", "--samples", "20"});
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_TRUE(r.out.starts_with("konno-sato: PASS samples=20 ")) << r.out;
}

TEST(Cli, RwSpectrumJson) {
    const auto r = invoke({"spectrum", "--graph", "complete:4", "--operator", "rw", "--format", "json"});
    ASSERT_EQ(r.code, kOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["entries"].size(), 2U);
    EXPECT_NEAR(j["entries"][0]["re"].get<double>(), -1.0 / 3.0, 1e-12);
    EXPECT_EQ(j["entries"][0]["im"].get<double>(), 0.0);
    EXPECT_EQ(j["entries"][0]["mult"], 3);
    EXPECT_EQ(j["entries"][1]["re"].get<double>(), 1.0);
    EXPECT_EQ(j["entries"][1]["mult"], 1);
}

TEST(Cli, OtherOperators) {
    const auto grover = invoke({"spectrum", "--graph", "cycle:4", "--operator", "grover", "--format", "json"});
    ASSERT_EQ(grover.code, kOk) << grover.err;
    const auto j = nlohmann::json::parse(grover.out);
    const double expected[4][2] = {{-1, 0}, {0, -1}, {0, 1}, {1, 0}};
    ASSERT_EQ(j["entries"].size(), 4U);
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(j["entries"][k]["re"].get<double>(), expected[k][0], 1e-12);
        EXPECT_NEAR(j["entries"][k]["im"].get<double>(), expected[k][1], 1e-12);
        EXPECT_EQ(j["entries"][k]["mult"], 2);
    }
    const auto csv = invoke({"spectrum", "--graph", "cycle:4", "--operator", "grover", "--format", "csv"});
    EXPECT_TRUE(csv.out.starts_with("re,im,mult\n"));
    const auto lap = invoke({"spectrum", "--graph", "star:4", "--operator", "laplacian"});
    EXPECT_NE(lap.out.find("\n1 (x2)\n4 (x1)\n"), std::string::npos) << lap.out;
    const auto support = invoke({"spectrum", "--graph", "complete:2", "--operator", "grover-support"});
    EXPECT_EQ(support.out, "-1 (x1)\n1 (x1)\n");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, kUsageError);
    EXPECT_EQ(invoke({"spectrum"}).code, kUsageError);
    EXPECT_EQ(invoke({"spectrum", "--graph", "cycle:4", "--operator", "bogus"}).code, kUsageError);
    EXPECT_EQ(invoke({"zeros", "--graph", "wheel:5"}).code, kUsageError);
    EXPECT_EQ(invoke({"zeros", "--graph", "cycle:4", "--format", "xml"}).code, kUsageError);
    EXPECT_EQ(invoke({"zeros", "--graph", "cycle:4", "--tol", "-1"}).code, kUsageError);
    EXPECT_EQ(invoke({"verify", "--graph", "cycle:4", "--samples", "0"}).code, kUsageError);
    EXPECT_EQ(invoke({"verify", "--graph", "cycle:4", "--identity", "nope"}).code, kUsageError);
    EXPECT_EQ(invoke({"zeta", "--graph", "cycle:4"}).code, kUsageError);
    EXPECT_EQ(invoke({"zeta", "--graph", "cycle:4", "--u", "a,b"}).code, kUsageError);
    EXPECT_EQ(invoke({"gen", "--graph", kData + "/disconnected.txt"}).code, kUsageError);
    EXPECT_EQ(invoke({"gen", "--graph", kData + "/missing.txt"}).code, kUsageError);
    const auto r = invoke({"frobnicate"});
    EXPECT_EQ(r.code, kUsageError);
    EXPECT_NE(r.err.find("--graph"), std::string::npos);
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args = {"verify", "--graph", "petersen", "--format", "json", "--seed", "7"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    EXPECT_EQ(a.code, kOk);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EdgeListFile) {
    const auto r = invoke({"gen", "--graph", kData + "/triangle.txt", "--format", "json"});
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(r.out, "{\"n\":3,\"m\":3,\"edges\":[[0,1],[0,2],[1,2]]}\n");
    const auto z = invoke({"zeros", "--graph", kData + "/triangle.txt"});
    EXPECT_EQ(z.out, invoke({"zeros", "--graph", "cycle:3"}).out);
}

TEST(Cli, OutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "graphzeta_cli_out.csv";
    std::filesystem::remove(path);
    const auto r = invoke({"export", "--graph", "complete:2", "--operator", "laplacian", "--out", path.string()});
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), "1,-1\n-1,1\n");
    std::filesystem::remove(path);
}

TEST(Cli, VerifyAll) {
    const auto r = invoke({"verify", "--graph", "complete:5", "--identity", "all"});
    EXPECT_EQ(r.code, kOk) << r.err;
    for (const char* name : {"konno-sato: PASS", "ihara-bass: PASS", "spectral-map: PASS", "functional-eq: PASS",
                             "rh: PASS"})
        EXPECT_NE(r.out.find(name), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("functional-eq: PASS samples=100 "), std::string::npos);
}

TEST(Cli, VerificationFailureExitCode) {
    // A grouping tolerance this coarse merges 1 and cos(2pi/5) in Spec(P) but not
    // the direct eigenvalues of U, so the mapped spectrum disagrees.
    const auto r = invoke({"verify", "--graph", "cycle:5", "--identity", "spectral-map", "--tol", "0.8"});
    EXPECT_EQ(r.code, kVerificationFailed) << r.out;
}

TEST(Cli, ZetaPoint) {
    const auto r = invoke({"zeta", "--graph", "cycle:3", "--u", "0.5,0", "--s", "0.5,0", "--format", "json"});
    ASSERT_EQ(r.code, kOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["ihara_reciprocal_bass"]["re"].get<double>(), 0.765625, 1e-12);
    EXPECT_NEAR(j["konno_sato_rhs"]["re"].get<double>(), 0.765625, 1e-12);
    EXPECT_NEAR(j["lambda_qw"]["re"].get<double>(), 1.0 / 144.0, 1e-14);
    EXPECT_EQ(j["lambda_qw_infinite_factors"], 1);
}

}  // namespace
}  // namespace graphzeta::cli
