#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "gpfree/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "gpfree");
    std::ostringstream out, err;
    const int code = gpfree::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CountNormSeven) {
    const auto r = cli({"count", "--norm", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["count"], 192);
    EXPECT_EQ(j["inputs"]["norm"], 7);
    EXPECT_TRUE(j.contains("provenance"));
}

TEST(Cli, CountTableCsv) {
    const auto r = cli({"count", "--table", "4"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "norm,count,cumulative");
}

TEST(Cli, GreedyCsvHeader) {
    const auto r = cli({"greedy-hur", "--max-norm", "8", "--emit", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "norm,element,status,a,b,ratio");
    EXPECT_NE(r.out.find(",excluded,"), std::string::npos);
}

TEST(Cli, FreegroupDensityText) {
    const auto r = cli({"--format", "text", "freegroup", "density", "--n", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "4/13\n");
}

TEST(Cli, WitnessJson) {
    const auto r = cli({"freegroup", "witness", "--n", "-47"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["witness"]["a"], 7);
    EXPECT_EQ(j["witness"]["b"], -20);
    EXPECT_EQ(j["witness"]["r"], -27);
}

TEST(Cli, Deterministic) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"bounds"}, {"rankin", "--max-prime", "1000"}, {"greedy-hur", "--max-norm", "12"}, {"freegroup", "greedy", "--max-len", "18"}}) {
        const auto a = cli(args), b = cli(args);
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, BoundsSixPlaces) {
    const auto j = nlohmann::json::parse(cli({"bounds"}).out);
    EXPECT_NEAR(j["lower"].get<double>(), 0.946589, 5e-7);
    EXPECT_NEAR(j["upper"].get<double>(), 0.952381, 5e-7);
    EXPECT_EQ(j["upper_exact"], "20/21");
}

TEST(Cli, AnnuliStandardAndMutant) {
    EXPECT_EQ(cli({"annuli-check"}).code, 0);
    const auto r = cli({"annuli-check", "--intervals", "48:45,40:36,32:27,24:12,9:8,5:1"});
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j["gp_free"].get<bool>());
    EXPECT_EQ(j["counterexample"].size(), 3u);
}

TEST(Cli, BadArguments) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"nonsense"}).code, 2);
    EXPECT_EQ(cli({"count", "--norm", "0"}).code, 2);
    EXPECT_EQ(cli({"count", "--norm", "abc"}).code, 2);
    EXPECT_EQ(cli({"annuli-check", "--intervals", "4:9"}).code, 2);
    EXPECT_EQ(cli({"annuli-check", "--intervals", "x"}).code, 2);
    EXPECT_EQ(cli({"--format", "xml", "bounds"}).code, 2);
    EXPECT_EQ(cli({"freegroup"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(cli({"--help"}).code, 0); }

TEST(Cli, OutputDirectoryEnvironment) {
    const auto dir = std::filesystem::temp_directory_path() / "gpfree_cli_test";
    std::filesystem::create_directories(dir);
    ::setenv(gpfree::cli::kOutputDirEnv, dir.c_str(), 1);
    const auto r = cli({"-o", "count.json", "count", "--norm", "3"});
    ::unsetenv(gpfree::cli::kOutputDirEnv);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(dir / "count.json");
    ASSERT_TRUE(in);
    const auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["count"], 96);
    std::filesystem::remove_all(dir);
}
