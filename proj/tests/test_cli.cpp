#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>

#include "rrbeck/cli.hpp"

namespace rrbeck::cli {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<const char*> args)
{
    args.insert(args.begin(), "rrbeck");
    std::ostringstream out, err;
    const int code = main(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, VerifyJson)
{
    const auto r = run_cli({"verify", "--check", "theorem1", "--max-n", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["check"], "theorem1");
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["range"], nlohmann::json::array({0, 4}));
    bool seen = false;
    for (const auto& w : j["witnesses"]) {
        if (w["n"] == 4 && w["label"] == "excess") {
            EXPECT_EQ(w["expected"], 2);
            EXPECT_EQ(w["routes"]["pairs"], 2);
            seen = true;
        }
    }
    EXPECT_TRUE(seen);
}

TEST(Cli, VerifyAllHuman)
{
    const auto r = run_cli({"verify", "--max-n", "6"});
    EXPECT_EQ(r.code, 0) << r.err;
    for (const auto& name : check_names())
        EXPECT_NE(r.out.find(name), std::string::npos) << name;
}

TEST(Cli, VerifyCsvHeader)
{
    const auto r = run_cli({"verify", "--check", "phi", "--max-n", "3", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "check,n,label,expected,actual,ok,routes,counterexample,note");
}

TEST(Cli, Series)
{
    EXPECT_EQ(run_cli({"series", "--name", "t2", "--order", "4"}).out, "0,1,1,1,3\n");
    EXPECT_EQ(run_cli({"series", "--name", "rr1_prod", "--order", "4", "--format", "csv"}).out,
              "0,1,2,3,4\n1,1,1,1,2\n");
    const auto j = nlohmann::json::parse(run_cli({"series", "--name", "s1", "--order", "4", "--format", "json"}).out);
    EXPECT_EQ(j["order"], 4);
    EXPECT_EQ(j["coefficients"], nlohmann::json::array({0, 0, 1, 1, 2}));
}

TEST(Cli, SSet)
{
    EXPECT_EQ(run_cli({"sset", "--n", "4"}).out, "lambda=[2] a=2 b=1\n");
    EXPECT_EQ(run_cli({"sset", "--n", "4", "--format", "csv"}).out, "lambda,a,b\n[2],2,1\n");
}

TEST(Cli, Table)
{
    const auto r = run_cli({"table", "--theorem", "rr1-beck", "--max-n", "4", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("4,5,3,2,true"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run_cli({"series", "--name", "nope"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--check", "bogus"}).code, 2);
    EXPECT_EQ(run_cli({"sset", "--n", "0"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, OrderFromEnvironment)
{
    ::setenv(kOrderEnvVar, "3", 1);
    EXPECT_EQ(default_order_from_env(), 3u);
    EXPECT_EQ(run_cli({"series", "--name", "t1"}).out, "0,1,2,3\n");
    ::setenv(kOrderEnvVar, "junk", 1);
    EXPECT_EQ(default_order_from_env(), kDefaultOrder);
    ::unsetenv(kOrderEnvVar);
    EXPECT_EQ(default_order_from_env(), kDefaultOrder);
}

} // namespace
} // namespace rrbeck::cli
