#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "cyclohecke/errors.hpp"

using cyclo::cli::run;
using nlohmann::json;

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

}  // namespace

TEST(Cli, IdempotentsSmallDegenerate) {
  const auto r = invoke({"--flavor", "deg", "--p", "2", "--n", "2", "--kappa", "0", "idempotents"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["v"], 1);
  EXPECT_EQ(j["instances"][0]["report"]["support"], json::parse("[[0,1]]"));
}

TEST(Cli, IdempotentsSmallNonDegenerate) {
  const auto r =
      invoke({"--flavor", "nondeg", "--p", "3", "--e", "2", "--n", "2", "--kappa", "0", "idempotents"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["instances"][0]["report"]["support"], json::parse("[[0,1]]"));
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(invoke({"--flavor", "nondeg", "--p", "3", "--e", "3", "--n", "2", "idempotents"}).code, 2);
  EXPECT_EQ(invoke({"--flavor", "deg", "--p", "4", "--n", "2", "verify"}).code, 2);
  EXPECT_EQ(invoke({"--flavor", "deg", "--p", "2", "--kappa", "x", "verify"}).code, 2);
  EXPECT_EQ(invoke({"--flavor", "deg", "--p", "2", "--n", "7", "--kappa", "0,1", "verify"}).code, 2);
  EXPECT_EQ(invoke({"--sweep", "q=1..2", "dims"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, 0); }

TEST(Cli, PeriodsReportExpectedRows) {
  auto r = invoke({"--flavor", "deg", "--p", "2", "--n", "2", "--kappa", "0", "periods"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto row = json::parse(r.out)["instances"][0]["periods"][1];
  EXPECT_EQ(row["r"], 2);
  EXPECT_EQ(row["d_observed"], 2);
  EXPECT_EQ(row["N_observed"], 0);
  EXPECT_EQ(row["verdict"], "pass");

  r = invoke({"--flavor", "nondeg", "--p", "3", "--e", "2", "--n", "2", "--kappa", "0", "periods"});
  ASSERT_EQ(r.code, 0) << r.err;
  row = json::parse(r.out)["instances"][0]["periods"][1];
  EXPECT_EQ(row["d_observed"], 6);
  EXPECT_EQ(row["N_observed"], 0);
}

TEST(Cli, SweepProducesOneCsvRowPerStrand) {
  const auto r = invoke({"--flavor", "nondeg", "--p", "3", "--e", "2", "--kappa", "0", "--sweep",
                         "n=1..3", "--out", "csv", "periods"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 1 + 2 + 3);
}

TEST(Cli, Dimensions) {
  auto dim = [](const std::string& n, const std::string& kappa) {
    const auto r = invoke({"--n", n, "--kappa", kappa, "--p", "3", "dims"});
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out)["instances"][0]["dimension"].get<std::uint64_t>();
  };
  EXPECT_EQ(dim("3", "0,1"), 48u);
  EXPECT_EQ(dim("2", "0"), 2u);
  EXPECT_EQ(dim("4", "0,1,2"), 1944u);
}

TEST(Cli, VerifySmallCasesPass) {
  EXPECT_EQ(invoke({"--flavor", "deg", "--p", "2", "--n", "2", "--kappa", "0", "verify"}).code, 0);
  EXPECT_EQ(
      invoke({"--flavor", "nondeg", "--p", "3", "--e", "2", "--n", "2", "--kappa", "0", "verify"}).code,
      0);
}

TEST(Cli, MutationFixtureFailsVerification) {
  for (const std::string fault : {"commutation-shift", "cyclotomic-constant"}) {
    const auto r = invoke(
        {"--flavor", "deg", "--p", "3", "--n", "2", "--kappa", "0,1", "--fault", fault, "verify"});
    EXPECT_EQ(r.code, 3) << fault;
  }
}

TEST(Cli, BenchGateRejectsMutation) {
  const auto r = invoke({"--flavor", "deg", "--p", "3", "--n", "2", "--kappa", "0,1", "--fault",
                         "commutation-shift", "bench"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out.find("_ms"), std::string::npos);
}

TEST(Cli, VerifyOutputIsDeterministic) {
  const std::vector<std::string> args{"--flavor", "nondeg", "--p", "2", "--e", "3", "--n", "2",
                                      "--kappa", "0,1", "--seed", "42", "verify"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
