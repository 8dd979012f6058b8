#include "gencx/cli.hpp"

#include <gtest/gtest.h>

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace gencx::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gencx");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliEval, Values) {
  auto r = run_cli({"eval", "--expr", "exp(x)", "--at", "0", "--imag", "2"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_EQ(r.out, "1 + 2ε\n");
  r = run_cli({"eval", "--expr", "x*x", "--at", "3"});
  EXPECT_EQ(r.out, "9 + 0ε\n");
  r = run_cli({"eval", "--expr", "1/x", "--at", "0"});
  EXPECT_EQ(r.code, exit_domain_error);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("domain error"), std::string::npos);
}

TEST(CliEval, Json) {
  const auto r = run_cli({"eval", "--expr", "x^2", "--at", "3", "--imag", "1", "--format", "json"});
  EXPECT_EQ(r.out, R"({"expr":"x^2","at":3.0,"imag":1.0,"value":9.0,"epsilon":6.0})"
                   "\n");
}

TEST(CliDiff, Values) {
  auto r = run_cli({"diff", "--expr", "x*sin(x)", "--at", "1"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_EQ(r.out, "value: 0.841470984808\nderivative: 1.38177329068\n");
  r = run_cli({"diff", "--expr", "x", "--at", "7"});
  EXPECT_EQ(r.out, "value: 7\nderivative: 1\n");
  r = run_cli({"diff", "--expr", "sin(x)+cos(y)", "--at", "1"});
  EXPECT_EQ(r.code, exit_usage_error);
}

TEST(CliDiff, JsonAndDigits) {
  auto r = run_cli({"diff", "--expr", "x*sin(x)", "--at", "1", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["expr"], "x*sin(x)");
  EXPECT_EQ(j["at"], 1.0);
  EXPECT_EQ(j["value"], 0.841470984808);
  EXPECT_EQ(j["derivative"], 1.38177329068);
  r = run_cli({"diff", "--expr", "x*sin(x)", "--at", "1", "--digits", "4"});
  EXPECT_EQ(r.out, "value: 0.8415\nderivative: 1.382\n");
  EXPECT_EQ(run_cli({"diff", "--expr", "x", "--at", "1", "--digits", "3"}).code, exit_usage_error);
  EXPECT_EQ(run_cli({"diff", "--expr", "x", "--at", "1", "--digits", "18"}).code, exit_usage_error);
}

TEST(CliDiff, ConstantExpression) {
  const auto r = run_cli({"diff", "--expr", "pi", "--at", "1"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_EQ(r.out, "value: 3.14159265359\nderivative: 0\n");
}

TEST(CliTable, Formats) {
  auto r = run_cli({"table", "--expr", "x^2", "--from", "0", "--to", "2", "--step", "1", "--format", "csv"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_EQ(r.out, "x,f,df\n0,0,0\n1,1,2\n2,4,4\n");
  r = run_cli({"table", "--expr", "x", "--from", "5", "--to", "5", "--step", "1", "--format", "csv"});
  EXPECT_EQ(r.out, "x,f,df\n5,5,1\n");
  r = run_cli({"table", "--expr", "x^2", "--from", "0", "--to", "1", "--step", "1", "--format", "json"});
  EXPECT_EQ(r.out,
            R"([{"expr":"x^2","x":0.0,"value":0.0,"derivative":0.0},{"expr":"x^2","x":1.0,"value":1.0,"derivative":2.0}])"
            "\n");
  r = run_cli({"table", "--expr", "x", "--from", "0", "--to", "1", "--step", "0.5"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("0.5"), std::string::npos);
}

TEST(CliTable, GridIsIndexBased) {
  const auto r = run_cli({"table", "--expr", "x", "--from", "0", "--to", "1", "--step", "0.1", "--format", "csv",
                          "--digits", "17"});
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  int k = 0;
  while (std::getline(in, line)) {
    const std::string x = line.substr(0, line.find(','));
    double v = 0;
    std::from_chars(x.data(), x.data() + x.size(), v);
    EXPECT_EQ(v, 0.0 + k * 0.1);
    ++k;
  }
  EXPECT_EQ(k, 11);
}

TEST(CliTable, DomainErrorsBecomeNan) {
  auto r = run_cli({"table", "--expr", "sqrt(x)", "--from", "-1", "--to", "1", "--step", "1", "--format", "csv"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_EQ(r.out, "x,f,df\n-1,nan,nan\n0,0,nan\n1,1,0.5\n");
  r = run_cli({"table", "--expr", "1/x", "--from", "0", "--to", "1", "--step", "1", "--format", "json"});
  EXPECT_EQ(r.out,
            R"([{"expr":"1/x","x":0.0,"value":null,"derivative":null},{"expr":"1/x","x":1.0,"value":1.0,"derivative":-1.0}])"
            "\n");
}

TEST(CliTable, UsageErrors) {
  EXPECT_EQ(run_cli({"table", "--expr", "x", "--from", "0", "--to", "1", "--step", "0"}).code, exit_usage_error);
  EXPECT_EQ(run_cli({"table", "--expr", "x", "--from", "0", "--to", "1", "--step", "-1"}).code, exit_usage_error);
  EXPECT_EQ(run_cli({"table", "--expr", "x", "--from", "2", "--to", "1", "--step", "1"}).code, exit_usage_error);
  EXPECT_EQ(run_cli({"table", "--expr", "x", "--from", "0", "--to", "1"}).code, exit_usage_error);
  EXPECT_EQ(run_cli({"table", "--expr", "x+", "--from", "0", "--to", "1", "--step", "1"}).code, exit_parse_error);
  EXPECT_EQ(run_cli({"table", "--expr", "x", "--from", "0", "--to", "1e12", "--step", "1e-3"}).code,
            exit_usage_error);
}

TEST(CliCheck, Results) {
  auto r = run_cli({"check", "--expr", "x*sin(x)", "--at", "1"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("status: ok"), std::string::npos);
  r = run_cli({"check", "--expr", "x^2", "--at", "3", "--h", "0.5", "--format", "json"});
  EXPECT_EQ(r.code, exit_ok);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["derivative"], 6.0);
  EXPECT_EQ(j["fd_derivative"], 6.0);
  EXPECT_EQ(j["pass"], true);
  r = run_cli({"check", "--expr", "sqrt(x)", "--at", "1e-9", "--h", "1e-6"});
  EXPECT_EQ(r.code, exit_domain_error);
}

TEST(CliCheck, ToleranceExceeded) {
  // A coarse step makes the finite difference visibly wrong.
  const auto r = run_cli({"check", "--expr", "exp(x)", "--at", "0", "--h", "0.5", "--tol", "1e-5"});
  EXPECT_EQ(r.code, exit_check_failed);
  EXPECT_NE(r.out.find("FAILED"), std::string::npos);
  EXPECT_EQ(run_cli({"check", "--expr", "x", "--at", "0", "--h", "0"}).code, exit_usage_error);
}

TEST(CliErrors, ParseErrorReportsPosition) {
  const auto r = run_cli({"eval", "--expr", "x $ 1", "--at", "0"});
  EXPECT_EQ(r.code, exit_parse_error);
  EXPECT_NE(r.err.find("offset 2"), std::string::npos);
  EXPECT_NE(r.err.find("    ^"), std::string::npos);
}

TEST(CliErrors, Usage) {
  EXPECT_EQ(run_cli({}).code, exit_usage_error);
  EXPECT_EQ(run_cli({"frobnicate"}).code, exit_usage_error);
  EXPECT_EQ(run_cli({"eval", "--at", "1"}).code, exit_usage_error);
  EXPECT_EQ(run_cli({"eval", "--expr", "x"}).code, exit_usage_error);
  EXPECT_EQ(run_cli({"eval", "--expr", "x", "--at", "abc"}).code, exit_usage_error);
  EXPECT_EQ(run_cli({"eval", "--expr", "x", "--at", "1", "--format", "csv"}).code, exit_usage_error);
  EXPECT_EQ(run_cli({"eval", "--expr", "x^x", "--at", "2", "--imag", "1"}).code, exit_domain_error);
}

TEST(CliErrors, Help) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("-x^2 = -(x^2)"), std::string::npos);
}

}  // namespace
}  // namespace gencx::cli
