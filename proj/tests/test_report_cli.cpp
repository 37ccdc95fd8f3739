#include "oracles.hpp"

#include "cli.hpp"
#include "qss/report.hpp"

#include <doctest.h>

#include <limits>
#include <sstream>

using qss::CompleteIntersection;
using qss::Rational;
namespace report = qss::report;
namespace cli = qss::cli;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qss");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const auto parsed = cli::parseArgs(static_cast<int>(argv.size()), argv.data(), out, err);
  int code = 0;
  if (const int* early = std::get_if<int>(&parsed)) {
    code = *early;
  } else {
    code = cli::run(std::get<cli::RunConfig>(parsed), out, err);
  }
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("rational json form") {
  const auto j = report::toJson(Rational(-7, 3));
  CHECK(j["num"] == "-7");
  CHECK(j["den"] == "3");
  CHECK(report::rationalFromJson(j) == Rational(-7, 3));
  const Rational big = qss::pow(Rational(10), 40) + Rational(1, 7);
  CHECK(report::rationalFromJson(report::toJson(big)) == big);
}

TEST_CASE("certificates round trip through json") {
  for (const auto& c : qss::oracle::sweep(9, 4, 2)) {
    const CompleteIntersection ci(c.n, c.degrees);
    const auto cert = qss::certify(ci);
    const auto j = report::toJson(cert);
    REQUIRE(report::certificateFromJson(j) == cert);
    REQUIRE(report::certificateFromJson(report::Json::parse(j.dump())) == cert);
  }
  const CompleteIntersection cubic(5, {3});
  auto cert = qss::certify(cubic);
  cert.oracle = qss::numericOracle(cubic, cert, 4, 9);
  const auto j = report::toJson(cert);
  CHECK(j["verdict"] == "CERTIFIED_GENERIC_SEMISIMPLE");
  CHECK(j["l0"]["num"] == "6");
  CHECK(j["det_linear_coeff"]["num"] == "-18");
  CHECK(j["jet_criterion"] == "GENERIC_DISTINCT");
  CHECK(report::certificateFromJson(report::Json::parse(j.dump())) == cert);
}

TEST_CASE("non-finite gaps serialize as null") {
  qss::OracleReport r;
  r.samples = 1;
  r.successes = 1;
  r.results.push_back({0, Rational(0), true, std::numeric_limits<double>::infinity(), 1.0});
  const auto j = report::toJson(r);
  CHECK(j["results"][0]["min_gap"].is_null());
  CHECK(report::oracleFromJson(report::Json::parse(j.dump())) == r);
}

TEST_CASE("malformed json is rejected") {
  auto j = report::toJson(qss::certify(CompleteIntersection(5, {3})));
  j["verdict"] = "SOMETIMES";
  CHECK_THROWS(report::certificateFromJson(j));
}

TEST_CASE("csv rows") {
  CHECK(report::csvHeader() == "n,degrees,r,d,e,delta,l0,det_linear_coeff,verdict");
  CHECK(report::csvRow(qss::certify(CompleteIntersection(5, {3}))) == "5,3,1,3,3,1/2,6,-18,CERTIFIED_GENERIC_SEMISIMPLE");
  CHECK(report::csvRow(qss::certify(CompleteIntersection(6, {2, 2}))) ==
        "6,2;2,2,4,3,3/5,4,8/3,CERTIFIED_GENERIC_SEMISIMPLE");
  CHECK(report::csvRow(qss::certify(CompleteIntersection(3, {5}))) == "3,5,1,5,5,,,,HYPOTHESIS_FAIL");
}

TEST_CASE("text and json carry the same exact values") {
  for (const auto& [n, degrees] : std::vector<std::pair<int, std::vector<int>>>{{5, {3}}, {8, {4}}, {9, {2, 3}}}) {
    const auto cert = qss::certify(CompleteIntersection(n, degrees));
    const std::string text = report::renderText(cert);
    CHECK(text.find("l0 = " + cert.l0->str()) != std::string::npos);
    CHECK(text.find("det A(t) = " + cert.detLinearCoeff->str()) != std::string::npos);
    CHECK(text.find(qss::toString(cert.verdict)) != std::string::npos);
  }
}

TEST_CASE("cli certify") {
  const auto json = invoke({"certify", "-n", "5", "-d", "3", "--json"});
  CHECK(json.code == cli::kExitOk);
  const auto j = report::Json::parse(json.out);
  CHECK(j["verdict"] == "CERTIFIED_GENERIC_SEMISIMPLE");

  CHECK(invoke({"certify", "-n", "7", "-d", "3"}).out.find("INCONCLUSIVE_EXCEPTION") != std::string::npos);
  // a failed hypothesis is still a verdict
  CHECK(invoke({"certify", "-n", "3", "-d", "3"}).code == cli::kExitOk);

  const auto linear = invoke({"certify", "-n", "5", "-d", "1,3", "--csv"});
  CHECK(linear.code == cli::kExitOk);
  CHECK(linear.err.find("warning") != std::string::npos);
  CHECK(linear.out.find("5,3,1,3,3,1/2,6,-18") != std::string::npos);
}

TEST_CASE("cli lines and charpoly") {
  const auto lines = invoke({"lines", "-n", "4", "-d", "3", "-j", "0", "--csv"});
  CHECK(lines.code == cli::kExitOk);
  CHECK(lines.out == "j,d_times_l,l\n0,18,6\n");
  const auto cp = invoke({"charpoly", "-n", "6", "-d", "2,2", "--json"});
  CHECK(cp.code == cli::kExitOk);
  CHECK(report::Json::parse(cp.out)["origin"] == "lambda^7 - 16*lambda^2");
}

TEST_CASE("cli exit codes for bad input") {
  const auto unknown = invoke({"certify", "-n", "5", "-d", "3", "--bogus"});
  CHECK(unknown.code == cli::kExitInvalidInput);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(invoke({"certify", "-d", "3"}).code == cli::kExitInvalidInput);
  CHECK(invoke({"certify", "-n", "5", "-d", "0"}).code == cli::kExitInvalidInput);
  CHECK(invoke({"frobnicate"}).code == cli::kExitInvalidInput);
  CHECK(invoke({"lines", "-n", "4", "-d", "3", "-j", "9"}).code == cli::kExitInvalidInput);
  CHECK(invoke({"oracle", "-n", "7", "-d", "3"}).code == cli::kExitInvalidInput);
  CHECK(invoke({"--help"}).code == cli::kExitOk);
}

TEST_CASE("cli oracle") {
  const auto r = invoke({"oracle", "-n", "5", "-d", "3", "--samples", "5", "--seed", "42", "--json"});
  CHECK(r.code == cli::kExitOk);
  const auto j = report::Json::parse(r.out);
  CHECK(j["oracle"]["successes"] == 5);
  CHECK(invoke({"oracle", "-n", "5", "-d", "3", "--samples", "5", "--seed", "42", "--json"}).out == r.out);
}

TEST_CASE("sweep order and determinism") {
  const auto cases = cli::sweepCases(8, 4, 2);
  for (std::size_t i = 1; i < cases.size(); ++i) {
    const auto& a = cases[i - 1];
    const auto& b = cases[i];
    REQUIRE(std::pair(a.dimension(), a.degrees()) < std::pair(b.dimension(), b.degrees()));
  }
  CHECK(cases.size() == qss::oracle::sweep(8, 4, 2).size());
  const auto first = invoke({"sweep", "--n-max", "10", "--deg-max", "4", "--r-max", "2", "--csv", "--threads", "4"});
  const auto second = invoke({"sweep", "--n-max", "10", "--deg-max", "4", "--r-max", "2", "--csv", "--threads", "1"});
  CHECK(first.code == cli::kExitOk);
  CHECK(first.out == second.out);
  CHECK(first.out.rfind(report::csvHeader() + "\n", 0) == 0);
}
