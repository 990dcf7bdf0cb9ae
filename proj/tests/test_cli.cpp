#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "qvitali/cli.hpp"

using qvitali::cli::run;

namespace {
bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }
} // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "1/2 o+ 1/3", "--q", "1/2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "11/12\n");
  CHECK(run({"eval", "0 o+ 0", "--q", "3/4"}).out == "0\n");
  CHECK(run({"eval", "qexp(2)", "--q", "1/2"}).out == "4\n");
  CHECK(run({"eval", "dn(1)", "--q", "1/2", "--precision", "6"}).out == "0.81093\n");

  r = run({"eval", "1 o+", "--q", "1/2"});
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "parse error: expected factor"));
  r = run({"eval", "1 o- -2", "--q", "1/2"});
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "eval error"));
}

TEST_CASE("eval rejects float or out-of-range q") {
  CHECK(run({"eval", "1 o+ 1", "--q", "1e-3"}).exit_code == 2);
  CHECK(run({"eval", "1 o+ 1", "--q", "3/2"}).exit_code == 2);
  CHECK(run({"eval", "1 o+ 1", "--q", "0.5"}).out == "5/2\n");
}

TEST_CASE("measure") {
  CHECK(run({"measure", "--q", "1/2", "--set", "[0,1]"}).out == "0.810930216216\n");
  CHECK(run({"measure", "--q", "1/2", "--set", "[-2,3]"}).out == "inf\n");
  CHECK(run({"measure", "--q", "1", "--set", "[0,1],[2,3]"}).out == "2\n");
  auto r = run({"measure", "--q", "1/2", "--set", "[0,1],[-3,-1]"});
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "[-3,-1]"));
  CHECK(run({"measure", "--q", "1/2", "--set", "[0,1"}).exit_code == 2);
}

TEST_CASE("measure as json") {
  auto r = run({"measure", "--q", "1/2", "--set", "[-2,3]", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][0]["measure"] == "inf");
  r = run({"measure", "--q", "1/2", "--set", "[0,1]", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["rows"][0]["measure"].get<double>() == doctest::Approx(0.810930216216));
}

TEST_CASE("translate and scale") {
  auto r = run({"translate", "--q", "1/2", "--set", "[0,1]", "--v", "1", "--format", "csv"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "set,v,translated,measure,translated_measure\n\"[0,1]\",1,\"[1,5/2]\",0.810930216216,0.810930216216\n");
  r = run({"scale", "--q", "1/2", "--set", "[0,1]", "--alpha", "2", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out)["rows"][0];
  CHECK(j["q_prime"] == "0");
  CHECK(j["scaled"] == "[0,2]");
  CHECK(j["mu_q(alpha*A)"].get<double>() == j["alpha*mu_q'(A)"].get<double>());
  CHECK(run({"translate", "--q", "1/2", "--set", "[0,1]", "--v", "-2"}).exit_code == 2);
  CHECK(run({"scale", "--q", "1/2", "--set", "[0,1]", "--alpha", "0"}).exit_code == 2);
}

TEST_CASE("bounds") {
  auto r = run({"bounds", "--q-grid", "1:1:1", "--format", "csv"});
  CHECK(r.out == "q,lower,upper,status\n1,1,5,finite\n");
  r = run({"bounds", "--q-grid", "3/4:3/4:1", "--format", "csv"});
  CHECK(r.out == "q,lower,upper,status\n0.75,0.892574205257,5.011051873981,finite\n");
  r = run({"bounds", "--q-grid", "1/2:1/2:1", "--format", "csv"});
  CHECK(contains(r.out, "0.5,0.810930216216,inf,divergent\n"));
  CHECK(contains(r.out, "# q=1/2"));
  CHECK(contains(r.out, "0.863046217355"));
  CHECK(run({"bounds", "--q-grid", "0.4:1:0.1"}).exit_code == 2);
  CHECK(run({"bounds", "--q-grid", "1/2:1"}).exit_code == 2);
  CHECK(run({"bounds", "--q-grid", "1/2:1:0"}).exit_code == 2);
}

TEST_CASE("bounds json keeps inf as a string") {
  const auto j = nlohmann::json::parse(run({"bounds", "--q-grid", "1/2:1:1/2", "--format", "json"}).out);
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][0]["upper"] == "inf");
  CHECK(j["rows"][1]["upper"].get<double>() == 5.0);
  CHECK(j["notes"].size() == 1);
}

TEST_CASE("enumerate-rationals") {
  CHECK(run({"enumerate-rationals", "--cases", "5", "--format", "csv"}).out ==
        "index,r\n1,0\n2,1\n3,-1\n4,1/2\n5,-1/2\n");
  CHECK(run({"enumerate-rationals", "--cases", "0"}).exit_code == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "vitali", "--cases", "200", "--seed", "42"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0 failed"));
  r = run({"verify", "--suite", "algebra", "--cases", "0"});
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "cases must be ≥ 1"));
  CHECK(run({"verify", "--suite", "nope"}).exit_code == 2);
}

TEST_CASE("verify output is deterministic") {
  const auto a = run({"verify", "--suite", "all", "--cases", "50", "--seed", "7", "--format", "json"});
  const auto b = run({"verify", "--suite", "all", "--cases", "50", "--seed", "7", "--format", "json"});
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["rows"].size() == 24);
}

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"measure", "--set", "[0,1]"}).exit_code == 2); // --q missing
  CHECK(run({"measure", "--q", "1/2", "--set", "[0,1]", "--format", "xml"}).exit_code == 2);
  const auto h = run({"--help"});
  CHECK(h.exit_code == 0);
  CHECK(contains(h.out, "verify"));
  CHECK(contains(run({"verify", "--help"}).out, "--seed"));
}
