#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "tautorder/cli.hpp"

using nlohmann::json;

namespace {

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = tautorder::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  auto r = invoke(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

bool has_raw_number(const json& j) {
  if (j.is_number()) return true;
  if (j.is_structured()) {
    for (const auto& item : j) {
      if (has_raw_number(item)) return true;
    }
  }
  return false;
}

const std::vector<std::vector<std::string>> kCommands{
    {"ng", "3"},         {"ng", "2", "--oracle"}, {"bernoulli", "12"},    {"zeta", "3"},
    {"prop", "2"},       {"bounds", "3"},         {"sp-order", "2", "12"}, {"degree", "2", "3"},
    {"koblitz", "3", "3"}, {"boundary", "6"},     {"hurwitz", "2", "3"},  {"lambda-star", "3"},
    {"relations", "2"},  {"cyclotomic", "3", "2"}, {"pairing", "3", "1"}, {"verify", "newton", "--max-g", "3"},
};

}  // namespace

TEST_CASE("ng in text format") {
  auto r = invoke({"ng", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("value: 504") != std::string::npos);
  CHECK(r.out.find("factorization: 2^3 * 3^2 * 7") != std::string::npos);
}

TEST_CASE("bounds in json format") {
  json j = invoke_json({"bounds", "2"});
  CHECK(j["command"] == "bounds");
  CHECK(j["parameters"]["g"] == "2");
  CHECK(j["result"]["stack_upper_bound"] == "5760");
  CHECK(j["result"]["lower_bound_lambda"] == "120");
  CHECK(j["result"]["r_orders"]["1"] == "12");
}

TEST_CASE("rationals are {num, den} decimal strings") {
  json j = invoke_json({"prop", "2"});
  CHECK(j["result"]["signed_value"] == json{{"num", "-1"}, {"den", "5760"}});
  CHECK(j["result"]["absolute_value"]["den"] == "5760");
  json b = invoke_json({"boundary", "6"});
  CHECK(b["result"]["value"] == json{{"num", "32760"}, {"den", "691"}});
  CHECK(b["result"]["is_integer"] == false);
}

TEST_CASE("json output has no raw numbers, round-trips and is deterministic") {
  for (const auto& args : kCommands) {
    CAPTURE(args[0]);
    json j = invoke_json(args);
    CHECK_FALSE(has_raw_number(j));
    CHECK(json::parse(j.dump()) == j);
    auto again = args;
    again.push_back("--format");
    again.push_back("json");
    CHECK(invoke(again).out == invoke(again).out);
  }
}

TEST_CASE("text and csv carry no floating-point values") {
  for (const auto& args : kCommands) {
    for (const char* format : {"text", "csv"}) {
      auto full = args;
      full.push_back("--format");
      full.push_back(format);
      auto r = invoke(full);
      CAPTURE(args[0]);
      REQUIRE(r.code == 0);
      CHECK_FALSE(std::regex_search(r.out, std::regex(R"(\d\.\d|\de[+-]\d)")));
    }
  }
}

TEST_CASE("csv rows") {
  auto r = invoke({"ng", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("key,value\n", 0) == 0);
  CHECK(r.out.find("result.value,480\n") != std::string::npos);
  CHECK(r.out.find("result.factors[0].prime,2\n") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"ng", "3", "--bogus"}).code == 1);
  CHECK(invoke({"ng", "0"}).code == 1);
  CHECK(invoke({"sp-order", "1", "1"}).code == 1);
  CHECK(invoke({"degree", "1", "2"}).code == 1);
  CHECK(invoke({"koblitz", "2", "4"}).code == 1);
  CHECK(invoke({"hurwitz", "2", "2"}).code == 1);
  CHECK(invoke({"bounds", "2", "--format", "xml"}).code == 1);
  auto r = invoke({"verify", "nonsense"});
  CHECK(r.code == 1);
  CHECK(r.err.find("unknown verify suite") != std::string::npos);
  CHECK(invoke({"verify", "all", "--override-ng", "garbage"}).code == 1);
}

TEST_CASE("verify exit codes") {
  auto ok = invoke({"verify", "chern-lemma", "--max-g", "4"});
  CHECK(ok.code == 0);
  auto bad = invoke({"verify", "oracle-agreement", "--max-g", "3", "--override-ng", "2=480"});
  CHECK(bad.code == 2);
  CHECK(bad.out.find("passed: false") != std::string::npos);
  CHECK(bad.err.find("identity violated") != std::string::npos);
}

TEST_CASE("oracle prime count from the environment") {
  ::setenv("TAUTORDER_PRIME_COUNT", "60", 1);
  json j = invoke_json({"ng", "2", "--oracle"});
  CHECK(j["parameters"]["prime_count"] == "60");
  CHECK(j["result"]["oracle_value"] == "240");
  ::setenv("TAUTORDER_PRIME_COUNT", "2", 1);
  auto r = invoke({"ng", "2", "--oracle", "--window", "2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("increase prime_count") != std::string::npos);
  // An explicit flag wins over the environment.
  CHECK(invoke({"ng", "2", "--oracle", "--prime-count", "100"}).code == 0);
  ::setenv("TAUTORDER_PRIME_COUNT", "many", 1);
  CHECK(invoke({"ng", "2", "--oracle"}).code == 1);
  ::unsetenv("TAUTORDER_PRIME_COUNT");
}

TEST_CASE("help exits 0") {
  auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}
