#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "riesz/cli.hpp"

using riesz::run_cli;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  Json out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "riesz");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  Json doc = out.str().empty() ? Json() : Json::parse(out.str());
  return {code, doc, err.str()};
}

} // namespace

TEST_CASE("energy") {
  auto r = run({"energy", "--s", "2", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out["exact"] == "1/2");
  CHECK(r.out["s"] == 2);
  CHECK(r.out["n"] == 2);
  CHECK(r.out["decimal"] == "0.500000000000000000000000000000");
  CHECK_FALSE(r.out.contains("numeric_check"));

  r = run({"energy", "--s", "-4", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out["exact"] == "32");

  r = run({"energy", "--s", "6", "--n", "7", "--numeric-digits", "40"});
  CHECK(r.code == 0);
  CHECK(r.out["numeric_check"]["value"].get<std::string>().size() > 40);
  CHECK(r.out["numeric_check"]["abs_diff_bound"].get<std::string>().find("e-") !=
        std::string::npos);
}

TEST_CASE("energy key order is stable") {
  // the parsed document sorts keys, so inspect the raw text
  std::vector<const char *> argv = {"riesz", "energy", "--s", "4", "--n", "3"};
  std::ostringstream out, err;
  run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  const std::string text = out.str();
  CHECK(text.find("\"s\"") < text.find("\"n\""));
  CHECK(text.find("\"n\"") < text.find("\"exact\""));
  CHECK(text.find("\"exact\"") < text.find("\"decimal\""));
}

TEST_CASE("energy usage errors") {
  auto r = run({"energy", "--s", "3", "--n", "5"});
  CHECK(r.code == 2);
  CHECK(r.out["error"] == "s must be a nonzero even integer");
  CHECK(r.err.find("s must be a nonzero even integer") != std::string::npos);
  CHECK(run({"energy", "--s", "0", "--n", "5"}).code == 2);
  CHECK(run({"energy", "--s", "2", "--n", "1"}).code == 2);
  CHECK(run({"energy", "--s", "2"}).code == 2);
  CHECK(run({"energy", "--s", "2", "--n", "3", "--numeric-digits", "5"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("coeffs") {
  auto r = run({"coeffs", "--m", "1"});
  CHECK(r.code == 0);
  CHECK(r.out["beta"] == Json::array({"-1/12", "0", "1/12"}));
  CHECK(r.out["methods_agree"] == true);

  r = run({"coeffs", "--m", "2", "--method", "bernoulli"});
  CHECK(r.out["beta"] ==
        Json::array({"-11/720", "0", "1/72", "0", "1/720"}));

  CHECK(run({"coeffs", "--m", "9"}).code == 2);
  CHECK(run({"coeffs", "--m", "0"}).code == 2);
  CHECK(run({"coeffs", "--m", "2", "--method", "guess"}).code == 2);
}

TEST_CASE("modified") {
  auto r = run({"modified", "--m", "1", "--n", "2", "--r", "1/2"});
  CHECK(r.code == 0);
  CHECK(r.out["exact"] == "8/9");
  CHECK(r.out["r"] == "1/2");

  r = run({"modified", "--m", "1", "--n", "3", "--r", "1/2", "--numeric-digits", "30"});
  CHECK(r.code == 0);
  CHECK(r.out["exact"] == "24/7");
  CHECK(r.out.contains("numeric_check"));

  CHECK(run({"modified", "--m", "1", "--n", "3", "--r", "5/4"}).code == 2);
  CHECK(run({"modified", "--m", "1", "--n", "3", "--r", "0"}).code == 2);
  CHECK(run({"modified", "--m", "1", "--n", "3", "--r", "x"}).code == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "prop4", "--max-m", "8"});
  CHECK(r.code == 0);
  CHECK(r.out["passed"] == true);
  REQUIRE(r.out["checks"].size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(r.out["checks"][i]["passed"] == true);
    CHECK(r.out["checks"][i]["id"] == "m=" + std::to_string(i + 1));
  }

  r = run({"verify", "--suite", "appendix", "--seed", "99"});
  CHECK(r.code == 0);
  CHECK(r.out["seed"] == 99);

  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "prop4", "--digits", "3"}).code == 2);
}

TEST_CASE("verify is deterministic for a fixed seed") {
  auto a = run({"verify", "--suite", "appendix", "--seed", "5"});
  auto b = run({"verify", "--suite", "appendix", "--seed", "5"});
  CHECK(a.out == b.out);
}
