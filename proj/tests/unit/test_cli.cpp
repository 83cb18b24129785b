#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ratfield/cli/run.hpp"
#include "support/fixtures.hpp"

using namespace ratfield;
using namespace ratfield::testing;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "ratfield");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = std::string(RATFIELD_BINARY_DIR) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("command line runs") {
  auto ex = call({"--input", fixture_path("power_sums_2.txt")});
  CHECK(ex.code == 0);
  CHECK(ex.out == "x1 + x2\nx1*x2\n");

  auto seir = call({"--input", fixture_path("seir34.txt")});
  CHECK(seir.code == 0);
  CHECK(lines(seir.out) == 6);

  auto js = call({"--input", fixture_path("sir6.txt"), "--format", "json", "--seed", "3"});
  REQUIRE(js.code == 0);
  auto j = nlohmann::json::parse(js.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["seed"] == 3);
  CHECK(j["verified"] == true);
  CHECK(j["output"].size() == 3);

  std::string report = std::string(RATFIELD_BINARY_DIR) + "/cli_report.json";
  auto withreport = call({"--input", fixture_path("sir6.txt"), "--seed", "3", "--report", report});
  CHECK(withreport.code == 0);
  std::ifstream in(report);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == js.out);
}

TEST_CASE("command line errors") {
  CHECK(call({"--input", fixture_path("power_sums_2.txt"), "--delta", "0"}).code == 2);
  CHECK(call({"--input", fixture_path("power_sums_2.txt"), "--epsilon", "2"}).code == 2);
  CHECK(call({"--input", fixture_path("power_sums_2.txt"), "--order", "elim"}).code == 2);
  CHECK(call({"--input", fixture_path("power_sums_2.txt"), "--var-order", "x1"}).code == 2);
  CHECK(call({"--input", "/nonexistent/problem.txt"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"--help"}).code == 0);

  auto bad = call({"--input", temp_file("bad_problem.txt", "vars: x\nx +\n")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find(":2:") != std::string::npos);
  CHECK(bad.out.empty());

  auto zero = call({"--input", temp_file("zero_problem.txt", "vars: x, y\nx/(y - y)\n")});
  CHECK(zero.code == 2);

  CHECK(call({"--input", fixture_path("seir34.txt"), "--eval-cap", "10"}).code == 3);
}
