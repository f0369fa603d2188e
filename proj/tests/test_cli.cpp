#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "alphapart_cli.hpp"

using namespace alphapart;
using namespace alphapart::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

fs::path temp_dir() {
  auto dir = fs::temp_directory_path() / "alphapart_cli_test";
  fs::create_directories(dir);
  return dir;
}

} // namespace

TEST_CASE("alpha parsing") {
  RunConfig c;
  c.alpha_text = "1/2";
  CHECK(params_from_config(c).alpha_rational.has_value());
  c.alpha_text = "0.7";
  CHECK_FALSE(params_from_config(c).alpha_rational.has_value());
  c.alpha_text = "1.2";
  CHECK_THROWS_AS(params_from_config(c), validation_error);
  c.alpha_text = "2/2";
  CHECK_THROWS_AS(params_from_config(c), validation_error);
  c.alpha_text = "abc";
  CHECK_THROWS_AS(params_from_config(c), validation_error);
  c.alpha_text = "0.5x";
  CHECK_THROWS_AS(params_from_config(c), validation_error);
}

TEST_CASE("count command writes the spec rows") {
  RunConfig c;
  c.command = Command::kCount;
  c.alpha_text = "1/2";
  c.n = 3;
  c.format = "csv";
  c.out_path = (temp_dir() / "count3.csv").string();
  REQUIRE(run(c) == 0);
  auto text = slurp(c.out_path);
  CHECK(text.find("n,j,count\n3,1,7\n3,2,15\n3,3,1\n") != std::string::npos);
  CHECK(text.find("# alphapart") == 0); // version + config preamble
}

TEST_CASE("asym command emits exponent 2/3 in json") {
  RunConfig c;
  c.command = Command::kAsym;
  c.alpha_text = "1/2";
  c.n = 10000;
  c.out_path = (temp_dir() / "asym.json").string();
  REQUIRE(run(c) == 0);
  auto doc = nlohmann::json::parse(slurp(c.out_path));
  CHECK(doc["version"] == "0.1.0");
  CHECK(doc["config"]["command"] == "asym");
  CHECK(doc["config"]["alpha"] == "1/2");
  CHECK(doc["result"]["exponent"].get<double>() ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("validation failures exit 2") {
  RunConfig c;
  c.command = Command::kCount;
  c.alpha_text = "1.5";
  c.n = 10;
  c.out_path = (temp_dir() / "never.json").string();
  CHECK(run(c) == 2);
  c.alpha_text = "1/2";
  c.n = 0;
  CHECK(run(c) == 2);
  c.n = 5;
  c.format = "yaml";
  CHECK(run(c) == 2);
}

TEST_CASE("numeric failures exit 3") {
  RunConfig c;
  c.command = Command::kHCheck;
  c.alpha_text = "1/2";
  c.tau_grid = {1e-9}; // truncation cap unreachable
  c.out_path = (temp_dir() / "never2.json").string();
  CHECK(run(c) == 3);
}

TEST_CASE("reruns are byte-identical") {
  RunConfig c;
  c.command = Command::kSample;
  c.alpha_text = "1/2";
  c.n = 25;
  c.target_accepted = 100;
  c.seed = 9;
  c.format = "csv";
  c.out_path = (temp_dir() / "batch.csv").string();
  REQUIRE(run(c) == 0);
  auto first = slurp(c.out_path);
  REQUIRE(run(c) == 0);
  CHECK(first == slurp(c.out_path));
  CHECK(first.find("length\n") != std::string::npos);

  RunConfig v;
  v.command = Command::kVerify;
  v.alpha_text = "2/3";
  v.n_grid = {10, 30};
  v.t_grid = {-1.0, 1.0};
  v.out_path = (temp_dir() / "verify.json").string();
  REQUIRE(run(v) == 0);
  auto a = slurp(v.out_path);
  REQUIRE(run(v) == 0);
  CHECK(a == slurp(v.out_path));
}

TEST_CASE("default output name lands in out_dir and embeds config") {
  RunConfig c;
  c.command = Command::kSaddle;
  c.alpha_text = "0.7";
  c.n = 500;
  c.u = 2.0;
  c.out_dir = temp_dir().string();
  REQUIRE(run(c) == 0);
  const fs::path expected = temp_dir() / "saddle_a0-7_n500.json";
  REQUIRE(fs::exists(expected));
  auto doc = nlohmann::json::parse(slurp(expected));
  CHECK(doc["config"]["u"].get<double>() == 2.0);
  CHECK(doc["result"]["residual"].get<double>() <= 1e-6);
}

TEST_CASE("argv parsing end to end") {
  auto out = (temp_dir() / "argv.json").string();
  const char* argv1[] = {"alphapart", "h-check", "--alpha", "1/2",
                         "--out",     out.c_str()};
  CHECK(main_impl(6, argv1) == 0);
  auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc["result"].size() == 4); // default tau grid
  double final_gap = doc["result"].back()["rel_gap"].get<double>();
  CHECK(final_gap <= 0.02);

  const char* argv2[] = {"alphapart", "count", "--alpha", "1.7", "--n", "3"};
  CHECK(main_impl(6, argv2) == 2);
  const char* argv3[] = {"alphapart", "bogus"};
  CHECK(main_impl(2, argv3) == 2);
}
