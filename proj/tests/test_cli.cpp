#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardy/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace hardy::cli;
using nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args)
{
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s)
{
  std::size_t n = 0;
  for (char c : s)
    n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("number formatting uses 17 significant digits")
{
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(std::nan("")) == "null");
}

TEST_CASE("hardy at pi/3")
{
  const auto r = invoke({"hardy", "--theta1", "1.0471976", "--theta2", "1.0471976"});
  REQUIRE(r.status == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["command"] == "hardy");
  CHECK(j["theta1"].get<double>() == doctest::Approx(1.0471976));
  CHECK(j["case"].is_null());
  CHECK(j["p_joint_d"].get<double>() == doctest::Approx(0.0459184).epsilon(1e-6));
  CHECK(j["chain_holds"] == true);
  CHECK(j["degenerate"] == false);
  CHECK(j["p_f_given_g_b"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("hardy at pi/4 is degenerate")
{
  const auto r = invoke({"hardy", "--theta1", "0.7853982", "--theta2", "0.7853982"});
  REQUIRE(r.status == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["p_joint_d"].get<double>() <= 1e-12);
  CHECK(j["degenerate"] == true);
}

TEST_CASE("degrees flag converts to radians and echoes radians")
{
  const auto r = invoke({"hardy", "--theta1", "60", "--theta2", "60", "--degrees"});
  REQUIRE(r.status == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["theta1"].get<double>() == doctest::Approx(std::numbers::pi / 3));
  CHECK(std::abs(j["p_joint_d"].get<double>() - 9.0 / 196.0) <= 1e-12);
}

TEST_CASE("lhv")
{
  const auto r = invoke({"lhv"});
  REQUIRE(r.status == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["lhv_max_case_d"] == 0);
  CHECK(j["contradiction"] == true);
  CHECK(j["constraints"]["forbid_joint_a"] == true);
  CHECK(j["satisfying_strategies"].size() > 0);
  CHECK(j["summary"].get<std::string>().find("no local hidden-variable model") != std::string::npos);
  for (const auto& s : j["satisfying_strategies"])
    CHECK_FALSE((s["f_at_tau_prime"] == true && s["g_at_tau_prime"] == true));
}

TEST_CASE("simulate")
{
  const auto r = invoke({"simulate", "--case", "A"});
  REQUIRE(r.status == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["case"] == "A");
  CHECK(j["norm_sq"].get<double>() == doctest::Approx(1.0));
  CHECK(j["amplitudes"].size() == 9);  // 10 two-photon basis states minus the cancelled f-g term
  for (const auto& t : j["amplitudes"]) {
    CHECK(t["occupation"].size() == 4);
    CHECK(t.contains("re"));
    CHECK(t.contains("im"));
  }
  CHECK(j["events"]["F_bar_and_G_bar"].get<double>() <= 1e-12);

  const auto csv = invoke({"simulate", "--case", "D", "--format", "csv"});
  REQUIRE(csv.status == kExitOk);
  CHECK(csv.out.rfind("n_g,n_e,n_f,n_h,re,im,coincidence\r\n", 0) == 0);
}

TEST_CASE("sweep csv")
{
  const auto r = invoke({"sweep", "--resolution", "5", "--jobs", "2", "--verify-chain", "all"});
  REQUIRE(r.status == kExitOk);
  CHECK(r.out.rfind("theta1,theta2,P,chain_ok\r\n", 0) == 0);
  CHECK(count_lines(r.out) == 26);
  CHECK(r.out.find(",false") == std::string::npos);

  const auto sampled = invoke({"sweep", "--resolution", "5"});
  std::istringstream lines(sampled.out);
  std::string line;
  std::getline(lines, line);
  std::getline(lines, line);
  CHECK(line.find(",true") != std::string::npos);
  std::getline(lines, line);
  CHECK(line.back() == '\r');
  CHECK(line.substr(line.size() - 2) == ",\r");  // unchecked point
}

TEST_CASE("sweep json")
{
  const auto r = invoke({"sweep", "--resolution", "4", "--format", "json", "--verify-chain", "none"});
  REQUIRE(r.status == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["points"].size() == 16);
  CHECK(j["points"][0]["chain_ok"].is_null());
  CHECK(j["theta1"].is_null());
}

TEST_CASE("optimize")
{
  const auto r = invoke({"optimize", "--resolution", "32", "--tolerance", "1e-10"});
  REQUIRE(r.status == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["p_star"].get<double>() == doctest::Approx(0.0515668).epsilon(1e-5));
  CHECK(j["grid_resolution"] == 32);
}

TEST_CASE("identical invocations give identical bytes")
{
  const std::vector<std::string> args{"hardy", "--theta1", "0.3", "--theta2", "1.1"};
  CHECK(invoke(args).out == invoke(args).out);
  const std::vector<std::string> opt{"optimize", "--resolution", "16"};
  CHECK(invoke(opt).out == invoke(opt).out);
}

TEST_CASE("output file")
{
  const std::string path = "test_cli_output.json";
  const auto r = invoke({"hardy", "--output", path});
  REQUIRE(r.status == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto j = json::parse(in);
  CHECK(j["chain_holds"] == true);
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2 with one diagnostic line")
{
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"bogus"},
           {},
           {"hardy", "--theta1", "abc"},
           {"hardy", "--format", "csv"},
           {"hardy", "--theta1", "inf"},
           {"sweep", "--resolution", "1"},
           {"simulate", "--case", "E"}}) {
    const auto r = invoke(args);
    CHECK(r.status == kExitUsage);
    CHECK(count_lines(r.err) == 1);
    CHECK(r.out.empty());
  }
}

TEST_CASE("null conditioning event exits 3")
{
  const auto r = invoke({"hardy", "--theta1", "1.5707963267948966", "--theta2", "1.5707963267948966"});
  CHECK(r.status == kExitUndefined);
  const auto j = json::parse(r.out);
  CHECK(j["undefined_conditional"] == true);

  const auto zero = invoke({"hardy", "--theta1", "0", "--theta2", "1.5707963267948966"});
  CHECK(zero.status == kExitUndefined);
}
