#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "nlbox");
  std::ostringstream out, err;
  const int code = nlbox::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string box(const char* name) { return std::string(NLBOX_DATA_DIR "/boxes/") + name; }

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("analyze reference boxes") {
  auto r = run({"analyze", "--box", box("pr_box.json"), "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["lambda"] == 4.0);
  CHECK(doc["S"] == 0.0);
  CHECK(doc["I"] == 0.5);

  r = run({"analyze", "--box", box("local.json"), "--format", "json"});
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["lambda_max"] == 2.0);
  CHECK(doc["S"] == 0.0);
  CHECK(doc["I"] == 0.0);

  r = run({"analyze", "--box", box("sp_075.json"), "--format", "json"});
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["S"].get<double>() == doctest::Approx(0.5));
  CHECK(doc["I"].get<double>() == doctest::Approx(0.25));

  CHECK(run({"analyze", "--box", box("pr_box.json")}).out.find("lambda") != std::string::npos);
}

TEST_CASE("decompose reference boxes") {
  auto r = run({"decompose", "--box", box("pr_box.json"), "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["C"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  r = run({"decompose", "--box", box("local.json"), "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["C"].get<double>() == doctest::Approx(0.0).epsilon(1e-9));
  r = run({"decompose", "--box", box("s5plus.json")});
  CHECK(r.code == 3);
  CHECK(r.out.find("infeasible") != std::string::npos);
}

TEST_CASE("usage and input errors map to exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"analyze", "--box", "/nonexistent/box.json"}).code == 2);
  CHECK(run({"simulate", "--resource", "S1+:1", "--trials", "0", "--angle", "0"}).code == 2);
  CHECK(run({"simulate", "--resource", "S1+:1", "--trials", "10"}).code == 2);
  CHECK(run({"simulate", "--resource", "S1+:0.5", "--trials", "10", "--angle", "0"}).code == 2);
  CHECK(run({"simulate", "--resource", "scope=000;scope=011;S1+:1", "--trials", "10", "--angle", "0"}).code == 5);
  CHECK(run({"sweep", "--resource", "S1+:1", "--trials", "10", "--angles", "0,x"}).code == 2);
  CHECK(run({"verify", "--tol", "-1"}).code == 2);

  const auto bad = temp_file("nlbox_bad_box.json");
  std::ofstream(bad) << R"({"P": [[[[0.6,0],[0,0]],[[1,0],[0,0]]],[[[1,0],[0,0]],[[1,0],[0,0]]]]})";
  CHECK(run({"analyze", "--box", bad.string()}).code == 1);
  std::ofstream(bad) << R"({"P": [1,2,3]})";
  CHECK(run({"analyze", "--box", bad.string()}).code == 2);
  std::filesystem::remove(bad);
}

TEST_CASE("failed commands leave no output file") {
  const auto out = temp_file("nlbox_should_not_exist.csv");
  std::filesystem::remove(out);
  CHECK(run({"simulate", "--resource", "S1+:0.5", "--angle", "0", "--trials", "10", "--out", out.string()}).code == 2);
  CHECK_FALSE(std::filesystem::exists(out));
}

TEST_CASE("simulate and sweep") {
  auto r = run({"simulate", "--resource", "S1+:1", "--trials", "1000000", "--angle", "0"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "angle_rad,estimate,target,stderr,N,seed");
  const double est = std::stod(row.substr(row.find(',') + 1));
  CHECK(std::abs(est - 1.0) <= 3e-3);
  CHECK(r.err.find("max |estimate - target|") != std::string::npos);

  r = run({"simulate", "--resource", "S1+:0.5,S1-:0.5", "--trials", "1000000", "--angle", "1.5707963", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(std::abs(doc["rows"][0]["estimate"].get<double>() - 0.5) <= 3e-3);

  r = run({"sweep", "--resource", "S1+:1", "--trials", "1000", "--angle-grid", "4"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
}

TEST_CASE("same configuration gives byte-identical files") {
  const auto a = temp_file("nlbox_det_a.csv");
  const auto b = temp_file("nlbox_det_b.csv");
  REQUIRE(run({"sweep", "--resource", "S1+:0.3,S2-:0.7", "--trials", "50000", "--seed", "9",
               "--workers", "1", "--out", a.string()}).code == 0);
  REQUIRE(run({"sweep", "--resource", "S1+:0.3,S2-:0.7", "--trials", "50000", "--seed", "9",
               "--workers", "6", "--out", b.string()}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());

  REQUIRE(run({"verify", "--instances", "20", "--format", "json", "--out", a.string()}).code == 0);
  REQUIRE(run({"verify", "--instances", "20", "--format", "json", "--out", b.string()}).code == 0);
  CHECK(slurp(a) == slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--instances", "1"});
  CHECK(r.code == 0);
  r = run({"verify", "--instances", "20", "--corrupt-table"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("certify") {
  const auto r = run({"certify", "--box", box("quantum_chsh.json"), "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["cert_I_bound"].get<double>() == doctest::Approx((std::sqrt(2.0) - 1.0) / 2.0));
  CHECK(doc["flags"]["thm1"] == true);
}
