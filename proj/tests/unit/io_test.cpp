#include <doctest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nlbox/error.hpp"
#include "nlbox/io.hpp"

using namespace nlbox;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("box JSON round trip") {
  const auto pr = CorrelationBox::pr_box();
  const auto text = io::box_to_json(pr, "pr");
  const auto back = io::parse_box_json(text);
  CHECK(back.box == pr);
  CHECK(back.label == "pr");
}

TEST_CASE("bundled box files") {
  const std::string dir = NLBOX_DATA_DIR "/boxes/";
  CHECK(io::parse_box_json(slurp(dir + "pr_box.json")).box == CorrelationBox::pr_box());
  CHECK(io::parse_box_json(slurp(dir + "s5plus.json")).box == strategy_box(table1()[8]));
  CHECK(io::parse_box_json(slurp(dir + "sp_075.json")).box.max_abs_diff(
            genp_resource(ResourceSpec::pair(1, 0.75))) <= 1e-15);
}

TEST_CASE("malformed box JSON is a format error, bad tables an invariant error") {
  CHECK_THROWS_AS(io::parse_box_json("{"), FormatError);
  CHECK_THROWS_AS(io::parse_box_json("[]"), FormatError);
  CHECK_THROWS_AS(io::parse_box_json(R"({"P": [[1, 2], [3, 4]]})"), FormatError);
  CHECK_THROWS_AS(io::parse_box_json(R"({"P": "x"})"), FormatError);

  auto doc = nlohmann::json::parse(io::box_to_json(CorrelationBox::pr_box()));
  doc["P"][0][0][0][0] = 0.7;
  CHECK_THROWS_AS(io::parse_box_json(doc.dump()), BoxInvariantError);
  doc["P"][0][0][0][0] = "0.5";
  CHECK_THROWS_AS(io::parse_box_json(doc.dump()), FormatError);
}

TEST_CASE("measure report JSON keys") {
  const auto doc = nlohmann::json::parse(io::report_to_json(measure(CorrelationBox::pr_box())));
  for (const char* key : {"lambda", "S", "S_AtoB", "S_BtoA", "I", "H_S", "H_I", "S_AtoB_per_y",
                          "S_BtoA_per_x", "I_per_setting", "nonsignaling"})
    CHECK(doc.contains(key));
  CHECK(doc["lambda"] == 4.0);
  CHECK(doc["I"] == 0.5);
}

TEST_CASE("decomposition JSON names table strategies") {
  Decomposition d;
  d.cost = 1.0;
  d.weights = {{table1()[0], 0.5}, {table1()[1], 0.5}};
  const auto doc = nlohmann::json::parse(io::decomposition_to_json(d));
  CHECK(doc["C"] == 1.0);
  CHECK(doc["weights"][0]["strategy"] == "S1+");
  CHECK(doc["weights"][1]["w"] == 0.5);
  CHECK(io::strategy_label(DeterministicStrategy::parse_table("01,01,01,01")) == "01,01,01,01");
}

TEST_CASE("sweep CSV header") {
  const std::vector<SweepRow> rows = {{0.0, 1.0, 1.0, 0.0}};
  const auto csv = io::sweep_to_csv(rows, 10, 42);
  CHECK(csv.rfind("angle_rad,estimate,target,stderr,N,seed\n", 0) == 0);
  CHECK(csv.find(",10,42\n") != std::string::npos);
}
