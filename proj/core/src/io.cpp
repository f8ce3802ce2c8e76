#include "nlbox/io.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nlbox/error.hpp"

namespace nlbox::io {

using nlohmann::json;

namespace {

json nullable(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string fixed(double v, int digits = 12) {
  std::ostringstream out;
  out << std::setprecision(digits) << v;
  return out.str();
}

}  // namespace

LabelledBox parse_box_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("box JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("P"))
    throw FormatError("box JSON must be an object with key \"P\"");

  const json& p = doc["P"];
  CorrelationBox::Table table{};
  auto expect_pair = [](const json& node, const char* what) {
    if (!node.is_array() || node.size() != 2)
      throw FormatError(std::string("box JSON: ") + what + " level must have two entries");
  };
  expect_pair(p, "x");
  for (int x = 0; x < 2; ++x) {
    expect_pair(p[x], "y");
    for (int y = 0; y < 2; ++y) {
      expect_pair(p[x][y], "a");
      for (int a = 0; a < 2; ++a) {
        expect_pair(p[x][y][a], "b");
        for (int b = 0; b < 2; ++b) {
          const json& v = p[x][y][a][b];
          if (!v.is_number()) throw FormatError("box JSON: entries must be numbers");
          table[box_index(x, y, a, b)] = v.get<double>();
        }
      }
    }
  }
  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw FormatError("box JSON: label must be a string");
    label = doc["label"].get<std::string>();
  }
  return {CorrelationBox::from_table(table), label};
}

std::string box_to_json(const CorrelationBox& box, std::string_view label) {
  json p = json::array();
  for (int x = 0; x < 2; ++x) {
    json px = json::array();
    for (int y = 0; y < 2; ++y) {
      json pxy = json::array();
      for (int a = 0; a < 2; ++a) pxy.push_back({box.p(x, y, a, 0), box.p(x, y, a, 1)});
      px.push_back(pxy);
    }
    p.push_back(px);
  }
  json doc{{"P", p}};
  if (!label.empty()) doc["label"] = std::string(label);
  return doc.dump() + "\n";
}

std::string report_to_json(const MeasureReport& r) {
  const json doc{
      {"lambda", r.lambda},
      {"lambda_max", r.lambda_max},
      {"S", r.signal.total},
      {"S_AtoB", r.signal.a_to_b},
      {"S_BtoA", r.signal.b_to_a},
      {"S_AtoB_per_y", r.signal.a_to_b_per_y},
      {"S_BtoA_per_x", r.signal.b_to_a_per_x},
      {"I", r.indeterminacy},
      {"I_per_setting", {{r.indeterminacy_per_setting[0], r.indeterminacy_per_setting[1]},
                         {r.indeterminacy_per_setting[2], r.indeterminacy_per_setting[3]}}},
      {"H_S", r.entropic_signal},
      {"H_I", r.entropic_indeterminacy},
      {"nonsignaling", r.nonsignaling},
  };
  return doc.dump(2) + "\n";
}

std::string report_to_text(const MeasureReport& r) {
  std::ostringstream out;
  out << "lambda      " << fixed(r.lambda) << "\n"
      << "lambda_max  " << fixed(r.lambda_max) << "\n"
      << "S           " << fixed(r.signal.total) << "  (A->B " << fixed(r.signal.a_to_b)
      << ", B->A " << fixed(r.signal.b_to_a) << ")\n"
      << "  A->B per y  " << fixed(r.signal.a_to_b_per_y[0]) << " "
      << fixed(r.signal.a_to_b_per_y[1]) << "\n"
      << "  B->A per x  " << fixed(r.signal.b_to_a_per_x[0]) << " "
      << fixed(r.signal.b_to_a_per_x[1]) << "\n"
      << "I           " << fixed(r.indeterminacy) << "\n"
      << "  per xy      ";
  for (double v : r.indeterminacy_per_setting) out << fixed(v) << " ";
  out << "\n"
      << "H_S         " << fixed(r.entropic_signal) << "\n"
      << "H_I         " << fixed(r.entropic_indeterminacy) << "\n"
      << "nonsignaling " << (r.nonsignaling ? "yes" : "no") << "\n";
  return out.str();
}

std::string report_to_csv(const MeasureReport& r) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "lambda,lambda_max,S,S_AtoB,S_BtoA,I,H_S,H_I,nonsignaling\n"
      << r.lambda << ',' << r.lambda_max << ',' << r.signal.total << ',' << r.signal.a_to_b
      << ',' << r.signal.b_to_a << ',' << r.indeterminacy << ',' << r.entropic_signal << ','
      << r.entropic_indeterminacy << ',' << (r.nonsignaling ? 1 : 0) << "\n";
  return out.str();
}

std::string strategy_label(const DeterministicStrategy& s) {
  if (const auto j = find_in_table1(s)) return strategy_name(*j);
  return s.table_string();
}

std::string decomposition_to_json(const Decomposition& d) {
  json weights = json::array();
  for (const auto& ws : d.weights)
    weights.push_back({{"strategy", strategy_label(ws.strategy)},
                       {"kind", std::string(to_string(ws.strategy.kind()))},
                       {"w", ws.weight}});
  const json doc{{"C", d.cost}, {"weights", weights}};
  return doc.dump(2) + "\n";
}

std::string decomposition_to_text(const Decomposition& d) {
  std::ostringstream out;
  out << "C_min " << fixed(d.cost) << "\n";
  for (const auto& ws : d.weights)
    out << "  " << std::left << std::setw(12) << strategy_label(ws.strategy) << std::setw(15)
        << to_string(ws.strategy.kind()) << fixed(ws.weight) << "\n";
  return out.str();
}

std::string decomposition_to_csv(const Decomposition& d) {
  std::ostringstream out;
  out << std::setprecision(17) << "strategy,kind,w\n";
  for (const auto& ws : d.weights)
    out << '"' << strategy_label(ws.strategy) << "\"," << to_string(ws.strategy.kind()) << ','
        << ws.weight << "\n";
  return out.str();
}

std::string certificate_to_json(const Certificate& c) {
  const json doc{
      {"lambda", c.lambda},
      {"lambda_max", c.lambda_max},
      {"S", c.signal},
      {"I", c.indeterminacy},
      {"C_min", nullable(c.cost_min)},
      {"cert_I_bound", c.cert_bound},
      {"relax_lhs", c.relax_lhs},
      {"relax_rhs", c.relax_rhs},
      {"thm1_slack", nullable(c.thm1_slack)},
      {"H_S", c.entropic_signal},
      {"H_I", c.entropic_indeterminacy},
      {"tol", c.tol},
      {"flags",
       {{"thm1", c.thm1_slack ? json(c.thm1_holds()) : json(nullptr)},
        {"operational_bell", c.operational_bell_holds()},
        {"relaxed_bell", c.relax_holds()},
        {"certified_randomness", c.cert_holds()}}},
  };
  return doc.dump(2) + "\n";
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows, std::uint64_t trials,
                         std::uint64_t seed) {
  std::ostringstream out;
  out << std::setprecision(17) << "angle_rad,estimate,target,stderr,N,seed\n";
  for (const auto& r : rows)
    out << r.angle << ',' << r.estimate << ',' << r.target << ',' << r.stderr_ << ',' << trials
        << ',' << seed << "\n";
  return out.str();
}

std::string sweep_to_json(const std::vector<SweepRow>& rows, std::uint64_t trials,
                          std::uint64_t seed) {
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"angle_rad", r.angle},
                   {"estimate", r.estimate},
                   {"target", r.target},
                   {"stderr", r.stderr_},
                   {"N", trials},
                   {"seed", seed}});
  return json{{"rows", arr}}.dump(2) + "\n";
}

std::string suite_to_json(const SuiteReport& report) {
  json props = json::array();
  for (const auto& p : report.properties) {
    json item{{"name", p.name},
              {"checked", p.checked},
              {"worst_slack", p.worst_slack},
              {"tol", p.tol},
              {"passed", p.passed}};
    if (!p.error.empty()) item["error"] = p.error;
    props.push_back(item);
  }
  return json{{"passed", report.passed()}, {"properties", props}}.dump(2) + "\n";
}

std::string suite_to_text(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& p : report.properties) {
    out << (p.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(40) << p.name
        << " n=" << std::setw(6) << p.checked << " worst slack " << fixed(p.worst_slack, 6);
    if (!p.error.empty()) out << "  error: " << p.error;
    out << "\n";
  }
  out << (report.passed() ? "all properties hold\n" : "some properties FAILED\n");
  return out.str();
}

}  // namespace nlbox::io
