#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nlbox/box.hpp"
#include "nlbox/certify.hpp"
#include "nlbox/decompose.hpp"
#include "nlbox/measures.hpp"
#include "nlbox/simulate.hpp"
#include "nlbox/suite.hpp"

namespace nlbox::io {

struct LabelledBox {
  CorrelationBox box;
  std::string label;
};

/// Parses {"P": [x][y][a][b], "label": "..."}. Shape or type problems throw
/// FormatError; probability-table violations throw BoxInvariantError.
LabelledBox parse_box_json(std::string_view text);
std::string box_to_json(const CorrelationBox& box, std::string_view label = {});

std::string report_to_json(const MeasureReport& report);
std::string report_to_text(const MeasureReport& report);
std::string report_to_csv(const MeasureReport& report);

/// {"C": ..., "weights": [{"strategy": name-or-table, "w": ...}]}. Strategies
/// of the scope-000 table are named S1+ ... S8-, others are written as their
/// output table.
std::string decomposition_to_json(const Decomposition& d);
std::string decomposition_to_text(const Decomposition& d);
std::string decomposition_to_csv(const Decomposition& d);
std::string strategy_label(const DeterministicStrategy& s);

std::string certificate_to_json(const Certificate& c);

/// Header angle_rad,estimate,target,stderr,N,seed.
std::string sweep_to_csv(const std::vector<SweepRow>& rows,
                         std::uint64_t trials, std::uint64_t seed);
std::string sweep_to_json(const std::vector<SweepRow>& rows,
                          std::uint64_t trials, std::uint64_t seed);

std::string suite_to_json(const SuiteReport& report);
std::string suite_to_text(const SuiteReport& report);

}  // namespace nlbox::io
