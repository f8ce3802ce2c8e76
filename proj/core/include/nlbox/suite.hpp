#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nlbox/strategy.hpp"
#include "nlbox/tolerances.hpp"

namespace nlbox {

/// Randomized property checks over seeded instances.
struct SuiteConfig {
  std::uint64_t seed = 42;
  std::size_t instances = 1000;
  double tol = kLpTol;
  /// Catalog the suite checks resources against. Defaults to table1({}).
  ScopeTable table = table1();
};

/// One line of the summary: `worst_slack` is the smallest
/// (rhs - lhs) seen, so a property passes iff worst_slack >= -tol.
/// Equalities are reported as minus the largest absolute deviation.
struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  double worst_slack = 0.0;
  double tol = kLpTol;
  bool passed = true;
  std::string error;  // set when a check threw instead of producing a value
};

struct SuiteReport {
  std::vector<PropertyResult> properties;
  bool passed() const;
};

SuiteReport run_property_suite(const SuiteConfig& config);

/// Copy of the catalog with S1+ flipped on Bob's output at input 11;
/// used as a negative control.
ScopeTable corrupted_table1();

}  // namespace nlbox
