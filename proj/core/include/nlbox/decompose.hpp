#pragma once

#include <span>
#include <vector>

#include "nlbox/box.hpp"
#include "nlbox/strategy.hpp"
#include "nlbox/tolerances.hpp"

namespace nlbox {

struct WeightedStrategy {
  DeterministicStrategy strategy;
  double weight = 0.0;
};

/// P = C * S1 + (1 - C) * S0 with S1 a mixture of one-way strategies and S0 a
/// mixture of local ones. Only strictly positive weights are kept.
struct Decomposition {
  std::vector<WeightedStrategy> weights;
  double cost = 0.0;  // total weight on non-local vertices

  /// Recombines the vertices (without renormalization).
  CorrelationBox::Table reconstruct() const;
};

/// Minimum one-way weight over all decompositions of `box` into the 112
/// local and one-way deterministic vertices, by linear programming.
/// Throws InfeasibleError outside that hull and NumericalError if the optimum
/// cannot be certified at `tol`.
Decomposition min_comm_cost(const CorrelationBox& box, double tol = kLpTol);

/// max(chsh_max(box)/2 - 1, 0).
double chsh_cost_bound(const CorrelationBox& box);

}  // namespace nlbox
