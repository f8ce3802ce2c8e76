#include "nlbox/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nlbox/error.hpp"
#include "nlbox/measures.hpp"
#include "nlbox/simplex.hpp"

namespace nlbox {

namespace {

const std::vector<DeterministicStrategy>& lp_vertices() {
  static const std::vector<DeterministicStrategy> v =
      enumerate_deterministic(KindFilter::all_one_bit);
  return v;
}

}  // namespace

CorrelationBox::Table Decomposition::reconstruct() const {
  CorrelationBox::Table t{};
  for (const auto& [s, w] : weights)
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) t[box_index(x, y, s.a(x, y), s.b(x, y))] += w;
  return t;
}

Decomposition min_comm_cost(const CorrelationBox& box, double tol) {
  const auto& vertices = lp_vertices();
  const std::size_t n = vertices.size();

  // Rows 0..15 reproduce the table entries, row 16 normalizes the weights.
  lp::Problem prob{lp::Matrix(17, n), std::vector<double>(17, 0.0),
                   std::vector<double>(n, 0.0)};
  for (std::size_t j = 0; j < n; ++j) {
    const auto& s = vertices[j];
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) prob.a(box_index(x, y, s.a(x, y), s.b(x, y)), j) = 1.0;
    prob.a(16, j) = 1.0;
    prob.c[j] = s.kind() == StrategyKind::local ? 0.0 : 1.0;
  }
  std::copy(box.table().begin(), box.table().end(), prob.b.begin());
  prob.b[16] = 1.0;

  const lp::Solution sol = lp::solve(prob, {.tol = tol});
  switch (sol.status) {
    case lp::Status::optimal: break;
    case lp::Status::infeasible: {
      std::ostringstream msg;
      msg << "box is outside the local + one-way hull (phase-one residual "
          << sol.infeasibility << ")";
      throw InfeasibleError(msg.str());
    }
    case lp::Status::unbounded:
      throw NumericalError("decomposition LP reported an unbounded objective");
    case lp::Status::iteration_limit:
      throw NumericalError("decomposition LP hit the iteration limit");
  }

  Decomposition d;
  for (std::size_t j = 0; j < n; ++j) {
    if (sol.x[j] <= 0.0) continue;
    d.weights.push_back({vertices[j], sol.x[j]});
    if (vertices[j].kind() != StrategyKind::local) d.cost += sol.x[j];
  }

  const auto rebuilt = d.reconstruct();
  double err = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < rebuilt.size(); ++i)
    err = std::max(err, std::abs(rebuilt[i] - box.table()[i]));
  for (const auto& ws : d.weights) total += ws.weight;
  if (err > tol || std::abs(total - 1.0) > tol) {
    std::ostringstream msg;
    msg << "decomposition does not reproduce the box (max error " << err
        << ", weight total " << total << ")";
    throw NumericalError(msg.str());
  }
  d.cost = std::clamp(d.cost, 0.0, 1.0);
  return d;
}

double chsh_cost_bound(const CorrelationBox& box) {
  return std::max(chsh_max(box) / 2.0 - 1.0, 0.0);
}

}  // namespace nlbox
