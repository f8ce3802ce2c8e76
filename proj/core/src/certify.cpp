#include "nlbox/certify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nlbox/decompose.hpp"
#include "nlbox/error.hpp"
#include "nlbox/measures.hpp"
#include "nlbox/simplex.hpp"

namespace nlbox {

bool Certificate::thm1_holds() const { return thm1_slack && *thm1_slack >= -tol; }

bool Certificate::operational_bell_holds() const {
  return !(lambda_max > 2.0 + tol) || signal + 2.0 * indeterminacy > 0.0;
}

bool Certificate::relax_holds() const { return relax_lhs <= relax_rhs + tol; }

bool Certificate::cert_holds() const { return indeterminacy >= cert_bound - tol; }

double certified_indeterminacy_bound(double lambda, double s) {
  if (!(lambda >= -4.0 - kStructuralTol && lambda <= 4.0 + kStructuralTol))
    throw DomainError("CHSH value must lie in [-4, 4]");
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("signal must lie in [0, 1]");
  return std::max(lambda / 4.0 - (1.0 + s) / 2.0, 0.0);
}

RelaxedBellCheck relaxed_bell_check(const CorrelationBox& box, double tol) {
  RelaxedBellCheck out;
  out.lhs = chsh_max(box) - 2.0;
  out.rhs = 2.0 * signal(box).total + 4.0 * indeterminacy(box);
  out.holds = out.lhs <= out.rhs + tol;
  return out;
}

Certificate complementarity_report(const CorrelationBox& box, double tol) {
  Certificate c;
  c.tol = tol;
  c.lambda = chsh(box);
  c.lambda_max = chsh_max(box);
  c.signal = signal(box).total;
  c.indeterminacy = indeterminacy(box);
  c.entropic_signal = entropic_signal(box);
  c.entropic_indeterminacy = entropic_indeterminacy(box);
  c.cert_bound = certified_indeterminacy_bound(std::clamp(c.lambda_max, -4.0, 4.0),
                                               std::clamp(c.signal, 0.0, 1.0));
  const auto relax = relaxed_bell_check(box, tol);
  c.relax_lhs = relax.lhs;
  c.relax_rhs = relax.rhs;
  try {
    c.cost_min = min_comm_cost(box, tol).cost;
    c.thm1_slack = c.signal + 2.0 * c.indeterminacy - *c.cost_min;
  } catch (const InfeasibleError&) {
  } catch (const NumericalError&) {
  }
  return c;
}

EntropicComplementarity entropic_complementarity(const ResourceSpec& spec, double tol) {
  const CorrelationBox box = genp_resource(spec);
  EntropicComplementarity out;
  out.entropic_signal = entropic_signal(box);
  out.entropic_indeterminacy = entropic_indeterminacy(box);
  out.holds = out.entropic_signal + out.entropic_indeterminacy >= 1.0 - tol;
  return out;
}

namespace {

// LP over the 16 table weights (plus `extra` slack columns) with the
// normalization row and the four per-setting no-signaling rows.
lp::Problem nonsignaling_face(const ScopeTable& table, std::size_t extra_rows,
                              std::size_t extra_cols) {
  const std::size_t n = kScopeTableSize + extra_cols;
  lp::Problem p{lp::Matrix(5 + extra_rows, n), std::vector<double>(5 + extra_rows, 0.0),
                std::vector<double>(n, 0.0)};
  for (std::size_t j = 0; j < kScopeTableSize; ++j) {
    const auto& s = table[j];
    p.a(0, j) = 1.0;
    p.a(1, j) = s.b(1, 0) - s.b(0, 0);
    p.a(2, j) = s.b(1, 1) - s.b(0, 1);
    p.a(3, j) = s.a(0, 1) - s.a(0, 0);
    p.a(4, j) = s.a(1, 1) - s.a(1, 0);
  }
  p.b[0] = 1.0;
  return p;
}

// P(o = 1 | x, y) for party 0 (Alice) or 1 (Bob), under strategy s.
double outcome_one(const DeterministicStrategy& s, int party, int x, int y) {
  return party == 0 ? s.a(x, y) : s.b(x, y);
}

}  // namespace

MarginalRange nonsignaling_marginal_range(PRScope scope) {
  const ScopeTable table = table1(scope);
  MarginalRange range{1.0, 0.0};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int party = 0; party < 2; ++party) {
        for (double sense : {1.0, -1.0}) {
          lp::Problem p = nonsignaling_face(table, 0, 0);
          for (std::size_t j = 0; j < kScopeTableSize; ++j)
            p.c[j] = sense * outcome_one(table[j], party, x, y);
          const auto sol = lp::solve(p);
          if (sol.status != lp::Status::optimal)
            throw NumericalError("marginal range LP did not reach an optimum");
          const double value = sense * sol.objective;
          range.min = std::min(range.min, value);
          range.max = std::max(range.max, value);
        }
      }
    }
  }
  return range;
}

bool biased_nonsignaling_reachable(PRScope scope, double target) {
  if (!(target >= 0.0 && target <= 0.5)) throw DomainError("target must lie in [0, 1/2]");
  const ScopeTable table = table1(scope);
  // Each setting needs one marginal within `target` of certainty: pick, per
  // setting, the party and the side (outcome 1 rare or outcome 1 likely).
  for (int choice = 0; choice < 256; ++choice) {
    lp::Problem p = nonsignaling_face(table, 4, 4);
    for (int setting = 0; setting < 4; ++setting) {
      const int bits = (choice >> (2 * setting)) & 3;
      const int party = bits & 1;
      const bool likely = (bits >> 1) & 1;
      const int x = setting >> 1, y = setting & 1;
      const std::size_t row = 5 + static_cast<std::size_t>(setting);
      for (std::size_t j = 0; j < kScopeTableSize; ++j)
        p.a(row, j) = outcome_one(table[j], party, x, y);
      // P(1) + slack = target, or P(1) - slack = 1 - target.
      p.a(row, kScopeTableSize + static_cast<std::size_t>(setting)) = likely ? -1.0 : 1.0;
      p.b[row] = likely ? 1.0 - target : target;
    }
    const auto sol = lp::solve(p);
    if (sol.status == lp::Status::optimal) return true;
  }
  return false;
}

std::string render_text(const Certificate& c) {
  std::ostringstream out;
  out.precision(12);
  out << "lambda            " << c.lambda << "\n"
      << "lambda_max        " << c.lambda_max << "\n"
      << "S                 " << c.signal << "\n"
      << "I                 " << c.indeterminacy << "\n"
      << "H_S               " << c.entropic_signal << "\n"
      << "H_I               " << c.entropic_indeterminacy << "\n";
  if (c.cost_min)
    out << "C_min             " << *c.cost_min << "\n";
  else
    out << "C_min           infeasible (outside the local + one-way hull)\n";
  auto verdict = [](bool ok) { return ok ? "holds" : "VIOLATED"; };
  if (c.thm1_slack)
    out << "S + 2I >= C       " << verdict(c.thm1_holds()) << "  slack " << *c.thm1_slack << "\n";
  out << "S + 2I > 0        " << verdict(c.operational_bell_holds()) << "  value "
      << c.signal + 2.0 * c.indeterminacy << "\n"
      << "L - 2 <= 2S + 4I  " << verdict(c.relax_holds()) << "  slack " << c.relax_rhs - c.relax_lhs
      << "\n"
      << "I >= L/4-(1+S)/2  " << verdict(c.cert_holds()) << "  slack "
      << c.indeterminacy - c.cert_bound << "\n"
      << "note: bounds are evaluated on the exact table; finite-sample confidence is not modelled\n";
  return out.str();
}

}  // namespace nlbox
