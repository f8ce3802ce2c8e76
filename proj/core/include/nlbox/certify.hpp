#pragma once

#include <optional>
#include <string>

#include "nlbox/box.hpp"
#include "nlbox/resource.hpp"
#include "nlbox/tolerances.hpp"

namespace nlbox {

/// Everything the bound checkers derive from one box. When the box lies
/// outside the local + one-way hull, `cost_min` is empty and the
/// communication-cost checks are skipped.
struct Certificate {
  double lambda = 0.0;
  double lambda_max = 0.0;
  double signal = 0.0;
  double indeterminacy = 0.0;
  std::optional<double> cost_min;
  double cert_bound = 0.0;  // certified indeterminacy bound from (lambda_max, S)
  double relax_lhs = 0.0;   // lambda_max - 2
  double relax_rhs = 0.0;   // 2S + 4I
  std::optional<double> thm1_slack;  // S + 2I - C_min
  double entropic_signal = 0.0;
  double entropic_indeterminacy = 0.0;
  double tol = kLpTol;

  // Flags derived from the reals above and `tol`.
  bool thm1_holds() const;
  bool operational_bell_holds() const;  // lambda_max > 2 implies S + 2I > 0
  bool relax_holds() const;
  bool cert_holds() const;  // I >= cert_bound
};

/// max(lambda/4 - (1 + s)/2, 0). Throws DomainError unless
/// lambda in [-4, 4] and s in [0, 1].
double certified_indeterminacy_bound(double lambda, double s);

struct RelaxedBellCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// lhs = chsh_max - 2, rhs = 2S + 4I, holds iff lhs <= rhs + tol.
RelaxedBellCheck relaxed_bell_check(const CorrelationBox& box,
                                    double tol = kLpTol);

/// Full certificate. LP failures are recorded as an empty cost_min.
Certificate complementarity_report(const CorrelationBox& box,
                                   double tol = kLpTol);

struct EntropicComplementarity {
  double entropic_signal = 0.0;
  double entropic_indeterminacy = 0.0;
  bool holds = false;  // H_S + H_I >= 1 - tol
};

EntropicComplementarity entropic_complementarity(const ResourceSpec& spec,
                                                 double tol = kLpTol);

/// Range of every single-party marginal P(o|x,y) over the face of
/// non-signaling mixtures of the scope's 16 table strategies, found by
/// solving one LP per (setting, party) and direction.
struct MarginalRange {
  double min = 0.0;
  double max = 0.0;
};
MarginalRange nonsignaling_marginal_range(PRScope scope);

/// Whether some non-signaling mixture of the scope's table strategies has
/// indeterminacy at most `target` (< 1/2 means biased marginals).
bool biased_nonsignaling_reachable(PRScope scope, double target);

/// Multi-line human-readable rendering listing each inequality and its slack.
std::string render_text(const Certificate& cert);

}  // namespace nlbox
