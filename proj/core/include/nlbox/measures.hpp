#pragma once

#include <array>

#include "nlbox/box.hpp"

namespace nlbox {

/// Directed signals. Per-setting values are |P(b|0,y) - P(b|1,y)| and
/// |P(a|x,0) - P(a|x,1)|; for binary outcomes the difference is the same for
/// either outcome value.
struct SignalReport {
  std::array<double, 2> a_to_b_per_y{};
  std::array<double, 2> b_to_a_per_x{};
  double a_to_b = 0.0;
  double b_to_a = 0.0;
  double total = 0.0;  // max(a_to_b, b_to_a)
};

struct MeasureReport {
  double lambda = 0.0;      // fixed-form CHSH value
  double lambda_max = 0.0;  // max over the 8 CHSH variants
  SignalReport signal;
  double indeterminacy = 0.0;
  std::array<double, 4> indeterminacy_per_setting{};  // index 2x+y
  double entropic_signal = 0.0;
  double entropic_indeterminacy = 0.0;
  bool nonsignaling = false;
};

/// Distribution of the signalling party's input, w[0] = P(input = 0).
struct InputPrior {
  std::array<double, 2> w{0.5, 0.5};
};

/// E(0,0) + E(0,1) + E(1,0) - E(1,1).
double chsh(const CorrelationBox& box);

/// Max over the eight CHSH expressions (position of the minus sign times an
/// overall sign).
double chsh_max(const CorrelationBox& box);

SignalReport signal(const CorrelationBox& box);

/// Per setting (index 2x+y), the larger of the two parties' distances to a
/// certain outcome, min(P(o|x,y), 1 - P(o|x,y)).
std::array<double, 4> indeterminacy_per_setting(const CorrelationBox& box);

/// Sup over settings of indeterminacy_per_setting. Lies in [0, 1/2], and
/// binary_entropy(indeterminacy(box)) == entropic_indeterminacy(box).
double indeterminacy(const CorrelationBox& box);

/// Variant taking, per setting, the min over all four marginal events
/// {a=0, a=1, b=0, b=1} (the more predictable party) before the sup over
/// settings. S + 2I >= C fails for this variant on some signaling boxes; it
/// is kept for comparison only.
double indeterminacy_min_over_parties(const CorrelationBox& box);

/// max{ sup_x I(A:Y), sup_y I(B:X) } in bits, with the remote input drawn
/// from `prior`.
double entropic_signal(const CorrelationBox& box, InputPrior prior = {});

/// Sup over settings and parties of the Shannon entropy of the marginal.
double entropic_indeterminacy(const CorrelationBox& box);

/// 1 - H((1 - s) / 2). Throws DomainError unless s is in [0, 1].
double entropic_signal_lower_bound(double s);

/// Mutual information of a binary channel with uniform input whose output
/// probability moves from p to p + s when the input toggles:
/// H(p + s/2) - H(p)/2 - H(p + s)/2.
double two_point_entropic_signal(double p, double s);

/// -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0.
double binary_entropy(double p);

/// Every measure at once, plus the no-signaling verdict at `tol`.
MeasureReport measure(const CorrelationBox& box, InputPrior prior = {},
                      double tol = kStructuralTol);

}  // namespace nlbox
