#include "nlbox/measures.hpp"

#include <algorithm>
#include <cmath>

#include "nlbox/error.hpp"

namespace nlbox {

namespace {

double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

double distance_to_certainty(double p) { return std::clamp(std::min(p, 1.0 - p), 0.0, 0.5); }

// Mutual information between a binary input drawn from `prior` and a binary
// output with P(out = 0 | in = k) = q[k].
double binary_channel_information(std::array<double, 2> q, InputPrior prior) {
  const double w0 = prior.w[0];
  const double w1 = prior.w[1];
  const double out0 = w0 * q[0] + w1 * q[1];
  const double h_out = binary_entropy(out0);
  const double h_cond = w0 * binary_entropy(q[0]) + w1 * binary_entropy(q[1]);
  return std::max(0.0, h_out - h_cond);
}

}  // namespace

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -xlog2x(p) - xlog2x(1.0 - p);
}

double chsh(const CorrelationBox& box) {
  return box.correlator(0, 0) + box.correlator(0, 1) + box.correlator(1, 0) -
         box.correlator(1, 1);
}

double chsh_max(const CorrelationBox& box) {
  const std::array<double, 4> e = {box.correlator(0, 0), box.correlator(0, 1),
                                   box.correlator(1, 0), box.correlator(1, 1)};
  const double total = e[0] + e[1] + e[2] + e[3];
  double best = -4.0;
  for (const double ek : e) {
    const double value = total - 2.0 * ek;
    best = std::max({best, value, -value});
  }
  return best;
}

SignalReport signal(const CorrelationBox& box) {
  SignalReport r;
  for (int y = 0; y < 2; ++y)
    r.a_to_b_per_y[y] = std::abs(box.marginal_b(0, 0, y) - box.marginal_b(0, 1, y));
  for (int x = 0; x < 2; ++x)
    r.b_to_a_per_x[x] = std::abs(box.marginal_a(0, x, 0) - box.marginal_a(0, x, 1));
  r.a_to_b = std::max(r.a_to_b_per_y[0], r.a_to_b_per_y[1]);
  r.b_to_a = std::max(r.b_to_a_per_x[0], r.b_to_a_per_x[1]);
  r.total = std::max(r.a_to_b, r.b_to_a);
  return r;
}

std::array<double, 4> indeterminacy_per_setting(const CorrelationBox& box) {
  std::array<double, 4> out{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      out[static_cast<std::size_t>(2 * x + y)] =
          std::max(distance_to_certainty(box.marginal_a(0, x, y)),
                   distance_to_certainty(box.marginal_b(0, x, y)));
  return out;
}

double indeterminacy(const CorrelationBox& box) {
  const auto per = indeterminacy_per_setting(box);
  return *std::max_element(per.begin(), per.end());
}

double indeterminacy_min_over_parties(const CorrelationBox& box) {
  double best = 0.0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      best = std::max(best, std::min(distance_to_certainty(box.marginal_a(0, x, y)),
                                     distance_to_certainty(box.marginal_b(0, x, y))));
  return best;
}

double entropic_signal(const CorrelationBox& box, InputPrior prior) {
  if (prior.w[0] < 0.0 || prior.w[1] < 0.0 ||
      std::abs(prior.w[0] + prior.w[1] - 1.0) > kStructuralTol)
    throw DomainError("input prior must be a probability distribution");
  double best = 0.0;
  // I(B:X) at fixed y, and I(A:Y) at fixed x.
  for (int y = 0; y < 2; ++y)
    best = std::max(best, binary_channel_information(
                              {box.marginal_b(0, 0, y), box.marginal_b(0, 1, y)}, prior));
  for (int x = 0; x < 2; ++x)
    best = std::max(best, binary_channel_information(
                              {box.marginal_a(0, x, 0), box.marginal_a(0, x, 1)}, prior));
  return best;
}

double entropic_indeterminacy(const CorrelationBox& box) {
  double best = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      best = std::max(best, binary_entropy(box.marginal_a(0, x, y)));
      best = std::max(best, binary_entropy(box.marginal_b(0, x, y)));
    }
  }
  return best;
}

double entropic_signal_lower_bound(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("signal must lie in [0, 1]");
  return 1.0 - binary_entropy((1.0 - s) / 2.0);
}

double two_point_entropic_signal(double p, double s) {
  if (!(s >= 0.0 && p >= 0.0 && p + s <= 1.0 + kStructuralTol))
    throw DomainError("need 0 <= p and p + s <= 1");
  return binary_entropy(p + s / 2.0) - 0.5 * binary_entropy(p) -
         0.5 * binary_entropy(std::min(1.0, p + s));
}

MeasureReport measure(const CorrelationBox& box, InputPrior prior, double tol) {
  MeasureReport r;
  r.lambda = chsh(box);
  r.lambda_max = chsh_max(box);
  r.signal = signal(box);
  r.indeterminacy_per_setting = indeterminacy_per_setting(box);
  r.indeterminacy = indeterminacy(box);
  r.entropic_signal = entropic_signal(box, prior);
  r.entropic_indeterminacy = entropic_indeterminacy(box);
  r.nonsignaling = is_nonsignaling(box, tol);
  return r;
}

}  // namespace nlbox
