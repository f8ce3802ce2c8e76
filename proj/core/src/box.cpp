#include "nlbox/box.hpp"

#include <cmath>
#include <sstream>

#include "nlbox/error.hpp"

namespace nlbox {

CorrelationBox CorrelationBox::from_table(const Table& table, double tol) {
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      double sum = 0.0;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const double v = table[box_index(x, y, a, b)];
          if (!std::isfinite(v) || v < 0.0) {
            std::ostringstream msg;
            msg << "p(" << a << b << "|" << x << y << ") = " << v
                << " is not a probability";
            throw BoxInvariantError(msg.str());
          }
          sum += v;
        }
      }
      if (std::abs(sum - 1.0) > tol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "setting (" << x << "," << y << ") sums to " << sum;
        throw BoxInvariantError(msg.str());
      }
    }
  }
  return CorrelationBox(table);
}

CorrelationBox CorrelationBox::pr_box() {
  Table t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          t[box_index(x, y, a, b)] = ((a ^ b) == (x & y)) ? 0.5 : 0.0;
  return CorrelationBox(t);
}

CorrelationBox CorrelationBox::from_correlators(
    const std::array<double, 4>& corr) {
  Table t{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const double e = corr[static_cast<std::size_t>(2 * x + y)];
      if (!(std::abs(e) <= 1.0)) throw DomainError("correlator outside [-1, 1]");
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          t[box_index(x, y, a, b)] = (a == b ? 1.0 + e : 1.0 - e) / 4.0;
    }
  }
  return from_table(t);
}

double CorrelationBox::marginal_a(int a, int x, int y) const {
  return p(x, y, a, 0) + p(x, y, a, 1);
}

double CorrelationBox::marginal_b(int b, int x, int y) const {
  return p(x, y, 0, b) + p(x, y, 1, b);
}

double CorrelationBox::correlator(int x, int y) const {
  return (p(x, y, 0, 0) + p(x, y, 1, 1)) - (p(x, y, 0, 1) + p(x, y, 1, 0));
}

double CorrelationBox::max_abs_diff(const CorrelationBox& other) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < table_.size(); ++i)
    worst = std::max(worst, std::abs(table_[i] - other.table_[i]));
  return worst;
}

CorrelationBox mix(std::span<const double> weights,
                   std::span<const CorrelationBox> boxes) {
  if (weights.size() != boxes.size() || weights.empty())
    throw WeightError("mix: weights and boxes differ in length");
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw WeightError("mix: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > kStructuralTol)
    throw WeightError("mix: weights do not sum to 1");

  CorrelationBox::Table t{};
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    if (weights[k] == 0.0) continue;
    const auto& src = boxes[k].table();
    for (std::size_t i = 0; i < t.size(); ++i) t[i] += weights[k] * src[i];
  }
  return CorrelationBox::from_table(t);
}

bool is_nonsignaling(const CorrelationBox& box, double tol) {
  for (int x = 0; x < 2; ++x)
    if (std::abs(box.marginal_a(0, x, 0) - box.marginal_a(0, x, 1)) > tol)
      return false;
  for (int y = 0; y < 2; ++y)
    if (std::abs(box.marginal_b(0, 0, y) - box.marginal_b(0, 1, y)) > tol)
      return false;
  return true;
}

std::string to_string(const CorrelationBox& box) {
  std::ostringstream out;
  out << "xy | p(00) p(01) p(10) p(11)\n";
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      out << x << y << " |";
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) out << ' ' << box.p(x, y, a, b);
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace nlbox
