#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "nlbox/tolerances.hpp"

namespace nlbox {

using Bit = std::uint8_t;

/// Flat index of p(a,b|x,y) in the canonical (x, y, a, b) storage order.
constexpr std::size_t box_index(int x, int y, int a, int b) {
  return static_cast<std::size_t>(((x * 2 + y) * 2 + a) * 2 + b);
}

/// Two-input / two-output conditional distribution P(a,b|x,y).
///
/// Immutable once built. Every instance satisfies, per setting (x,y),
/// sum_{a,b} p(a,b|x,y) = 1 within kStructuralTol and p >= 0.
class CorrelationBox {
 public:
  using Table = std::array<double, 16>;

  /// Validates and wraps a table in (x, y, a, b) order.
  /// Throws BoxInvariantError on a negative or non-finite entry or a
  /// setting whose row does not normalize within `tol`.
  static CorrelationBox from_table(const Table& table,
                                   double tol = kStructuralTol);

  /// The box with p(a,b|x,y) = 1/2 whenever a xor b = x*y, else 0.
  static CorrelationBox pr_box();

  /// Box with uniform marginals and correlators E(x,y) = corr[2x+y].
  /// Throws DomainError if some |E| > 1.
  static CorrelationBox from_correlators(const std::array<double, 4>& corr);

  double p(int x, int y, int a, int b) const {
    return table_[box_index(x, y, a, b)];
  }
  const Table& table() const { return table_; }

  /// P(a|x,y) and P(b|x,y).
  double marginal_a(int a, int x, int y) const;
  double marginal_b(int b, int x, int y) const;

  /// E(x,y) = P(a=b|x,y) - P(a!=b|x,y).
  double correlator(int x, int y) const;

  /// Largest entrywise absolute difference.
  double max_abs_diff(const CorrelationBox& other) const;

  friend bool operator==(const CorrelationBox&, const CorrelationBox&) = default;

 private:
  explicit CorrelationBox(const Table& t) : table_(t) {}
  Table table_{};
};

/// Entrywise convex combination. Throws WeightError if sizes differ, any
/// weight is negative, or the weights do not sum to 1 within 1e-12.
CorrelationBox mix(std::span<const double> weights,
                   std::span<const CorrelationBox> boxes);

/// True iff both no-signaling marginal families agree within `tol`.
bool is_nonsignaling(const CorrelationBox& box, double tol = kStructuralTol);

/// Short textual dump, one setting per line.
std::string to_string(const CorrelationBox& box);

}  // namespace nlbox
