#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlbox/box.hpp"

namespace nlbox {

enum class StrategyKind { local, signal_a_to_b, signal_b_to_a, two_way };

std::string_view to_string(StrategyKind kind);

/// Selects one of the eight PR relations
///   a xor b = x*y xor mu1*x xor mu2*y xor mu3.
struct PRScope {
  Bit mu1 = 0;
  Bit mu2 = 0;
  Bit mu3 = 0;

  /// Right-hand side of the scope's relation at input (x, y).
  Bit relation(int x, int y) const {
    return static_cast<Bit>((x & y) ^ (mu1 & x) ^ (mu2 & y) ^ mu3);
  }
  /// mu1*4 + mu2*2 + mu3.
  int index() const { return mu1 * 4 + mu2 * 2 + mu3; }
  static PRScope from_index(int index);

  /// "000" ... "111"; parse throws FormatError.
  std::string to_string() const;
  static PRScope parse(std::string_view text);

  friend bool operator==(const PRScope&, const PRScope&) = default;
};

/// The PR box of the given scope (uniform over pairs satisfying the relation).
CorrelationBox pr_box(PRScope scope);

/// Deterministic box a = fA(x,y), b = fB(x,y). Output tables are indexed by
/// input code 2x+y.
class DeterministicStrategy {
 public:
  using Outputs = std::array<Bit, 4>;

  /// Infers the tightest kind from the dependence structure of the tables.
  static DeterministicStrategy from_outputs(const Outputs& a_out,
                                            const Outputs& b_out);

  /// Checks the declared kind against the tables; throws StrategyError.
  static DeterministicStrategy make(StrategyKind kind, const Outputs& a_out,
                                    const Outputs& b_out);

  /// Parses "ab,ab,ab,ab" for inputs 00,01,10,11, e.g. "00,00,00,01".
  static DeterministicStrategy parse_table(std::string_view text);

  StrategyKind kind() const { return kind_; }
  Bit a(int x, int y) const { return a_out_[static_cast<std::size_t>(2 * x + y)]; }
  Bit b(int x, int y) const { return b_out_[static_cast<std::size_t>(2 * x + y)]; }
  const Outputs& a_outputs() const { return a_out_; }
  const Outputs& b_outputs() const { return b_out_; }

  /// Loosest kind-invariant check: whether the tables are compatible with `k`.
  bool admits(StrategyKind k) const;

  /// "00,00,00,01" style rendering.
  std::string table_string() const;

  friend bool operator==(const DeterministicStrategy& l,
                         const DeterministicStrategy& r) {
    return l.a_out_ == r.a_out_ && l.b_out_ == r.b_out_;
  }

 private:
  DeterministicStrategy(StrategyKind k, const Outputs& a, const Outputs& b)
      : kind_(k), a_out_(a), b_out_(b) {}

  StrategyKind kind_;
  Outputs a_out_;
  Outputs b_out_;
};

/// p(a,b|x,y) = 1 exactly when a = fA(x,y) and b = fB(x,y).
CorrelationBox strategy_box(const DeterministicStrategy& s);

/// Number of columns of the scope table (S1+ ... S8-).
inline constexpr std::size_t kScopeTableSize = 16;
using ScopeTable = std::array<DeterministicStrategy, kScopeTableSize>;

/// Columns of the deterministic table in the scope of the PR box, in the
/// order S1+, S1-, S2+, S2-, ..., S8+, S8-. Scope (0,0,0) is the hard-coded
/// table; other scopes are its image under the canonical relabelling.
/// The first eight entries are one-way, the last eight two-way.
ScopeTable table1(PRScope scope = {});

/// "S1+" ... "S8-" for indices 0..15.
std::string strategy_name(std::size_t index);
/// Inverse of strategy_name; nullopt for anything else.
std::optional<std::size_t> strategy_index(std::string_view name);

/// Index of the scope-(0,0,0) table entry equal to `s`, if any.
std::optional<std::size_t> find_in_table1(const DeterministicStrategy& s);

enum class KindFilter { local, signal_a_to_b, signal_b_to_a, all_one_bit };

/// local: the 16 products f(x), g(y).
/// signal_a_to_b / signal_b_to_a: the 48 strictly one-way strategies of that
/// direction (the 16 local ones that the 4x16 family contains are dropped).
/// all_one_bit: local followed by both strict one-way families (112).
std::vector<DeterministicStrategy> enumerate_deterministic(KindFilter filter);

}  // namespace nlbox
