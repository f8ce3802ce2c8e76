#pragma once

#include <array>
#include <string>
#include <string_view>

#include "nlbox/box.hpp"
#include "nlbox/strategy.hpp"

namespace nlbox {

/// Mixture of the 16 scope-table strategies of a single PR scope.
/// Weights are indexed like table1(): S1+, S1-, ..., S8+, S8-.
class ResourceSpec {
 public:
  using Weights = std::array<double, kScopeTableSize>;

  /// Throws WeightError on negative weights or a sum off 1 by more than 1e-12.
  ResourceSpec(PRScope scope, const Weights& weights);

  /// "S1+:0.75,S1-:0.25" or "scope=000;S1+:0.75,S1-:0.25". Several
  /// "scope=" clauses naming different scopes throw ScopeError; other
  /// syntax problems throw FormatError; bad weights throw WeightError.
  static ResourceSpec parse(std::string_view text);

  /// Single pair p*Sj+ + (1-p)*Sj-, j in 1..8.
  static ResourceSpec pair(int j, double p, PRScope scope = {});

  PRScope scope() const { return scope_; }
  const Weights& weights() const { return weights_; }
  double weight(std::size_t index) const { return weights_[index]; }

  /// Total weight on S1..S4 (one-way columns).
  double one_way_weight() const;

  /// Canonical string form, zero weights omitted.
  std::string to_string() const;

 private:
  PRScope scope_;
  Weights weights_;
};

/// The four signed signals s1..s4 (A->B at y=0, A->B at y=1, B->A at x=0,
/// B->A at x=1) as alternating sums of the table weights.
struct SignedSignals {
  std::array<double, 4> s{};
  double sum() const { return s[0] + s[1] + s[2] + s[3]; }
};

/// Mixture of the scope's table strategies.
CorrelationBox genp_resource(const ResourceSpec& spec);
/// Same, drawing columns from an explicit table (the verification suite
/// uses this to inject a corrupted catalog).
CorrelationBox genp_resource(const ResourceSpec& spec, const ScopeTable& table);

SignedSignals signed_signals(const ResourceSpec& spec);
/// Signed signals of an arbitrary weight vector over the table columns (the
/// weights need not sum to one).
SignedSignals signed_signals(const ResourceSpec::Weights& weights);

/// Lower bound on one conditional probability P(ab|xy).
struct ConditionalBound {
  int x = 0, y = 0, a = 0, b = 0;
  double bound = 0.0;
};

/// The eight bounds P(00|00), P(11|00), P(00|01), P(11|01), P(00|10),
/// P(11|10), P(01|11), P(10|11) >= (cost +- combination of s_k)/2 that hold
/// for a scope-(0,0,0) resource of total weight `cost` mixed with local
/// strategies; `s` are the signed signals of the weighted (unnormalized)
/// resource part.
std::array<ConditionalBound, 8> conditional_lower_bounds(double cost,
                                                         const SignedSignals& s);

}  // namespace nlbox
