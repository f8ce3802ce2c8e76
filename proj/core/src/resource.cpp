#include "nlbox/resource.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "nlbox/error.hpp"

namespace nlbox {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_weight(std::string_view text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty())
    throw FormatError("bad weight '" + std::string(text) + "'");
  return value;
}

// Column index of a strategy inside each signed-signal sum, as
// (column, sign) pairs.
struct Term {
  std::size_t column;
  int sign;
};

constexpr std::size_t col(int j, bool minus) {
  return static_cast<std::size_t>((j - 1) * 2 + (minus ? 1 : 0));
}

// s1 = A->B at y=0, s2 = A->B at y=1, s3 = B->A at x=0, s4 = B->A at x=1.
constexpr std::array<std::array<Term, 8>, 4> kSignalTerms = {{
    {{{col(3, false), +1}, {col(6, false), +1}, {col(7, false), +1}, {col(8, false), +1},
      {col(3, true), -1}, {col(6, true), -1}, {col(7, true), -1}, {col(8, true), -1}}},
    {{{col(1, false), +1}, {col(5, true), +1}, {col(6, false), +1}, {col(8, true), +1},
      {col(1, true), -1}, {col(5, false), -1}, {col(6, true), -1}, {col(8, false), -1}}},
    {{{col(4, false), +1}, {col(5, false), +1}, {col(7, false), +1}, {col(8, false), +1},
      {col(4, true), -1}, {col(5, true), -1}, {col(7, true), -1}, {col(8, true), -1}}},
    {{{col(2, false), +1}, {col(5, false), +1}, {col(6, true), +1}, {col(7, true), +1},
      {col(2, true), -1}, {col(5, true), -1}, {col(6, false), -1}, {col(7, false), -1}}},
}};

}  // namespace

ResourceSpec::ResourceSpec(PRScope scope, const Weights& weights)
    : scope_(scope), weights_(weights) {
  double total = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0)
      throw WeightError("resource weights must be non-negative");
    total += w;
  }
  if (std::abs(total - 1.0) > kStructuralTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "resource weights sum to " << total << ", not 1";
    throw WeightError(msg.str());
  }
}

ResourceSpec ResourceSpec::parse(std::string_view text) {
  std::optional<PRScope> scope;
  Weights w{};
  std::array<bool, kScopeTableSize> seen{};
  bool any = false;

  // Clauses are separated by ';' or ','; "scope=xyz" clauses may appear
  // anywhere but must agree.
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find_first_of(";,", pos);
    const std::string_view item =
        trim(text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos));
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    if (item.empty()) continue;

    if (item.starts_with("scope=")) {
      const PRScope s = PRScope::parse(trim(item.substr(6)));
      if (scope && !(*scope == s))
        throw ScopeError("resource mixes scopes " + scope->to_string() + " and " +
                         s.to_string());
      scope = s;
      continue;
    }
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos)
      throw FormatError("expected NAME:WEIGHT, got '" + std::string(item) + "'");
    const std::string_view name = trim(item.substr(0, colon));
    const auto index = strategy_index(name);
    if (!index) throw FormatError("unknown strategy '" + std::string(name) + "'");
    if (seen[*index]) throw FormatError("strategy " + std::string(name) + " listed twice");
    seen[*index] = true;
    w[*index] = parse_weight(trim(item.substr(colon + 1)));
    any = true;
  }
  if (!any) throw FormatError("resource string names no strategies");
  return ResourceSpec(scope.value_or(PRScope{}), w);
}

ResourceSpec ResourceSpec::pair(int j, double p, PRScope scope) {
  if (j < 1 || j > 8) throw DomainError("pair index must be in 1..8");
  if (!(p >= 0.0 && p <= 1.0)) throw WeightError("pair weight must lie in [0, 1]");
  Weights w{};
  w[col(j, false)] = p;
  w[col(j, true)] = 1.0 - p;
  return ResourceSpec(scope, w);
}

double ResourceSpec::one_way_weight() const {
  double total = 0.0;
  for (std::size_t i = 0; i < 8; ++i) total += weights_[i];
  return total;
}

std::string ResourceSpec::to_string() const {
  std::ostringstream out;
  out.precision(17);
  out << "scope=" << scope_.to_string() << ';';
  bool first = true;
  for (std::size_t i = 0; i < kScopeTableSize; ++i) {
    if (weights_[i] == 0.0) continue;
    if (!first) out << ',';
    out << strategy_name(i) << ':' << weights_[i];
    first = false;
  }
  return out.str();
}

CorrelationBox genp_resource(const ResourceSpec& spec) {
  return genp_resource(spec, table1(spec.scope()));
}

CorrelationBox genp_resource(const ResourceSpec& spec, const ScopeTable& table) {
  CorrelationBox::Table t{};
  for (std::size_t j = 0; j < kScopeTableSize; ++j) {
    const double w = spec.weight(j);
    if (w == 0.0) continue;
    const auto& s = table[j];
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) t[box_index(x, y, s.a(x, y), s.b(x, y))] += w;
  }
  return CorrelationBox::from_table(t);
}

SignedSignals signed_signals(const ResourceSpec& spec) {
  return signed_signals(spec.weights());
}

SignedSignals signed_signals(const ResourceSpec::Weights& weights) {
  SignedSignals out;
  for (std::size_t k = 0; k < 4; ++k) {
    double plus = 0.0, minus = 0.0;
    for (const auto& term : kSignalTerms[k])
      (term.sign > 0 ? plus : minus) += weights[term.column];
    out.s[k] = plus - minus;
  }
  return out;
}

std::array<ConditionalBound, 8> conditional_lower_bounds(double cost,
                                                         const SignedSignals& sig) {
  const auto& s = sig.s;
  const double at00 = s[0] + s[1] + s[2] + s[3];
  const double at01 = s[0] + s[1] - s[2] + s[3];
  const double at10 = -s[0] + s[1] + s[2] + s[3];
  const double at11 = -s[0] + s[1] + s[2] - s[3];
  return {{
      {0, 0, 0, 0, (cost + at00) / 2.0},
      {0, 0, 1, 1, (cost - at00) / 2.0},
      {0, 1, 0, 0, (cost + at01) / 2.0},
      {0, 1, 1, 1, (cost - at01) / 2.0},
      {1, 0, 0, 0, (cost + at10) / 2.0},
      {1, 0, 1, 1, (cost - at10) / 2.0},
      {1, 1, 0, 1, (cost + at11) / 2.0},
      {1, 1, 1, 0, (cost - at11) / 2.0},
  }};
}

}  // namespace nlbox
