#include "nlbox/strategy.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "nlbox/error.hpp"
#include "nlbox/relabel.hpp"

namespace nlbox {

namespace {

using Outputs = DeterministicStrategy::Outputs;

// Output pairs "ab" for inputs 00, 01, 10, 11 of each column, scope (0,0,0).
constexpr std::array<std::array<const char*, 4>, kScopeTableSize> kTable = {{
    {"00", "00", "00", "01"},  // S1+
    {"11", "11", "11", "10"},  // S1-
    {"00", "00", "00", "10"},  // S2+
    {"11", "11", "11", "01"},  // S2-
    {"00", "00", "11", "10"},  // S3+
    {"11", "11", "00", "01"},  // S3-
    {"00", "11", "00", "01"},  // S4+
    {"11", "00", "11", "10"},  // S4-
    {"00", "11", "00", "10"},  // S5+
    {"11", "00", "11", "01"},  // S5-
    {"00", "00", "11", "01"},  // S6+
    {"11", "11", "00", "10"},  // S6-
    {"00", "11", "11", "01"},  // S7+
    {"11", "00", "00", "10"},  // S7-
    {"00", "11", "11", "10"},  // S8+
    {"11", "00", "00", "01"},  // S8-
}};

bool a_depends_on_y(const Outputs& a) { return a[0] != a[1] || a[2] != a[3]; }
bool b_depends_on_x(const Outputs& b) { return b[0] != b[2] || b[1] != b[3]; }

StrategyKind classify(const Outputs& a, const Outputs& b) {
  const bool ay = a_depends_on_y(a);
  const bool bx = b_depends_on_x(b);
  if (ay && bx) return StrategyKind::two_way;
  if (ay) return StrategyKind::signal_b_to_a;
  if (bx) return StrategyKind::signal_a_to_b;
  return StrategyKind::local;
}

Bit parse_bit(char c) {
  if (c == '0') return 0;
  if (c == '1') return 1;
  throw FormatError(std::string("expected '0' or '1', got '") + c + "'");
}

// All 16 two-input boolean functions as output tables over code 2x+y.
Outputs outputs_from_code(int code) {
  return {static_cast<Bit>(code & 1), static_cast<Bit>((code >> 1) & 1),
          static_cast<Bit>((code >> 2) & 1), static_cast<Bit>((code >> 3) & 1)};
}

}  // namespace

std::string_view to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::local: return "local";
    case StrategyKind::signal_a_to_b: return "signal_A_to_B";
    case StrategyKind::signal_b_to_a: return "signal_B_to_A";
    case StrategyKind::two_way: return "two_way";
  }
  return "?";
}

PRScope PRScope::from_index(int index) {
  if (index < 0 || index > 7) throw DomainError("scope index outside 0..7");
  return {static_cast<Bit>((index >> 2) & 1), static_cast<Bit>((index >> 1) & 1),
          static_cast<Bit>(index & 1)};
}

std::string PRScope::to_string() const {
  return {static_cast<char>('0' + mu1), static_cast<char>('0' + mu2),
          static_cast<char>('0' + mu3)};
}

PRScope PRScope::parse(std::string_view text) {
  if (text.size() != 3) throw FormatError("scope must be three bits, e.g. 000");
  return {parse_bit(text[0]), parse_bit(text[1]), parse_bit(text[2])};
}

CorrelationBox pr_box(PRScope scope) {
  CorrelationBox::Table t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          t[box_index(x, y, a, b)] = ((a ^ b) == scope.relation(x, y)) ? 0.5 : 0.0;
  return CorrelationBox::from_table(t);
}

DeterministicStrategy DeterministicStrategy::from_outputs(const Outputs& a_out,
                                                          const Outputs& b_out) {
  for (int i = 0; i < 4; ++i)
    if (a_out[i] > 1 || b_out[i] > 1)
      throw StrategyError("strategy outputs must be bits");
  return DeterministicStrategy(classify(a_out, b_out), a_out, b_out);
}

DeterministicStrategy DeterministicStrategy::make(StrategyKind kind,
                                                  const Outputs& a_out,
                                                  const Outputs& b_out) {
  DeterministicStrategy s = from_outputs(a_out, b_out);
  if (!s.admits(kind))
    throw StrategyError("output tables are not compatible with kind " +
                        std::string(nlbox::to_string(kind)));
  s.kind_ = kind;
  return s;
}

DeterministicStrategy DeterministicStrategy::parse_table(std::string_view text) {
  // "ab,ab,ab,ab"
  if (text.size() != 11 || text[2] != ',' || text[5] != ',' || text[8] != ',')
    throw FormatError("strategy table must look like 00,00,00,01");
  Outputs a{}, b{};
  for (std::size_t i = 0; i < 4; ++i) {
    a[i] = parse_bit(text[3 * i]);
    b[i] = parse_bit(text[3 * i + 1]);
  }
  return from_outputs(a, b);
}

bool DeterministicStrategy::admits(StrategyKind k) const {
  const bool ay = a_depends_on_y(a_out_);
  const bool bx = b_depends_on_x(b_out_);
  switch (k) {
    case StrategyKind::local: return !ay && !bx;
    case StrategyKind::signal_a_to_b: return !ay;
    case StrategyKind::signal_b_to_a: return !bx;
    case StrategyKind::two_way: return ay && bx;
  }
  return false;
}

std::string DeterministicStrategy::table_string() const {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) out += ',';
    out += static_cast<char>('0' + a_out_[i]);
    out += static_cast<char>('0' + b_out_[i]);
  }
  return out;
}

CorrelationBox strategy_box(const DeterministicStrategy& s) {
  CorrelationBox::Table t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) t[box_index(x, y, s.a(x, y), s.b(x, y))] = 1.0;
  return CorrelationBox::from_table(t);
}

ScopeTable table1(PRScope scope) {
  auto column = [](std::size_t j) {
    Outputs a{}, b{};
    for (std::size_t i = 0; i < 4; ++i) {
      a[i] = parse_bit(kTable[j][i][0]);
      b[i] = parse_bit(kTable[j][i][1]);
    }
    return DeterministicStrategy::from_outputs(a, b);
  };
  const Relabelling r = Relabelling::to_scope(scope);
  auto build = [&]<std::size_t... J>(std::index_sequence<J...>) {
    return ScopeTable{apply_relabelling(column(J), r)...};
  };
  return build(std::make_index_sequence<kScopeTableSize>{});
}

std::string strategy_name(std::size_t index) {
  if (index >= kScopeTableSize) throw DomainError("strategy index outside 0..15");
  return "S" + std::to_string(index / 2 + 1) + (index % 2 == 0 ? "+" : "-");
}

std::optional<std::size_t> strategy_index(std::string_view name) {
  if (name.size() != 3 || name[0] != 'S') return std::nullopt;
  if (name[1] < '1' || name[1] > '8') return std::nullopt;
  if (name[2] != '+' && name[2] != '-') return std::nullopt;
  return static_cast<std::size_t>(name[1] - '1') * 2 + (name[2] == '-' ? 1 : 0);
}

std::optional<std::size_t> find_in_table1(const DeterministicStrategy& s) {
  static const ScopeTable base = table1();
  for (std::size_t j = 0; j < base.size(); ++j)
    if (base[j] == s) return j;
  return std::nullopt;
}

std::vector<DeterministicStrategy> enumerate_deterministic(KindFilter filter) {
  std::vector<DeterministicStrategy> out;
  // Single-variable functions: constant 0, constant 1, identity, negation.
  const std::array<std::array<Bit, 2>, 4> unary = {{{0, 0}, {1, 1}, {0, 1}, {1, 0}}};

  auto add_local = [&] {
    for (const auto& f : unary)
      for (const auto& g : unary)
        out.push_back(DeterministicStrategy::from_outputs(
            {f[0], f[0], f[1], f[1]}, {g[0], g[1], g[0], g[1]}));
  };
  auto add_a_to_b = [&] {
    for (const auto& f : unary)
      for (int code = 0; code < 16; ++code) {
        auto s = DeterministicStrategy::from_outputs({f[0], f[0], f[1], f[1]},
                                                     outputs_from_code(code));
        if (s.kind() != StrategyKind::local) out.push_back(s);
      }
  };
  auto add_b_to_a = [&] {
    for (int code = 0; code < 16; ++code)
      for (const auto& g : unary) {
        auto s = DeterministicStrategy::from_outputs(outputs_from_code(code),
                                                     {g[0], g[1], g[0], g[1]});
        if (s.kind() != StrategyKind::local) out.push_back(s);
      }
  };

  switch (filter) {
    case KindFilter::local: add_local(); break;
    case KindFilter::signal_a_to_b: add_a_to_b(); break;
    case KindFilter::signal_b_to_a: add_b_to_a(); break;
    case KindFilter::all_one_bit: {
      add_local();
      add_a_to_b();
      add_b_to_a();
      std::vector<DeterministicStrategy> unique;
      for (const auto& s : out)
        if (std::find(unique.begin(), unique.end(), s) == unique.end())
          unique.push_back(s);
      return unique;
    }
  }
  return out;
}

}  // namespace nlbox
