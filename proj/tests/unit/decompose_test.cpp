#include <doctest.h>

#include <cmath>
#include <vector>

#include "nlbox/decompose.hpp"
#include "nlbox/error.hpp"
#include "nlbox/measures.hpp"
#include "nlbox/random.hpp"
#include "nlbox/resource.hpp"
#include "oracles.hpp"

using namespace nlbox;

namespace {

// Signed signals written out from the strategy sums, weights indexed S1+, S1-, ...
std::array<double, 4> signed_by_formula(const ResourceSpec::Weights& w) {
  auto p = [&](int j, char sign) { return w[2 * (j - 1) + (sign == '+' ? 0 : 1)]; };
  return {
      (p(3, '+') + p(6, '+') + p(7, '+') + p(8, '+')) - (p(3, '-') + p(6, '-') + p(7, '-') + p(8, '-')),
      (p(1, '+') + p(5, '-') + p(6, '+') + p(8, '-')) - (p(1, '-') + p(5, '+') + p(6, '-') + p(8, '+')),
      (p(4, '+') + p(5, '+') + p(7, '+') + p(8, '+')) - (p(4, '-') + p(5, '-') + p(7, '-') + p(8, '-')),
      (p(2, '+') + p(5, '+') + p(6, '-') + p(7, '-')) - (p(2, '-') + p(5, '-') + p(6, '+') + p(7, '+')),
  };
}

// Signed per-setting shifts of the box's marginals: Bob's at y = 0, 1, then
// Alice's at x = 0, 1.
std::array<double, 4> signed_by_marginals(const CorrelationBox& box) {
  return {oracle::pb(box, 0, 0, 0) - oracle::pb(box, 0, 1, 0),
          oracle::pb(box, 0, 0, 1) - oracle::pb(box, 0, 1, 1),
          oracle::pa(box, 0, 0, 0) - oracle::pa(box, 0, 0, 1),
          oracle::pa(box, 0, 1, 0) - oracle::pa(box, 0, 1, 1)};
}

ResourceSpec::Weights unit_weight(std::size_t j) {
  ResourceSpec::Weights w{};
  w[j] = 1.0;
  return w;
}

}  // namespace

TEST_CASE("min_comm_cost on the reference boxes") {
  const auto local = strategy_box(DeterministicStrategy::parse_table("00,00,00,00"));
  CHECK(min_comm_cost(local).cost == doctest::Approx(0.0).epsilon(1e-9));

  const auto pr = min_comm_cost(CorrelationBox::pr_box());
  CHECK(std::abs(pr.cost - 1.0) <= 1e-9);

  const double e = 1.0 / std::sqrt(2.0);
  const auto quantum = CorrelationBox::from_correlators({e, e, e, -e});
  const double c = min_comm_cost(quantum).cost;
  CHECK(c >= std::sqrt(2.0) - 1.0 - 1e-9);
  CHECK(c <= 1.0);
}

TEST_CASE("the PR box is reached by equal weight on S1+ and S1-") {
  const auto pair = ResourceSpec::pair(1, 0.5);
  CHECK(genp_resource(pair) == CorrelationBox::pr_box());
  CHECK(pair.one_way_weight() == 1.0);
}

TEST_CASE("decompositions reproduce the box and report C as one-way weight") {
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const auto m = random_one_bit_mixture(rng);
    const auto d = min_comm_cost(m.box);
    const auto rebuilt = d.reconstruct();
    double total = 0.0, oneway = 0.0;
    for (const auto& ws : d.weights) {
      CHECK(ws.weight > 0.0);
      CHECK(ws.strategy.kind() != StrategyKind::two_way);
      total += ws.weight;
      if (ws.strategy.kind() != StrategyKind::local) oneway += ws.weight;
    }
    CHECK(std::abs(total - 1.0) <= 1e-9);
    CHECK(std::abs(oneway - d.cost) <= 1e-12);
    for (std::size_t k = 0; k < 16; ++k) CHECK(std::abs(rebuilt[k] - m.box.table()[k]) <= 1e-9);
    CHECK(d.cost <= m.one_way_weight + 1e-9);
    CHECK(d.cost >= chsh_cost_bound(m.box) - 1e-9);
  }
}

TEST_CASE("two-way strategies are infeasible for the one-bit LP") {
  const auto t = table1();
  for (std::size_t j = 8; j < 16; ++j) {
    CAPTURE(strategy_name(j));
    CHECK_THROWS_AS(min_comm_cost(strategy_box(t[j])), InfeasibleError);
  }
  for (std::size_t j = 0; j < 8; ++j) CHECK(min_comm_cost(strategy_box(t[j])).cost == doctest::Approx(1.0));
}

TEST_CASE("CHSH cost bound examples") {
  CHECK(chsh_cost_bound(CorrelationBox::pr_box()) == 1.0);
  CHECK(chsh_cost_bound(strategy_box(DeterministicStrategy::parse_table("00,00,00,00"))) == 0.0);
  const double e = 1.0 / std::sqrt(2.0);
  CHECK(chsh_cost_bound(CorrelationBox::from_correlators({e, e, e, -e})) ==
        doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
  CHECK(chsh_cost_bound(CorrelationBox::from_correlators({0, 0, 0, 0})) == 0.0);
}

TEST_CASE("resource parsing") {
  const auto s = ResourceSpec::parse("S1+:0.75,S1-:0.25");
  CHECK(s.scope() == PRScope{});
  CHECK(s.weight(0) == 0.75);
  CHECK(s.weight(1) == 0.25);
  CHECK(ResourceSpec::parse("scope=101;S2-:1").scope() == PRScope{1, 0, 1});
  CHECK(ResourceSpec::parse(s.to_string()).weights() == s.weights());

  CHECK_THROWS_AS(ResourceSpec::parse("scope=000;scope=001;S1+:1"), ScopeError);
  CHECK_THROWS_AS(ResourceSpec::parse("S1+:0.5,S1-:0.4"), WeightError);
  CHECK_THROWS_AS(ResourceSpec::parse("S1+:1.5,S1-:-0.5"), WeightError);
  CHECK_THROWS_AS(ResourceSpec::parse("S9+:1"), FormatError);
  CHECK_THROWS_AS(ResourceSpec::parse("S1+=1"), FormatError);
  CHECK_THROWS_AS(ResourceSpec::parse(""), FormatError);
  CHECK_THROWS_AS(ResourceSpec::pair(0, 0.5), DomainError);
}

TEST_CASE("genp_resource examples") {
  CHECK(genp_resource(ResourceSpec::pair(1, 1.0)) == strategy_box(table1()[0]));
  const auto sp = genp_resource(ResourceSpec::pair(1, 0.75));
  CHECK(sp.table() == oracle::weighted_columns(ResourceSpec::pair(1, 0.75).weights()));
}

TEST_CASE("genp_resource satisfies the scope relation with probability one") {
  Rng rng(43);
  for (int i = 0; i < 64; ++i) {
    const PRScope scope = PRScope::from_index(i % 8);
    const auto spec = random_resource_spec(rng, scope);
    const auto box = genp_resource(spec);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        double ok = 0.0;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            if ((a ^ b) == scope.relation(x, y)) ok += box.p(x, y, a, b);
        CHECK(ok == doctest::Approx(1.0).epsilon(1e-12));
      }
  }
}

TEST_CASE("signed signal examples") {
  const ResourceSpec::Weights uniform = [] {
    ResourceSpec::Weights w;
    w.fill(1.0 / 16.0);
    return w;
  }();
  for (double v : signed_signals(uniform).s) CHECK(v == 0.0);

  const auto s3p = signed_signals(unit_weight(4));  // S3+
  CHECK(s3p.s == std::array<double, 4>{1, 0, 0, 0});
  const auto s1p = signed_signals(unit_weight(0));  // S1+
  CHECK(s1p.s == std::array<double, 4>{0, 1, 0, 0});
}

TEST_CASE("signed signals follow the strategy sums and the box marginals") {
  for (std::size_t j = 0; j < 16; ++j) {
    const auto w = unit_weight(j);
    CHECK(signed_signals(w).s == signed_by_formula(w));
    CHECK(signed_signals(w).s == signed_by_marginals(CorrelationBox::from_table(oracle::column_table(j))));
  }
  Rng rng(47);
  for (int i = 0; i < 500; ++i) {
    const auto spec = random_resource_spec(rng);
    const auto s = signed_signals(spec).s;
    const auto f = signed_by_formula(spec.weights());
    const auto box = genp_resource(spec);
    const auto m = signed_by_marginals(box);
    const auto sig = signal(box);
    const std::array<double, 4> per = {sig.a_to_b_per_y[0], sig.a_to_b_per_y[1],
                                       sig.b_to_a_per_x[0], sig.b_to_a_per_x[1]};
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(s[k] - f[k]) <= 1e-12);
      CHECK(std::abs(s[k] - m[k]) <= 1e-12);
      CHECK(std::abs(std::abs(s[k]) - per[k]) <= 1e-12);
    }
  }
}

TEST_CASE("conditional lower bounds are tight on pure resources") {
  for (std::size_t j = 0; j < 16; ++j) {
    const auto w = unit_weight(j);
    const auto box = CorrelationBox::from_table(oracle::column_table(j));
    for (const auto& cb : conditional_lower_bounds(1.0, signed_signals(w))) {
      CAPTURE(j);
      CHECK(box.p(cb.x, cb.y, cb.a, cb.b) == doctest::Approx(cb.bound).epsilon(1e-15));
    }
  }
}

TEST_CASE("conditional lower bounds hold with a local admixture") {
  Rng rng(53);
  const auto locals = enumerate_deterministic(KindFilter::local);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const auto spec = random_resource_spec(rng);
    const double c = unit(rng);
    const auto resource = oracle::weighted_columns(spec.weights());
    const auto local_box = strategy_box(locals[i % 16]);
    ResourceSpec::Weights scaled{};
    for (std::size_t k = 0; k < 16; ++k) scaled[k] = c * spec.weight(k);
    for (const auto& cb : conditional_lower_bounds(c, signed_signals(scaled))) {
      const std::size_t k = box_index(cb.x, cb.y, cb.a, cb.b);
      const double value = c * resource[k] + (1.0 - c) * local_box.table()[k];
      CHECK(value >= cb.bound - 1e-12);
    }
  }
}
