#include "nlbox/suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlbox/certify.hpp"
#include "nlbox/decompose.hpp"
#include "nlbox/error.hpp"
#include "nlbox/measures.hpp"
#include "nlbox/random.hpp"
#include "nlbox/resource.hpp"

namespace nlbox {

namespace {

class Tracker {
 public:
  Tracker(std::string name, double tol) {
    r_.name = std::move(name);
    r_.tol = tol;
    r_.worst_slack = std::numeric_limits<double>::infinity();
  }

  void slack(double s) {
    ++r_.checked;
    r_.worst_slack = std::min(r_.worst_slack, s);
  }
  void deviation(double d) { slack(-std::abs(d)); }
  void fail(const std::string& why) {
    ++r_.checked;
    if (r_.error.empty()) r_.error = why;
  }

  PropertyResult done() {
    if (r_.checked == 0) r_.worst_slack = 0.0;
    r_.passed = r_.error.empty() && r_.worst_slack >= -r_.tol;
    return r_;
  }

 private:
  PropertyResult r_;
};

// Stream ids keep the randomized families independent of each other.
constexpr std::uint64_t kBoxStream = 0;
constexpr std::uint64_t kSpecStream = 1ull << 32;
constexpr std::uint64_t kMixStream = 2ull << 32;

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed; });
}

ScopeTable corrupted_table1() {
  ScopeTable t = table1();
  auto a = t[0].a_outputs();
  auto b = t[0].b_outputs();
  b[3] ^= 1;
  t[0] = DeterministicStrategy::from_outputs(a, b);
  return t;
}

SuiteReport run_property_suite(const SuiteConfig& cfg) {
  SuiteReport report;
  const ScopeTable& table = cfg.table;

  // Catalog: every column obeys a xor b = x*y, one-way columns first.
  {
    Tracker t("table: PR relation and kinds", 0.0);
    for (std::size_t j = 0; j < kScopeTableSize; ++j) {
      bool ok = true;
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) ok = ok && ((table[j].a(x, y) ^ table[j].b(x, y)) == (x & y));
      const bool one_way = table[j].kind() == StrategyKind::signal_a_to_b ||
                           table[j].kind() == StrategyKind::signal_b_to_a;
      ok = ok && (j < 8 ? one_way : table[j].kind() == StrategyKind::two_way);
      t.slack(ok ? 0.0 : -1.0);
    }
    report.properties.push_back(t.done());
  }

  // Random mixtures of local and one-way vertices.
  Tracker thm1("S + 2I >= C_min", cfg.tol);
  Tracker chsh_cost("C_min >= lambda_max/2 - 1", cfg.tol);
  Tracker relax("lambda_max - 2 <= 2S + 4I", cfg.tol);
  Tracker cert("I >= lambda_max/4 - (1+S)/2", cfg.tol);
  Tracker lp_gen("C_min <= generating one-way weight", cfg.tol);
  Tracker ent("H_S >= 1 - H((1-S)/2)", cfg.tol);
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    Rng rng = make_stream(cfg.seed, kBoxStream + i);
    const RandomMixture m = random_one_bit_mixture(rng);
    const SignalReport sig = signal(m.box);
    const double ind = indeterminacy(m.box);
    const double lmax = chsh_max(m.box);
    try {
      const double c = min_comm_cost(m.box, cfg.tol).cost;
      thm1.slack(sig.total + 2.0 * ind - c);
      chsh_cost.slack(c - (lmax / 2.0 - 1.0));
      lp_gen.slack(m.one_way_weight - c);
    } catch (const Error& e) {
      thm1.fail(e.what());
      chsh_cost.fail(e.what());
      lp_gen.fail(e.what());
    }
    const auto rb = relaxed_bell_check(m.box, cfg.tol);
    relax.slack(rb.rhs - rb.lhs);
    cert.slack(ind - certified_indeterminacy_bound(std::min(lmax, 4.0), std::min(sig.total, 1.0)));
    ent.slack(entropic_signal(m.box) - entropic_signal_lower_bound(std::min(sig.total, 1.0)));
  }
  for (Tracker* t : {&thm1, &chsh_cost, &relax, &cert, &lp_gen, &ent})
    report.properties.push_back(t->done());

  // Random 16-column specs: signed signals against measured per-setting
  // signals, and the unbiased-marginal consequence for non-signaling specs.
  Tracker signed_sig("|s_k| = per-setting signal", kStructuralTol);
  Tracker unbiased("I < 1/2 implies S >= 1 - 2I", cfg.tol);
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    Rng rng = make_stream(cfg.seed, kSpecStream + i);
    const ResourceSpec spec = random_resource_spec(rng);
    try {
      const CorrelationBox box = genp_resource(spec, table);
      const SignalReport sig = signal(box);
      const SignedSignals ss = signed_signals(spec);
      const std::array<double, 4> measured = {sig.a_to_b_per_y[0], sig.a_to_b_per_y[1],
                                              sig.b_to_a_per_x[0], sig.b_to_a_per_x[1]};
      for (std::size_t k = 0; k < 4; ++k) signed_sig.deviation(std::abs(ss.s[k]) - measured[k]);
      const double ind = indeterminacy(box);
      unbiased.slack(sig.total - (1.0 - 2.0 * ind));
    } catch (const Error& e) {
      signed_sig.fail(e.what());
      unbiased.fail(e.what());
    }
  }
  report.properties.push_back(signed_sig.done());
  report.properties.push_back(unbiased.done());

  // Table resource of weight C mixed with local strategies: the eight
  // conditional-probability lower bounds.
  Tracker cond("conditional P(ab|xy) lower bounds", kStructuralTol);
  static const std::vector<DeterministicStrategy> locals = enumerate_deterministic(KindFilter::local);
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    Rng rng = make_stream(cfg.seed, kMixStream + i);
    const ResourceSpec spec = random_resource_spec(rng);
    const double cost = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const std::vector<double> lw = dirichlet(rng, 4);
    std::vector<double> weights = {cost};
    std::vector<CorrelationBox> boxes;
    try {
      boxes.push_back(genp_resource(spec, table));
      for (std::size_t k = 0; k < 4; ++k) {
        std::uniform_int_distribution<std::size_t> pick(0, locals.size() - 1);
        weights.push_back((1.0 - cost) * lw[k]);
        boxes.push_back(strategy_box(locals[pick(rng)]));
      }
      double total = 0.0;
      for (double w : weights) total += w;
      for (double& w : weights) w /= total;
      const CorrelationBox box = mix(weights, boxes);
      ResourceSpec::Weights scaled = spec.weights();
      for (double& w : scaled) w *= weights[0];
      for (const auto& b : conditional_lower_bounds(weights[0], signed_signals(scaled)))
        cond.slack(box.p(b.x, b.y, b.a, b.b) - b.bound);
    } catch (const Error& e) {
      cond.fail(e.what());
    }
  }
  report.properties.push_back(cond.done());

  // Single signaling pairs p*Sj+ + (1-p)*Sj- saturate both complementarity
  // relations.
  Tracker pair_lin("single pair: S + 2I = 1", kStructuralTol);
  Tracker pair_ent("single pair: H_S + H_I = 1", cfg.tol);
  for (int j = 1; j <= 4; ++j) {
    for (int step = 0; step <= 100; ++step) {
      const ResourceSpec spec = ResourceSpec::pair(j, step / 100.0);
      const CorrelationBox box = genp_resource(spec, table);
      pair_lin.deviation(signal(box).total + 2.0 * indeterminacy(box) - 1.0);
      pair_ent.deviation(entropic_signal(box) + entropic_indeterminacy(box) - 1.0);
    }
  }
  report.properties.push_back(pair_lin.done());
  report.properties.push_back(pair_ent.done());
  return report;
}

}  // namespace nlbox
