#include <doctest.h>

#include <set>

#include "nlbox/random.hpp"
#include "nlbox/relabel.hpp"
#include "oracles.hpp"

using namespace nlbox;

namespace {

CorrelationBox relabel_by_definition(const CorrelationBox& p, const Relabelling& r) {
  CorrelationBox::Table t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          t[box_index(x, y, a, b)] =
              p.p(x ^ r.flip_x, y ^ r.flip_y, a ^ r.a_offset[x], b ^ r.b_offset[y]);
  return CorrelationBox::from_table(t);
}

CorrelationBox random_box(Rng& rng) {
  CorrelationBox::Table t{};
  for (int s = 0; s < 4; ++s) {
    const auto w = dirichlet(rng, 4);
    for (int k = 0; k < 4; ++k) t[4 * s + k] = w[k];
  }
  return CorrelationBox::from_table(t);
}

}  // namespace

TEST_CASE("the relabelling set has 64 distinct elements") {
  const auto all = all_relabellings();
  CHECK(all.size() == 64);
  std::set<std::array<int, 6>> seen;
  for (const auto& r : all)
    seen.insert({r.flip_x, r.flip_y, r.a_offset[0], r.a_offset[1], r.b_offset[0], r.b_offset[1]});
  CHECK(seen.size() == 64);
}

TEST_CASE("apply_relabelling matches the defining formula") {
  Rng rng(7);
  const auto box = random_box(rng);
  for (const auto& r : all_relabellings())
    CHECK(apply_relabelling(box, r) == relabel_by_definition(box, r));
}

TEST_CASE("identity and inverse") {
  Rng rng(11);
  const auto box = random_box(rng);
  CHECK(apply_relabelling(box, Relabelling::identity()) == box);
  for (const auto& r : all_relabellings()) {
    CHECK(apply_relabelling(apply_relabelling(box, r), r.inverse()) == box);
    CHECK(Relabelling::compose(r, r.inverse()) == Relabelling::identity());
  }
}

TEST_CASE("composition equals sequential application and stays in the set") {
  Rng rng(13);
  const auto box = random_box(rng);
  const auto all = all_relabellings();
  for (const auto& r1 : all)
    for (const auto& r2 : all) {
      const auto c = Relabelling::compose(r1, r2);
      CHECK(std::find(all.begin(), all.end(), c) != all.end());
      CHECK(apply_relabelling(box, c) == apply_relabelling(apply_relabelling(box, r1), r2));
    }
}

TEST_CASE("relabelling preserves the box invariants") {
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const auto box = random_box(rng);
    for (const auto& r : all_relabellings()) {
      const auto q = apply_relabelling(box, r);
      for (int s = 0; s < 4; ++s) {
        double sum = 0.0;
        for (int k = 0; k < 4; ++k) {
          CHECK(q.table()[4 * s + k] >= 0.0);
          sum += q.table()[4 * s + k];
        }
        CHECK(std::abs(sum - 1.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("flipping Bob's output maps the PR box to scope 001") {
  Relabelling r;
  r.b_offset = {1, 1};
  CHECK(apply_relabelling(CorrelationBox::pr_box(), r) == pr_box(PRScope{0, 0, 1}));
}

TEST_CASE("all eight PR boxes are reachable from the canonical one") {
  std::set<int> reached;
  for (const auto& r : all_relabellings()) {
    const auto q = apply_relabelling(CorrelationBox::pr_box(), r);
    for (int s = 0; s < 8; ++s)
      if (q == pr_box(PRScope::from_index(s))) reached.insert(s);
  }
  CHECK(reached.size() == 8);
}

TEST_CASE("to_scope carries the canonical PR box and table to the target scope") {
  for (int s = 0; s < 8; ++s) {
    const PRScope scope = PRScope::from_index(s);
    const auto r = Relabelling::to_scope(scope);
    CHECK(apply_relabelling(CorrelationBox::pr_box(), r) == pr_box(scope));
    const auto base = table1();
    const auto mapped = table1(scope);
    for (std::size_t j = 0; j < 16; ++j) {
      CHECK(apply_relabelling(base[j], r) == mapped[j]);
      CHECK(strategy_box(mapped[j]) == apply_relabelling(strategy_box(base[j]), r));
    }
  }
}

TEST_CASE("PR box relation for every scope") {
  for (int s = 0; s < 8; ++s) {
    const PRScope sc = PRScope::from_index(s);
    const auto box = pr_box(sc);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) {
            const int rhs = (x & y) ^ (sc.mu1 & x) ^ (sc.mu2 & y) ^ sc.mu3;
            CHECK(box.p(x, y, a, b) == ((a ^ b) == rhs ? 0.5 : 0.0));
          }
  }
}
