#include "nlbox/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "nlbox/error.hpp"

namespace nlbox {

namespace {

using Vec3 = std::array<double, 3>;

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

// Cumulative weights of the nonzero table columns, for inverse-CDF sampling.
struct ColumnSampler {
  std::array<std::size_t, kScopeTableSize> column{};
  std::array<double, kScopeTableSize> cumulative{};
  std::size_t count = 0;
  ScopeTable table;

  explicit ColumnSampler(const ResourceSpec& spec) : table(table1(spec.scope())) {
    double acc = 0.0;
    for (std::size_t j = 0; j < kScopeTableSize; ++j) {
      if (spec.weight(j) == 0.0) continue;
      acc += spec.weight(j);
      column[count] = j;
      cumulative[count] = acc;
      ++count;
    }
  }

  const DeterministicStrategy& draw(Rng& rng) const {
    const double u = std::uniform_real_distribution<double>(0.0, cumulative[count - 1])(rng);
    std::size_t k = 0;
    while (k + 1 < count && u >= cumulative[k]) ++k;
    return table[column[k]];
  }
};

// Everything a round needs apart from the randomness.
struct Protocol {
  ColumnSampler sampler;
  PRScope scope;
  const Direction& x_hat;
  const Direction& y_hat;

  TrialRecord round(Rng& rng, std::normal_distribution<double>& normal) const {
    auto draw_dir = [&] {
      for (;;) {
        Vec3 v{normal(rng), normal(rng), normal(rng)};
        const double n = norm(v);
        if (n > 0.0) return Vec3{v[0] / n, v[1] / n, v[2] / n};
      }
    };
    Vec3 t1, t2, plus, minus;
    do {
      t1 = draw_dir();
      t2 = draw_dir();
      for (int i = 0; i < 3; ++i) {
        plus[i] = t1[i] + t2[i];
        minus[i] = t1[i] - t2[i];
      }
    } while (norm(minus) < 1e-12);

    TrialRecord rec;
    rec.sgn_x_theta1 = sgn01(x_hat.dot(t1));
    rec.sgn_y_theta_plus = sgn01(y_hat.dot(plus));
    rec.x_in = rec.sgn_x_theta1 ^ sgn01(x_hat.dot(t2));
    rec.y_in = rec.sgn_y_theta_plus ^ sgn01(y_hat.dot(minus));

    const auto& s = sampler.draw(rng);
    // Undo the scope's local offsets so that a xor b = x*y.
    rec.a = s.a(rec.x_in, rec.y_in) ^ (scope.mu1 & rec.x_in) ^ scope.mu3;
    rec.b = s.b(rec.x_in, rec.y_in) ^ (scope.mu2 & rec.y_in);
    rec.x_out = rec.a ^ rec.sgn_x_theta1;
    rec.y_out = rec.b ^ rec.sgn_y_theta_plus ^ 1;
    return rec;
  }
};

}  // namespace

Direction Direction::from_vector(const std::array<double, 3>& v) {
  const double n = norm(v);
  if (!(n > 1e-12) || !std::isfinite(n)) throw DomainError("direction must be a nonzero vector");
  return Direction({v[0] / n, v[1] / n, v[2] / n});
}

Direction Direction::in_plane(double angle) {
  return Direction({std::cos(angle), std::sin(angle), 0.0});
}

Direction sample_direction(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    const Vec3 v{normal(rng), normal(rng), normal(rng)};
    if (norm(v) > 0.0) return Direction::from_vector(v);
  }
}

std::pair<Bit, Bit> run_resource(const ResourceSpec& spec, int x, int y, Rng& rng) {
  const ColumnSampler sampler(spec);
  const auto& s = sampler.draw(rng);
  return {s.a(x, y), s.b(x, y)};
}

TrialRecord run_trial(const ResourceSpec& spec, const Direction& x_hat,
                      const Direction& y_hat, Rng& rng) {
  const Protocol proto{ColumnSampler(spec), spec.scope(), x_hat, y_hat};
  std::normal_distribution<double> normal(0.0, 1.0);
  return proto.round(rng, normal);
}

std::uint64_t count_parity_ones(const ResourceSpec& spec, const Direction& x_hat,
                                const Direction& y_hat, std::uint64_t total,
                                std::uint64_t seed, std::size_t first_block,
                                std::size_t n_blocks) {
  const Protocol proto{ColumnSampler(spec), spec.scope(), x_hat, y_hat};
  std::uint64_t ones = 0;
  for (std::size_t blk = first_block; blk < first_block + n_blocks; ++blk) {
    const std::uint64_t begin = static_cast<std::uint64_t>(blk) * kTrialsPerStream;
    if (begin >= total) break;
    const std::uint64_t end = std::min<std::uint64_t>(total, begin + kTrialsPerStream);
    Rng rng = make_stream(seed, blk);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::uint64_t i = begin; i < end; ++i) {
      const TrialRecord r = proto.round(rng, normal);
      ones += r.x_out ^ r.y_out;
    }
  }
  return ones;
}

double simulate_singlet(const ResourceSpec& spec, const Direction& x_hat,
                        const Direction& y_hat, std::uint64_t trials,
                        std::uint64_t seed, unsigned workers) {
  if (trials == 0) throw DomainError("simulate_singlet needs at least one trial");
  const std::size_t blocks =
      static_cast<std::size_t>((trials + kTrialsPerStream - 1) / kTrialsPerStream);
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(blocks));

  std::uint64_t ones = 0;
  if (workers == 1) {
    ones = count_parity_ones(spec, x_hat, y_hat, trials, seed, 0, blocks);
  } else {
    std::vector<std::uint64_t> partial(workers, 0);
    {
      std::vector<std::jthread> pool;
      const std::size_t per = (blocks + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const std::size_t first = w * per;
        if (first >= blocks) break;
        const std::size_t count = std::min(per, blocks - first);
        pool.emplace_back([&, w, first, count] {
          partial[w] = count_parity_ones(spec, x_hat, y_hat, trials, seed, first, count);
        });
      }
    }
    for (auto p : partial) ones += p;
  }
  return static_cast<double>(ones) / static_cast<double>(trials);
}

std::vector<SweepRow> sweep_angles(const ResourceSpec& spec,
                                   const std::vector<double>& angles,
                                   std::uint64_t trials, std::uint64_t seed,
                                   unsigned workers) {
  for (double a : angles)
    if (!(a >= 0.0 && a <= std::numbers::pi + 1e-12))
      throw DomainError("sweep angles must lie in [0, pi]");
  const Direction x_hat = Direction::in_plane(0.0);
  std::vector<SweepRow> rows;
  rows.reserve(angles.size());
  for (double a : angles) {
    SweepRow row;
    row.angle = a;
    row.estimate = simulate_singlet(spec, x_hat, Direction::in_plane(a), trials, seed, workers);
    row.target = (1.0 + std::cos(a)) / 2.0;
    row.stderr_ = std::sqrt(row.estimate * (1.0 - row.estimate) / static_cast<double>(trials));
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> angle_grid(std::size_t k) {
  if (k < 2) throw DomainError("angle grid needs at least two points");
  std::vector<double> out(k);
  for (std::size_t i = 0; i < k; ++i)
    out[i] = std::numbers::pi * static_cast<double>(i) / static_cast<double>(k - 1);
  return out;
}

}  // namespace nlbox
