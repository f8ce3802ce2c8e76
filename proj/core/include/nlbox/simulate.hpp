#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "nlbox/random.hpp"
#include "nlbox/resource.hpp"

namespace nlbox {

/// Unit vector in R^3.
class Direction {
 public:
  /// Normalizes `v`; throws DomainError for a (near-)zero vector.
  static Direction from_vector(const std::array<double, 3>& v);
  /// (cos t, sin t, 0).
  static Direction in_plane(double angle);

  const std::array<double, 3>& v() const { return v_; }
  double dot(const std::array<double, 3>& w) const {
    return v_[0] * w[0] + v_[1] * w[1] + v_[2] * w[2];
  }
  double dot(const Direction& d) const { return dot(d.v_); }

 private:
  explicit Direction(const std::array<double, 3>& v) : v_(v) {}
  std::array<double, 3> v_;
};

/// 0 if z < 0, 1 if z >= 0.
inline Bit sgn01(double z) { return z < 0.0 ? Bit{0} : Bit{1}; }

/// Uniform on the unit sphere: three standard normals, normalized.
Direction sample_direction(Rng& rng);

/// One query of the resource: draws a table column by weight and returns its
/// outputs for (x, y).
std::pair<Bit, Bit> run_resource(const ResourceSpec& spec, int x, int y,
                                 Rng& rng);

/// One protocol round. `a` and `b` are the resource outputs mapped back to
/// the canonical relation a xor b = x*y (a no-op for scope 000), so that
///   x_out = a xor sgn(xhat.theta1),  y_out = b xor sgn(yhat.theta+) xor 1.
struct TrialRecord {
  Bit x_in = 0;
  Bit y_in = 0;
  Bit a = 0;
  Bit b = 0;
  Bit x_out = 0;
  Bit y_out = 0;
  Bit sgn_x_theta1 = 0;
  Bit sgn_y_theta_plus = 0;
};

/// Runs one trial with freshly drawn shared directions.
TrialRecord run_trial(const ResourceSpec& spec, const Direction& x_hat,
                      const Direction& y_hat, Rng& rng);

/// Trials per RNG stream. Trial block k uses make_stream(seed, k).
inline constexpr std::size_t kTrialsPerStream = 1u << 14;

/// Counts trials with x_out xor y_out = 1 over trial blocks
/// [first_block, first_block + n_blocks), capped at `total` trials.
std::uint64_t count_parity_ones(const ResourceSpec& spec,
                                const Direction& x_hat, const Direction& y_hat,
                                std::uint64_t total, std::uint64_t seed,
                                std::size_t first_block, std::size_t n_blocks);

/// Sample mean of x_out xor y_out over `trials` protocol rounds. The result
/// depends only on (spec, directions, trials, seed): `workers` splits the
/// trial blocks across threads without changing the outcome.
/// Throws DomainError if trials == 0.
double simulate_singlet(const ResourceSpec& spec, const Direction& x_hat,
                        const Direction& y_hat, std::uint64_t trials,
                        std::uint64_t seed, unsigned workers = 1);

struct SweepRow {
  double angle = 0.0;
  double estimate = 0.0;
  double target = 0.0;
  double stderr_ = 0.0;
};

/// One simulate_singlet per angle, with x_hat = (1,0,0) and
/// y_hat = (cos t, sin t, 0). Target (1 + cos t)/2,
/// stderr sqrt(est (1 - est) / N). Angles must lie in [0, pi].
std::vector<SweepRow> sweep_angles(const ResourceSpec& spec,
                                   const std::vector<double>& angles,
                                   std::uint64_t trials, std::uint64_t seed,
                                   unsigned workers = 1);

/// K evenly spaced angles covering [0, pi] inclusive (K >= 2).
std::vector<double> angle_grid(std::size_t k);

}  // namespace nlbox
