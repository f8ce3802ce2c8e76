#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "nlbox/box.hpp"
#include "nlbox/resource.hpp"
#include "nlbox/strategy.hpp"

namespace nlbox {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t z);

/// Seed of stream `stream` derived from a master seed. Streams are
/// independent generators; the same (seed, stream) pair always yields the
/// same generator regardless of which thread constructs it.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);
Rng make_stream(std::uint64_t seed, std::uint64_t stream);

/// Flat Dirichlet(1, ..., 1) sample of the given dimension.
std::vector<double> dirichlet(Rng& rng, std::size_t dim);

/// A random mixture of local and one-way vertices.
struct RandomMixture {
  CorrelationBox box;
  double one_way_weight = 0.0;  // generating weight on non-local vertices
};

/// Picks 1..max_support distinct vertices of the 112 local + one-way
/// strategies uniformly and weights them with a flat Dirichlet draw.
RandomMixture random_one_bit_mixture(Rng& rng, std::size_t max_support = 8);

/// Random spec over the 16 table strategies of `scope`: a uniformly sized
/// random support with flat Dirichlet weights.
ResourceSpec random_resource_spec(Rng& rng, PRScope scope = {});

}  // namespace nlbox
