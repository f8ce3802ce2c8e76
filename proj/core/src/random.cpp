#include "nlbox/random.hpp"

#include <algorithm>
#include <numeric>

namespace nlbox {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(stream_seed(seed, stream));
}

std::vector<double> dirichlet(Rng& rng, std::size_t dim) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(dim);
  double total = 0.0;
  for (auto& v : w) {
    v = expo(rng);
    total += v;
  }
  for (auto& v : w) v /= total;
  return w;
}

RandomMixture random_one_bit_mixture(Rng& rng, std::size_t max_support) {
  static const std::vector<DeterministicStrategy> vertices =
      enumerate_deterministic(KindFilter::all_one_bit);

  std::uniform_int_distribution<std::size_t> size_dist(1, std::max<std::size_t>(1, max_support));
  const std::size_t k = size_dist(rng);
  std::vector<std::size_t> order(vertices.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Partial Fisher-Yates: the first k entries become the support.
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, order.size() - 1);
    std::swap(order[i], order[pick(rng)]);
  }

  std::vector<double> w = dirichlet(rng, k);
  std::vector<CorrelationBox> boxes;
  RandomMixture out{CorrelationBox::pr_box(), 0.0};
  boxes.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& s = vertices[order[i]];
    boxes.push_back(strategy_box(s));
    if (s.kind() != StrategyKind::local) out.one_way_weight += w[i];
  }
  out.box = mix(w, boxes);
  return out;
}

ResourceSpec random_resource_spec(Rng& rng, PRScope scope) {
  std::uniform_int_distribution<std::size_t> size_dist(1, kScopeTableSize);
  const std::size_t k = size_dist(rng);
  std::array<std::size_t, kScopeTableSize> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, order.size() - 1);
    std::swap(order[i], order[pick(rng)]);
  }
  std::vector<double> w = dirichlet(rng, k);
  ResourceSpec::Weights weights{};
  for (std::size_t i = 0; i < k; ++i) weights[order[i]] = w[i];
  return ResourceSpec(scope, weights);
}

}  // namespace nlbox
