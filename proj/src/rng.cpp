#include "rigiditylab/rng.hpp"

namespace rigiditylab {

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  require(lo <= hi, Errc::Internal, "uniform: empty range");
  std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next());  // full 64-bit span
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % range);
}

double SplitMix64::uniform_real() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  SplitMix64 g(a ^ (b * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
  g.next();
  return g.next();
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix_seed(mix_seed(a, b), c);
}

std::vector<Rational> random_rational_vector(int dim, std::int64_t bound, SplitMix64& rng) {
  require(dim >= 0, Errc::DimensionMismatch, "negative dimension");
  require(bound >= 2, Errc::Internal, "coordinate bound must be >= 2");
  std::vector<Rational> v;
  v.reserve(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) v.emplace_back(rng.uniform(-bound, bound));
  return v;
}

std::vector<Rational> random_rational_vector(int dim, std::int64_t bound, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_rational_vector(dim, bound, rng);
}

}  // namespace rigiditylab
