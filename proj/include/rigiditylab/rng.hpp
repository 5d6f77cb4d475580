#pragma once

#include <cstdint>
#include <vector>

#include "rigiditylab/scalar.hpp"

namespace rigiditylab {

// Deterministic 64-bit generator (SplitMix64). The standard library's
// distributions are implementation-defined, so all randomness used in
// verdicts goes through this class to keep reports byte-reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [lo, hi], inclusive. Rejection sampling, no modulo bias.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  double uniform_real();  // [0, 1)

 private:
  std::uint64_t state_;
};

// Derives an independent stream seed; used to split one user seed into
// per-trial / per-purpose streams.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c);

// Seeded vector of integer-valued rationals, entries uniform in
// [-bound, bound]. Requires bound >= 2.
std::vector<Rational> random_rational_vector(int dim, std::int64_t bound, std::uint64_t seed);

// Same distribution but drawn from a live generator (for callers that
// need several vectors from one stream).
std::vector<Rational> random_rational_vector(int dim, std::int64_t bound, SplitMix64& rng);

}  // namespace rigiditylab
