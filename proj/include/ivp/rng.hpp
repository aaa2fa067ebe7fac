#pragma once

#include <cstdint>
#include <random>

#include "ivp/numeric.hpp"

namespace ivp {

// Deterministic seeded generator for sampling harnesses. mt19937_64 output
// is pinned by the standard, so runs reproduce across platforms; draws use
// plain modulo reduction to keep the stream independent of library
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform-ish integer in [lo, hi] (inclusive); spans here are tiny, so
  // modulo bias is immaterial.
  Int uniform(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return Int(lo + static_cast<long long>(next() % span));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ivp
