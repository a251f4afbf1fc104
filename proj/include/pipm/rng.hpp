#pragma once

#include <cstdint>
#include <random>

namespace pipm {

// Deterministic RNG with hand-rolled value mappings. mt19937_64's raw output
// is pinned by the standard; std::uniform_*_distribution is not, so mapping
// here keeps generated instances identical across platforms and compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform01() * static_cast<double>(hi - lo + 1));
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Uniform +-1.
  double sign() { return bernoulli(0.5) ? 1.0 : -1.0; }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace pipm
