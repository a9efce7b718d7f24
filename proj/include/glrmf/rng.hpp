#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace glrmf {

// Deterministic RNG wrapper. All variate mappings are spelled out here
// instead of going through std distributions, whose output is
// implementation-defined; simulations must replay bit-identically for a
// given seed on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Exponential with the given rate > 0; finite since uniform01() < 1.
  double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

  double exp1() { return -std::log1p(-uniform01()); }

  // Unbiased integer in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (-n) % n;  // = (2^64 - n) mod n
    for (;;) {
      const std::uint64_t r = gen_();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform replica choice over {0..replicas-1} \ {self}; requires replicas >= 2.
  int other_replica(int replicas, int self) {
    const int k = static_cast<int>(below(static_cast<std::uint64_t>(replicas - 1)));
    return k >= self ? k + 1 : k;
  }

 private:
  std::mt19937_64 gen_;
};

// FNV-1a, used for run-configuration hashes in log metadata.
inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace glrmf
