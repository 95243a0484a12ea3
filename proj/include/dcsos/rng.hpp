#pragma once

// SplitMix64: tiny, fully specified generator so seeded runs are
// byte-identical across platforms and standard libraries.

#include <cstdint>

namespace dcsos {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0 (modulo bias is irrelevant here).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Uniform integer in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Uniform double in [lo, hi].
  double real(double lo, double hi) {
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

 private:
  std::uint64_t state_;
};

}  // namespace dcsos
