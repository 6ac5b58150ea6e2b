#pragma once

#include <cstdint>
#include <random>

namespace wavectl {

/// Seeded generator with reproducible uniform helpers. std::mt19937_64 is
/// fully specified by the standard; the double mapping below avoids the
/// implementation-defined std::uniform_real_distribution so that identical
/// seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  uint64_t below(uint64_t n) { return gen_() % n; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace wavectl
