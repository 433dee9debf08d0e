#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace nmcd {

// Child seed for replication `rep` of a run keyed by `master`: two rounds of
// the splitmix64 finalizer over a golden-ratio increment. Replications get
// decorrelated streams and the mapping is stable across platforms.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t rep) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (rep + 1);
  for (int round = 0; round < 2; ++round) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z = z ^ (z >> 31);
  }
  return z;
}

// Seeded draws for the simulation models. The engine is std::mt19937_64,
// whose bit stream is fixed by the standard; the variate transforms are
// spelled out here so sequences do not depend on the standard library's
// distribution implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // in [0, 1)
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // standard normal via Box-Muller; the paired value is cached
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;  // (0,1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  double student_t3() {
    const double z = normal();
    const double a = normal(), b = normal(), c = normal();
    return z / std::sqrt((a * a + b * b + c * c) / 3.0);
  }

  // (chi^2_k - k) / sqrt(2k), so mean 0 and variance 1
  double chisq_std(int k) {
    double sum = 0.0;
    for (int i = 0; i < k; ++i) {
      const double z = normal();
      sum += z * z;
    }
    return (sum - k) / std::sqrt(2.0 * k);
  }

private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace nmcd
