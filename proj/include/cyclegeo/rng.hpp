#ifndef CYCLEGEO_RNG_HPP_
#define CYCLEGEO_RNG_HPP_

#include <cstdint>

namespace cyclegeo {

// splitmix64 generator (Steele, Lea, Flood 2014). Small state, fast,
// and trivially splittable into independent per-trial streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0,1) with 53-bit mantissa resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Unbiased integer in [0, bound) by rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Per-trial stream: seed XOR golden-ratio increment scaled by (trial+1),
// passed through the splitmix64 finalizer.
inline Rng derive_trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return Rng(z);
}

}  // namespace cyclegeo

#endif  // CYCLEGEO_RNG_HPP_
