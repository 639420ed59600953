#ifndef LQPD_RNG_HPP
#define LQPD_RNG_HPP

#include <cstdint>

namespace lqpd {

// SplitMix64 finalizer, used only to expand user seeds into generator state.
// Constants: increment 0x9E3779B97F4A7C15, mixers 0xBF58476D1CE4E5B9 and
// 0x94D049BB133111EB with shifts 30/27/31.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seeded 64-bit shift-register generator (xorshift64*).
// Update: x ^= x >> 12; x ^= x << 25; x ^= x >> 27; output x * M with
// M = 0x2545F4914F6CDD1D (2685821657736338717). Streams are derived as
// state = splitmix64(seed + (stream+1) * 0x9E3779B97F4A7C15), so any
// implementation reproducing these constants reproduces the streams.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed, std::uint64_t stream = 0) {
    state_ = splitmix64(seed + (stream + 1) * 0x9E3779B97F4A7C15ULL);
    if (state_ == 0) state_ = 0x2545F4914F6CDD1DULL;
  }

  std::uint64_t next_u64() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1DULL;
  }

  // Uniform on the open interval (0,1); never returns an exact endpoint.
  double next_open01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform on [lo, hi).
  double next_uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next_u64() >> 11) * 0x1.0p-53);
  }

 private:
  std::uint64_t state_;
};

}  // namespace lqpd

#endif
