#pragma once

#include <cstdint>
#include <cstddef>

namespace evalkit {

// Deterministic 64-bit PRNG (splitmix64). Used instead of std::mt19937 plus
// std::uniform_int_distribution because the standard distributions are
// implementation-defined: the same seed must produce the same draws on every
// platform and in every build.
//
// Streams are cheap to construct. Bootstrap replicate r uses
// RngStream::for_replicate(seed, r), so replicate values never depend on the
// order in which replicates execute.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  // Independent stream for one replicate of a master-seeded run.
  static RngStream for_replicate(std::uint64_t seed, std::uint64_t replicate) {
    return RngStream(mix(seed) ^ mix(0x5851F42D4C957F2Dull * (replicate + 1)));
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, n) by rejection.
  std::size_t bounded(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod n
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return static_cast<std::size_t>(x % bound);
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace evalkit
