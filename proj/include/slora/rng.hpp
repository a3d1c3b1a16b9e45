#pragma once

#include <cstdint>
#include <cmath>

namespace slora {

// Named substreams keyed by (seed, purpose, a, b). Keying draws by purpose
// and device/interval index keeps runs reproducible independently of event
// processing order, and lets paired ALOHA/slotted runs share the topology
// and shadowing draws while using their own MAC draws.
enum class Stream : std::uint64_t {
  Topology = 1,
  Drift = 2,
  Shadow = 3,
  Mac = 4,
  Generic = 5,
};

namespace detail {

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace detail

// xoshiro256++ with splitmix64 seeding. Self-contained so that a given
// (config, seed) pair replays bit-identically on any platform; the standard
// library distributions do not guarantee that.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) {
      sm += 0x9E3779B97F4A7C15ull;
      word = detail::mix64(sm);
    }
  }

  static Rng substream(std::uint64_t seed, Stream purpose, std::uint64_t a = 0,
                       std::uint64_t b = 0) {
    std::uint64_t h = detail::mix64(seed ^ 0xA0761D6478BD642Full);
    h = detail::mix64(h + static_cast<std::uint64_t>(purpose));
    h = detail::mix64(h + a);
    h = detail::mix64(h + b);
    return Rng(h);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unbiased integer on [0, bound), Lemire's multiply-with-rejection.
  std::uint64_t uniform_int(std::uint64_t bound) {
    std::uint64_t x = next_u64();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = (-bound) % bound;
      while (lo < threshold) {
        x = next_u64();
        m = static_cast<unsigned __int128>(x) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Box-Muller, cosine branch only so every call consumes exactly two words.
  double normal(double mean, double stddev) {
    const double u1 =
        static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace slora
