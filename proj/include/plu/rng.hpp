#ifndef PLU_RNG_HPP
#define PLU_RNG_HPP

#include <cmath>
#include <cstdint>

namespace plu {

/// Deterministic 64-bit generator (splitmix64). The full byte-level stream
/// is a pure function of the seed: state advances by the golden-ratio
/// constant and each output is the finalizer mix of the new state. Chosen
/// so the stream can be reproduced exactly in any language from this file
/// alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  /// Uniform in [0, 1): top 53 bits of the next output.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller on the uniform stream. Consumes two
  /// uniforms per pair; the second sample of each pair is cached.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_uniform();
    while (u1 == 0.0) u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline Rng rng_new(std::uint64_t seed) { return Rng(seed); }

/// Purpose-specific streams derived from one master seed. Stream k is
/// seeded with the k-th raw output of a splitmix64 generator seeded with
/// the master seed, so the dataset, weight-init, and probe streams never
/// overlap and never depend on each other's consumption.
enum class Stream : std::uint64_t {
  dataset = 1,
  weights = 2,
  probe = 3,
};

inline std::uint64_t stream_seed(std::uint64_t master, Stream which) {
  Rng r(master);
  std::uint64_t s = 0;
  for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(which); ++k) {
    s = r.next_u64();
  }
  return s;
}

inline Rng stream_rng(std::uint64_t master, Stream which) {
  return Rng(stream_seed(master, which));
}

}  // namespace plu

#endif  // PLU_RNG_HPP
