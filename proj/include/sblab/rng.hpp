#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sblab {

// Identifies one deterministic random stream. Identical (seed, stream)
// pairs yield identical draw sequences across runs; distinct streams may
// be consumed concurrently.
struct RngHandle {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Deterministic draw source. All distributions are generated from
// mt19937_64 with fixed in-house transforms, so sequences do not depend
// on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(RngHandle h) {
    std::uint64_t s = h.seed;
    std::uint64_t a = detail::splitmix64(s);
    s ^= (h.stream + 1) * 0xD1B54A32D192ED03ULL;
    std::uint64_t b = detail::splitmix64(s);
    engine_.seed(a ^ (b << 1));
  }
  Rng(std::uint64_t seed, std::uint64_t stream) : Rng(RngHandle{seed, stream}) {}

  // Uniform on (0, 1); never returns 0 or 1.
  double u01() {
    const double u = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    return u;
  }

  double uniform(double a, double b) { return a + (b - a) * u01(); }

  // Standard normal via the polar method (cached pair).
  double normal() {
    if (has_cache_) {
      has_cache_ = false;
      return cache_;
    }
    double u, v, s;
    do {
      u = 2.0 * u01() - 1.0;
      v = 2.0 * u01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cache_ = v * f;
    has_cache_ = true;
    return u * f;
  }

  double exponential(double rate = 1.0) { return -std::log(u01()) / rate; }

  double laplace(double lambda) {
    const double mag = exponential(lambda);
    return u01() < 0.5 ? -mag : mag;
  }

  // Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    // Rejection to avoid modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double cache_ = 0.0;
  bool has_cache_ = false;
};

}  // namespace sblab
