#pragma once

#include <cstdint>
#include <random>

namespace vlcsim {

// splitmix64 step, used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Mixes a base seed with stream identifiers into a fresh 64-bit seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a = 0,
                              std::uint64_t b = 0) {
  std::uint64_t s = seed;
  std::uint64_t z = splitmix64(s);
  s ^= a * 0xff51afd7ed558ccdULL;
  z ^= splitmix64(s);
  s ^= b * 0xc4ceb9fe1a85ec53ULL;
  z ^= splitmix64(s);
  return z;
}

// Deterministic random stream.  All transforms are hand-coded so a given
// seed produces the same sequence on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in (0, 1), never returning an exact endpoint.
  double uniform() {
    const std::uint64_t bits = engine_() >> 11;  // 53 bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal draw (polar Marsaglia, one value cached).
  double normal();

  // Gamma(shape, scale=1) draw, shape > 0 (Marsaglia-Tsang).
  double gamma(double shape);

  // Exponential with the given rate.
  double exponential(double rate);

  // Standard Student-t draw with nu degrees of freedom.
  double student_t(double nu);

 private:
  std::mt19937_64 engine_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace vlcsim
