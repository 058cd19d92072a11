#pragma once

// Deterministic, platform-independent randomness for seeded verification runs.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard distributions are implementation-defined, so every
// mapping from raw 64-bit words to ranges is done here instead.

#include <cstdint>
#include <random>

#include "weaknet/rational.hpp"

namespace weaknet {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, n), n > 0; rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n);

  /// Uniform in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform in [0, 1) on the 2^-53 grid.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool coin() { return (next_u64() >> 63) != 0; }

  /// lo + (hi - lo) * j / resolution with j uniform in [0, resolution].
  Rational uniform_rational(const Rational& lo, const Rational& hi, std::int64_t resolution);

  /// p/q with 2 <= q <= max_den and 0 < p < q, both uniform.
  Rational open_unit(std::int64_t max_den);

  /// Magnitude in [lo, lo * 2^octaves]: a uniform octave, then a uniform
  /// position inside it on a grid of `resolution` steps. Log-uniform up to the
  /// within-octave shape, and free of libm so it is identical everywhere.
  Rational log_uniform(const Rational& lo, int octaves, std::int64_t resolution);

  /// Independent stream number `stream` derived from this generator's seed
  /// (not from its current state), so per-trial streams do not depend on the
  /// order in which trials run.
  Rng derive(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// The splitmix64 finalizer; used to decorrelate derived seeds.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace weaknet
