#include "weaknet/rng.hpp"

#include <limits>

#include "weaknet/error.hpp"

namespace weaknet {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = next_u64();
  while (x >= limit) x = next_u64();
  return x % n;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, "empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(next_u64());
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span + 1));
}

Rational Rng::uniform_rational(const Rational& lo, const Rational& hi, std::int64_t resolution) {
  if (resolution <= 0) throw Error(ErrorKind::InvalidArgument, "resolution must be positive");
  const std::int64_t j = uniform_int(0, resolution);
  return lo + (hi - lo) * Rational(Integer(j), Integer(resolution));
}

Rational Rng::open_unit(std::int64_t max_den) {
  if (max_den < 2) throw Error(ErrorKind::InvalidArgument, "max_den must be at least 2");
  const std::int64_t q = uniform_int(2, max_den);
  const std::int64_t p = uniform_int(1, q - 1);
  return Rational(Integer(p), Integer(q));
}

Rational Rng::log_uniform(const Rational& lo, int octaves, std::int64_t resolution) {
  const std::int64_t octave = uniform_int(0, octaves - 1);
  const Rational base = lo * Rational(Integer(1) << static_cast<unsigned>(octave));
  return uniform_rational(base, base * 2, resolution);
}

Rng Rng::derive(std::uint64_t stream) const {
  return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x632BE59BD9B4E019ULL)));
}

}  // namespace weaknet
