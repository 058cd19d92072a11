#pragma once

#include <string>
#include <vector>

#include "weaknet/error.hpp"
#include "weaknet/geometry.hpp"
#include "weaknet/rng.hpp"

namespace testing {

using namespace weaknet;

inline Rational q(const char* text) { return parse_rational(text); }

inline Point3 p3(const char* x, const char* y, const char* z) { return vec3(q(x), q(y), q(z)); }

inline Line3 x_axis() { return Line3(vec3(0, 0, 0), vec3(1, 0, 0)); }
inline Line3 y_axis() { return Line3(vec3(0, 0, 0), vec3(0, 1, 0)); }

inline Rational small(Rng& rng, int bound = 5) { return rng.uniform_rational(-bound, bound, 4 * bound); }

inline Point3 random_point(Rng& rng, int bound = 5) { return vec3(small(rng, bound), small(rng, bound), small(rng, bound)); }

inline Line3 random_line(Rng& rng, int bound = 5) {
  Vec3 dir = Vec3::Zero();
  while (dir.isZero()) dir = random_point(rng, 3);
  return Line3(random_point(rng, bound), dir);
}

inline std::vector<Point3> random_cloud(Rng& rng, std::size_t n, int bound = 5) {
  std::vector<Point3> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_point(rng, bound));
  return out;
}

/// Kind of the Error thrown by f, or nullopt if it returns normally.
template <typename F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace testing
