#pragma once

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "weaknet/ruling.hpp"

namespace testing {

struct WitnessInstance {
  RulingFamily family;
  std::vector<std::size_t> b;
  std::vector<Line3> red;
};

/// n <= 12 distinct positive rationals, a nonempty B, and R mixing unused
/// rulings, lines of the other ruling, and generic lines.
inline WitnessInstance random_witness_instance(Rng& rng) {
  const std::size_t n = 1 + rng.below(12);
  std::vector<Rational> params;
  while (params.size() < n) {
    const Rational a = rng.uniform_rational(0, 12, 48);
    if (a > 0 && std::find(params.begin(), params.end(), a) == params.end()) params.push_back(a);
  }
  std::sort(params.begin(), params.end());
  WitnessInstance inst{RulingFamily(params), {}, {}};
  std::vector<std::size_t> unused;
  for (std::size_t i = 0; i < n; ++i) (rng.coin() || i + 1 == n ? inst.b : unused).push_back(i);
  const std::size_t r = rng.below(7);
  for (std::size_t j = 0; j < r; ++j) {
    switch (rng.below(4)) {
      case 0:
        if (!unused.empty()) {
          inst.red.push_back(inst.family.line(unused[rng.below(unused.size())]));
          break;
        }
        [[fallthrough]];
      case 1: inst.red.push_back(ell_line(rng.uniform_rational(-6, 6, 24))); break;
      case 2: inst.red.push_back(lambda_line(rng.uniform_rational(-6, 0, 12))); break;
      default: inst.red.push_back(random_line(rng, 4)); break;
    }
  }
  // Keep B and R disjoint as canonical lines.
  std::erase_if(inst.red, [&](const Line3& l) {
    return std::any_of(inst.b.begin(), inst.b.end(), [&](std::size_t i) { return inst.family.line(i) == l; });
  });
  return inst;
}

}  // namespace testing

namespace testing {

/// Up to k lines mixing rulings of the family, lines of the other ruling,
/// rulings with foreign parameters and generic lines.
inline std::vector<Line3> random_adversary(Rng& rng, const RulingFamily& family, long k) {
  std::vector<Line3> out;
  const std::size_t count = rng.below(static_cast<std::uint64_t>(k) + 1);
  while (out.size() < count) {
    switch (rng.below(4)) {
      case 0: out.push_back(family.line(rng.below(family.size()))); break;
      case 1: out.push_back(ell_line(rng.uniform_rational(-5, 5, 20))); break;
      case 2: out.push_back(lambda_line(rng.uniform_rational(0, 12, 36))); break;
      default: out.push_back(random_line(rng, 4)); break;
    }
  }
  return out;
}

}  // namespace testing
