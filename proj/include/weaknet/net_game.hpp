#pragma once

// The refutation game behind the lower bound: for any k red lines an adversary
// proposes, produce a convex set that meets at least eps*n of the n rulings
// yet misses every red line. Hardening then inflates the witnesses and jitters
// the rulings into general position, re-verifying everything exactly.

#include <optional>
#include <string>
#include <vector>

#include "weaknet/error.hpp"
#include "weaknet/geometry.hpp"
#include "weaknet/ruling.hpp"

namespace weaknet {

class Rng;

/// Smallest n with n (1 - eps) > k. Throws BadEpsilon unless 0 < eps < 1 and
/// InvalidArgument unless k >= 1.
long minimal_n(const Rational& epsilon, long k);

/// ceil(eps * n), exact.
long stab_quota(const Rational& epsilon, long n);

struct RefutationWitness {
  ConvexBody body;
  ConvexPolygon3 polygon;
  /// Family indices of the rulings the witness meets.
  std::vector<std::size_t> stabbed;
  std::vector<Line3> adversary;
  WitnessPlan plan;
  VerificationReport report;
};

/// Throws TooManyAdversaryLines if |red| > k and InvalidArgument unless
/// family.size() * (1 - eps) > k.
RefutationWitness refute(const RulingFamily& family, const Rational& epsilon, long k,
                         const std::vector<Line3>& red);

/// Same vertices, inflation grown by delta_prime (> 0, else NonpositiveRadius).
ConvexBody inflate(const ConvexBody& body, const Rational& delta_prime);

/// max over members K of min over red lines r of dist^2(r, K). Throws
/// EmptyFamily for no members and InvalidArgument for no red lines.
Rational miss_margin(const std::vector<ConvexBody>& family, const std::vector<Line3>& red);

struct HardeningReport {
  /// (witness index, family index) of stabbing lines that no longer reach the
  /// interior of the inflated witness.
  std::vector<std::pair<std::size_t, std::size_t>> lost_hits;
  /// (witness index, adversary index) of red lines that now meet the inflation.
  std::vector<std::pair<std::size_t, std::size_t>> new_red_hits;
  /// First pair of perturbed rulings that is not skew.
  std::optional<std::pair<std::size_t, std::size_t>> colliding_pair;

  bool interior_hits_ok() const { return lost_hits.empty(); }
  bool adversary_misses_ok() const { return new_red_hits.empty(); }
  bool skew_ok() const { return !colliding_pair; }
  bool ok() const { return interior_hits_ok() && adversary_misses_ok() && skew_ok(); }
  /// Names of the failing checks: "interior-hit", "adversary-now-hits", "pairwise_skew".
  std::vector<std::string> failed_checks() const;
};

struct HardenedConfig {
  std::vector<ConvexBody> inflated;
  std::vector<Line3> perturbed;
  HardeningReport report;
};

class HardeningError : public Error {
 public:
  explicit HardeningError(HardeningReport report);
  const HardeningReport& report() const noexcept { return report_; }

 private:
  HardeningReport report_;
};

/// Inflates every witness by delta_prime, moves ruling i by jitters[i] (each
/// component bounded by jitter_bound) and re-verifies: stabbing rulings reach
/// the interior of their inflated witness, adversary lines still miss it, and
/// the perturbed rulings are pairwise skew. Throws HardeningError otherwise.
HardenedConfig harden(const RulingFamily& family, const std::vector<RefutationWitness>& witnesses,
                      const Rational& delta_prime, const std::vector<LineJitter>& jitters,
                      const Rational& jitter_bound);

/// Draws one jitter per ruling, each component uniform in [-bound, bound].
std::vector<LineJitter> random_jitters(std::size_t count, const Rational& bound, Rng& rng);

}  // namespace weaknet
