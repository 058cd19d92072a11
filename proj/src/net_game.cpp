#include "weaknet/net_game.hpp"

#include <algorithm>

#include "weaknet/error.hpp"
#include "weaknet/rng.hpp"

namespace weaknet {
namespace {

void require_epsilon(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= 1) {
    throw Error(ErrorKind::BadEpsilon, "epsilon must lie in (0, 1), got " + to_string(epsilon));
  }
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

}  // namespace

long minimal_n(const Rational& epsilon, long k) {
  require_epsilon(epsilon);
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  const Integer n = floor(Rational(k) / (1 - epsilon)) + 1;
  return n.convert_to<long>();
}

long stab_quota(const Rational& epsilon, long n) {
  return ceil(epsilon * Rational(n)).convert_to<long>();
}

RefutationWitness refute(const RulingFamily& family, const Rational& epsilon, long k,
                         const std::vector<Line3>& red) {
  require_epsilon(epsilon);
  if (static_cast<long>(red.size()) > k) {
    throw Error(ErrorKind::TooManyAdversaryLines,
                std::to_string(red.size()) + " adversary lines exceed k = " + std::to_string(k));
  }
  if (Rational(static_cast<long>(family.size())) * (1 - epsilon) <= k) {
    throw Error(ErrorKind::InvalidArgument, "family too small: need n (1 - eps) > k");
  }
  std::vector<std::size_t> blue;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Line3 l = family.line(i);
    if (std::find(red.begin(), red.end(), l) == red.end()) blue.push_back(i);
  }
  WitnessPlan plan = witness_plan(family, blue, red);
  ConvexPolygon3 polygon = build_witness(plan);
  std::vector<Line3> blue_lines;
  for (std::size_t i : plan.b_indices) blue_lines.push_back(family.line(i));
  VerificationReport report = verify_witness(polygon, blue_lines, red);
  std::vector<std::size_t> stabbed;
  for (std::size_t j : report.stabbed) stabbed.push_back(plan.b_indices[j]);
  return RefutationWitness{ConvexBody(polygon.vertices()), std::move(polygon), std::move(stabbed),
                           red, std::move(plan), std::move(report)};
}

ConvexBody inflate(const ConvexBody& body, const Rational& delta_prime) {
  if (delta_prime <= 0) throw Error(ErrorKind::NonpositiveRadius, "inflation radius must be positive");
  return ConvexBody(body.vertices(), body.inflation() + delta_prime);
}

Rational miss_margin(const std::vector<ConvexBody>& family, const std::vector<Line3>& red) {
  if (family.empty()) throw Error(ErrorKind::EmptyFamily, "no convex sets");
  if (red.empty()) throw Error(ErrorKind::InvalidArgument, "no adversary lines");
  std::optional<Rational> best;
  for (const auto& body : family) {
    Rational worst = line_body_distance_sq(red.front(), body);
    for (const auto& r : red) worst = std::min(worst, line_body_distance_sq(r, body));
    if (!best || worst > *best) best = std::move(worst);
  }
  return *best;
}

std::vector<std::string> HardeningReport::failed_checks() const {
  std::vector<std::string> out;
  if (!interior_hits_ok()) out.emplace_back("interior-hit");
  if (!adversary_misses_ok()) out.emplace_back("adversary-now-hits");
  if (!skew_ok()) out.emplace_back("pairwise_skew");
  return out;
}

HardeningError::HardeningError(HardeningReport report)
    : Error(ErrorKind::HardeningFailed, join(report.failed_checks())), report_(std::move(report)) {}

HardenedConfig harden(const RulingFamily& family, const std::vector<RefutationWitness>& witnesses,
                      const Rational& delta_prime, const std::vector<LineJitter>& jitters,
                      const Rational& jitter_bound) {
  if (jitters.size() != family.size()) {
    throw Error(ErrorKind::InvalidArgument, "need one jitter per ruling");
  }
  HardenedConfig out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    out.perturbed.push_back(perturb_line(family.line(i), jitters[i], jitter_bound));
  }
  const Rational radius_sq = delta_prime * delta_prime;
  for (std::size_t w = 0; w < witnesses.size(); ++w) {
    const RefutationWitness& witness = witnesses[w];
    out.inflated.push_back(inflate(witness.body, delta_prime));
    const ConvexBody& grown = out.inflated.back();
    for (std::size_t i : witness.stabbed) {
      if (!line_meets_interior(out.perturbed[i], grown)) out.report.lost_hits.emplace_back(w, i);
    }
    // Adversary lines are not perturbed; they must stay strictly outside the
    // closed inflation.
    for (std::size_t j = 0; j < witness.adversary.size(); ++j) {
      if (line_body_distance_sq(witness.adversary[j], witness.body) <= radius_sq) {
        out.report.new_red_hits.emplace_back(w, j);
      }
    }
  }
  out.report.colliding_pair = first_non_skew_pair(out.perturbed);
  if (!out.report.ok()) throw HardeningError(out.report);
  return out;
}

std::vector<LineJitter> random_jitters(std::size_t count, const Rational& bound, Rng& rng) {
  std::vector<LineJitter> out(count);
  for (auto& jitter : out) {
    for (auto& c : jitter) c = rng.uniform_rational(-bound, bound, 1000);
  }
  return out;
}

}  // namespace weaknet
