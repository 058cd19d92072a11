#pragma once

// Rulings of the saddle z = xy and the stabbing witness built from them.
//
// lambda(a) = {(a, t, a t)} and ell(b) = {(t, b, b t)} are the two ruling
// families. Given rulings B and any finite red family R with B n R empty, the
// witness is the convex hull of the points where the plane z = b* x + s cuts the
// rulings of B. It meets every line of B in exactly one vertex and misses R.

#include <optional>
#include <string>
#include <vector>

#include "weaknet/geometry.hpp"

namespace weaknet {

Line3 lambda_line(const Rational& alpha);
Line3 ell_line(const Rational& beta);

/// A strictly increasing list of positive parameters.
class RulingFamily {
 public:
  /// Throws InvalidArgument unless every parameter is positive and the list is
  /// strictly increasing.
  explicit RulingFamily(std::vector<Rational> params);

  /// 1, 2, ..., n.
  static RulingFamily integers(std::size_t n);

  const std::vector<Rational>& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return params_.size(); }
  Line3 line(std::size_t i) const { return lambda_line(params_.at(i)); }
  std::vector<Line3> lines() const;

 private:
  std::vector<Rational> params_;
};

/// How a line sits relative to the saddle surface.
struct SigmaClass {
  enum class Kind { OnSigmaLambda, OnSigmaEll, Secant };
  Kind kind;
  /// The ruling parameter for the two on-surface kinds.
  Rational param;
  /// Distinct rational y-coordinates of the surface points of a secant line.
  std::vector<Rational> y_values;
  /// Number of irrational crossings (0 or 2); these never matter downstream
  /// because b* is certified by a direct distance test.
  int irrational_roots = 0;
};

SigmaClass classify_vs_sigma(const Line3& l);

/// Smallest positive integer b such that no line of r_prime meets ell(b),
/// certified by line_line_dist_sq > 0.
Rational choose_beta_star(const std::vector<Line3>& r_prime);

struct WitnessPlan {
  Rational beta_star;
  Rational s;
  /// min over R' of dist^2(ell(b*), r); nullopt stands for +infinity (R' empty).
  std::optional<Rational> delta_sq;
  /// Smallest parameter among the chosen rulings.
  Rational alpha_min;
  /// Indices into the family, ordered by parameter.
  std::vector<std::size_t> b_indices;
  std::vector<Rational> b_params;
  /// Indices into R of the on-surface lambda lines and of the rest.
  std::vector<std::size_t> r_sigma;
  std::vector<std::size_t> r_prime;
};

/// Throws EmptyB when b_indices is empty and NonDisjointBR when some chosen
/// ruling also appears in R. s is the largest 1/i with
/// s^2 (1 + 1/alpha_min)^2 < delta_sq (s = 1 when R' is empty).
WitnessPlan witness_plan(const RulingFamily& family, const std::vector<std::size_t>& b_indices,
                         const std::vector<Line3>& red);

/// (alpha, b* + s/alpha, b* alpha + s); throws ZeroAlpha for alpha = 0.
Point3 witness_point(const Rational& alpha, const Rational& beta_star, const Rational& s);

/// Vertices in increasing alpha, which is convex cyclic order on one branch of
/// the hyperbola. Convexity is re-checked; failure throws ConvexityCheckFailed.
ConvexPolygon3 build_witness(const WitnessPlan& plan);

struct VerificationReport {
  /// Indices into the blue list that meet the witness in a single vertex.
  std::vector<std::size_t> stabbed;
  /// Indices into the red list that miss the witness.
  std::vector<std::size_t> missed;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

VerificationReport verify_witness(const ConvexPolygon3& witness, const std::vector<Line3>& blue,
                                  const std::vector<Line3>& red);

/// True iff l meets the polygon in exactly one point and that point is a vertex.
bool contact_is_single_vertex(const Line3& l, const ConvexPolygon3& polygon);

}  // namespace weaknet
