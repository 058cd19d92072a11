#pragma once

// The red/blue cube gadget.
//
// Three blue lines carry disjoint edges of the cube [-1, 1]^3:
//   l_x = (t, 1, -1),  l_y = (-1, t, 1),  l_z = (1, -1, t).
// Four red lines sit close to the main diagonals. If a triangle has one vertex
// on each blue line and no vertex in [-2, 2]^3, some red line crosses its
// interior. Projecting along a diagonal turns this into a statement about
// separated ray triples whose joint region contains the origin.
//
// Three such cubes, far apart, plus a thirteenth red line through the centroid
// of their centers give 9 blue and 13 red lines such that every convex set
// meeting all blue lines meets a red one.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weaknet/geometry.hpp"
#include "weaknet/planar_rays.hpp"

namespace weaknet {

class Rng;

/// Perturbation budget for which the diagonal claim was verified; produced by
/// tools/derive_claim_eps (start at 1/100, halve on any counterexample, 10^4
/// trials, seed 0).
inline constexpr const char* kClaimEpsilon = "1/100";

std::array<Line3, 3> blue_lines();

/// Directions (1,1,1), (1,1,-1), (1,-1,1), (-1,1,1): diagonal 1..4.
std::array<Vec3, 4> diagonal_directions();
std::array<Line3, 4> main_diagonals();

/// Point of blue line `axis` (0 = l_x, 1 = l_y, 2 = l_z) at parameter t.
Point3 blue_point(int axis, const Rational& t);

struct Triangle3 {
  std::array<Point3, 3> v;

  ConvexBody body() const { return ConvexBody({v[0], v[1], v[2]}); }
};

/// conv{(x1, 1, -1), (-1, x2, 1), (1, -1, x3)}.
Triangle3 triangle_T(const Rational& x1, const Rational& x2, const Rational& x3);

/// Whether l crosses the relative interior of a non-degenerate triangle.
bool line_meets_triangle_interior(const Line3& l, const Triangle3& tri);

/// For a line crossing the triangle's plane transversally inside the triangle:
/// the smallest barycentric coordinate of the crossing (0 on the boundary).
std::optional<Rational> crossing_depth(const Line3& l, const Triangle3& tri);

struct Ray3 {
  Point3 origin;
  Vec3 dir;
};

/// Orthogonal projection onto u-perp in a fixed rational orthogonal basis.
/// Coordinates are (p . b1 / |b1|^2, p . b2 / |b2|^2), a linear image of the
/// true projection, so incidence and convexity are preserved exactly.
class ProjectionFrame {
 public:
  /// Uses the declared bases for the four diagonal directions, otherwise
  /// b1 = u x e_k (k the smallest |u_k|), b2 = u x b1. Throws ZeroDirection.
  static ProjectionFrame along(const Vec3& u);

  const Vec3& u() const noexcept { return u_; }
  const Vec3& b1() const noexcept { return b1_; }
  const Vec3& b2() const noexcept { return b2_; }

  Point2 point(const Point3& p) const;
  /// nullopt when d is parallel to u.
  std::optional<Vec2> direction(const Vec3& d) const;
  /// A ray parallel to u collapses to a point.
  std::variant<Ray2, Point2> ray(const Ray3& r) const;

 private:
  ProjectionFrame(Vec3 u, Vec3 b1, Vec3 b2) : u_(std::move(u)), b1_(std::move(b1)), b2_(std::move(b2)) {}
  Vec3 u_;
  Vec3 b1_;
  Vec3 b2_;
};

/// Sign of the parameter each ray of a triple covers, per blue line.
using SignPattern = std::array<int, 3>;

struct DiagonalRays {
  int which;
  SignPattern r_signs;
  SignPattern q_signs;
  std::array<Ray3, 3> r;
  std::array<Ray3, 3> q;
};

/// Blue-line rays {x_i : s_i x_i >= 2}, origin at parameter 2 s_i, one triple
/// per sign pattern covered by diagonal `which` (1..4). Diagonals 2 and 4 are
/// the cyclic coordinate shifts of diagonal 3.
DiagonalRays rays_for_diagonal(int which);

struct TripleCheck {
  RayTriple projected;
  bool separated = false;
  bool nonempty = false;
  /// interior_margin of the origin in the joint region (0 if not interior).
  Rational origin_margin;
  bool ok() const { return separated && nonempty && origin_margin > 0; }
};

struct JointRegionCaseReport {
  int which;
  TripleCheck r;
  TripleCheck q;
  bool ok() const { return r.ok() && q.ok(); }
};

JointRegionCaseReport check_joint_region_case(int which);

/// Same, projecting along an arbitrary direction u instead of the diagonal.
JointRegionCaseReport check_joint_region_case(int which, const Vec3& u);

/// u . u' > 0, (u . u')^2 > (1 - eps)^2 |u|^2 |u'|^2 and the line's squared
/// distance to the origin is below eps^2: the rational form of
/// "within eps of the origin and unit directions with dot product > 1 - eps".
struct PerturbationCert {
  Vec3 base;
  Point3 anchor;
  Vec3 dir;
  Rational eps;

  bool valid() const;
  Line3 line() const { return Line3(anchor, dir); }
};

/// Random certified eps-perturbation of diagonal `which` (1..4), drawn close to
/// the edge of the admissible cone so the claim is stressed.
PerturbationCert sample_perturbation(int which, const Rational& eps, Rng& rng);

struct DiagClaimReport {
  Rational eps;
  long trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::array<Rational, 3>> counterexamples;
  /// Over all trials, the smallest best crossing depth.
  std::optional<Rational> worst_depth;
  std::array<long, 4> certified_by{0, 0, 0, 0};
  bool ok() const { return counterexamples.empty(); }
};

/// Index of the first line in `reds` crossing the interior of tri, and the depth
/// of the deepest crossing over all of them.
struct ClaimHit {
  std::optional<int> first;
  std::optional<Rational> best_depth;
};
ClaimHit diagonal_hit(const std::array<Line3, 4>& reds, const Triangle3& tri);

/// Samples triangles T(x) with |x_i| >= 2 (all sign patterns, magnitudes
/// log-uniform in [2, 1000]) and fresh perturbations for each trial; eps = 0
/// uses the exact diagonals.
DiagClaimReport verify_diag_claim(const Rational& eps, long trials, std::uint64_t seed);

struct Placement {
  Mat3 rotation;
  Vec3 center;

  Point3 apply(const Point3& p) const { return rotation * p + center; }
  Line3 apply(const Line3& l) const { return Line3(apply(l.anchor()), rotation * l.dir()); }
};

/// The exact rotation of the quaternion (a, b, c, d) != 0; rational entries.
Mat3 rotation_from_quaternion(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d);

/// Centers scale * e_1, scale * e_2, scale * e_3 (an exactly equilateral
/// triangle) with three fixed distinct rational rotations.
std::array<Placement, 3> default_placements(const Rational& scale);

struct MultiCubeConfig {
  std::array<Placement, 3> placements;
  Rational eps;
  std::uint64_t seed = 0;
  /// Cube c, blue line a at index 3c + a.
  std::vector<Line3> blue;
  /// Cube c, diagonal j (0-based) at index 4c + j; the axis line at index 12.
  std::vector<Line3> red;
  /// Local-frame certificates of the 12 perturbed diagonals.
  std::vector<PerturbationCert> certs;

  static std::string blue_label(std::size_t i);
  static std::string red_label(std::size_t i);
};

/// Validates the placements (orthogonality defect and equilateral defect at
/// most 1e-6, centers at least 100 apart, not collinear), perturbs each cube's
/// diagonals by eps (seeded) and adds the axis line through the centroid of the
/// centers, normal to their plane. Throws DegeneratePlacement on any failure,
/// including a non-skew pair among the 22 lines.
MultiCubeConfig assemble_three_cubes(const std::array<Placement, 3>& placements,
                                     const Rational& eps, std::uint64_t seed);

enum class SampleRegime { Far, Inside, Mixed };

struct NineThirteenReport {
  long trials = 0;
  std::uint64_t seed = 0;
  /// Certifying red index per trial, -1 when no red line meets the hull.
  std::vector<int> certificates;
  /// Every red index meeting K, per trial, in increasing order.
  std::vector<std::vector<int>> hitting;
  std::vector<SampleRegime> regimes;
  std::vector<long> failures;
  bool ok() const { return failures.empty(); }
};

/// Samples K = conv{q_1..q_9}, one point per blue line, cycling through the
/// far / inside / mixed regimes, and records every red line meeting K; the
/// first one is the trial's certificate.
NineThirteenReport verify_nine_thirteen(const MultiCubeConfig& config, long trials,
                                        std::uint64_t seed);

std::string regime_name(SampleRegime regime);

}  // namespace weaknet
