#pragma once

// Exact 3D primitives: lines, planes, planar convex polygons, convex polytopes
// (optionally inflated by a ball), and the incidence and squared-distance
// predicates the rest of the library is built on. No square roots are ever
// taken; distances are compared through their squares.

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "weaknet/types.hpp"

namespace weaknet {

/// An unoriented line in R^3 stored in canonical form: the direction is scaled
/// so its first nonzero component is 1 and the anchor is the foot of the
/// perpendicular from the origin. Two Line3 values compare equal iff they
/// describe the same point set.
class Line3 {
 public:
  /// Throws ErrorKind::ZeroDirection when dir == 0.
  Line3(const Point3& anchor, const Vec3& dir);

  static Line3 through(const Point3& p, const Point3& q);

  const Point3& anchor() const noexcept { return anchor_; }
  const Vec3& dir() const noexcept { return dir_; }

  Point3 at(const Rational& t) const { return anchor_ + dir_ * t; }

  friend bool operator==(const Line3& a, const Line3& b) {
    return a.anchor_ == b.anchor_ && a.dir_ == b.dir_;
  }

 private:
  Point3 anchor_;
  Vec3 dir_;
};

/// {p : normal . p = offset}
struct Plane3 {
  Vec3 normal;
  Rational offset;

  static Plane3 through(const Point3& p, const Vec3& normal) { return {normal, normal.dot(p)}; }
  bool contains(const Point3& p) const { return normal.dot(p) == offset; }
};

struct ContainedInPlane {};
struct ParallelDisjoint {};
using LinePlaneIntersection = std::variant<Point3, ContainedInPlane, ParallelDisjoint>;

/// Planar convex polygon given by its vertices in cyclic order. One vertex (a
/// point) and two vertices (a segment) are legal. Construction verifies
/// coplanarity, strict convex position and the cyclic order exactly.
class ConvexPolygon3 {
 public:
  /// Throws ErrorKind::InvalidPolygon if any invariant fails.
  explicit ConvexPolygon3(std::vector<Point3> vertices);

  const std::vector<Point3>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  /// Supporting plane; only defined for three or more vertices. Its normal is
  /// oriented so the vertices run counter-clockwise around it.
  std::optional<Plane3> plane() const;

 private:
  std::vector<Point3> vertices_;
};

/// conv(vertices) plus a closed ball of radius `inflation` (Minkowski sum).
class ConvexBody {
 public:
  /// Throws ErrorKind::InvalidArgument on an empty vertex list or negative radius.
  explicit ConvexBody(std::vector<Point3> vertices, Rational inflation = Rational(0));

  const std::vector<Point3>& vertices() const noexcept { return vertices_; }
  const Rational& inflation() const noexcept { return inflation_; }

 private:
  std::vector<Point3> vertices_;
  Rational inflation_;
};

bool line_contains_point(const Line3& l, const Point3& p);

/// Exact squared distance between two lines; 0 iff they meet or coincide.
Rational line_line_dist_sq(const Line3& a, const Line3& b);

LinePlaneIntersection line_plane_intersection(const Line3& l, const Plane3& plane);

/// True iff l meets conv(P). Transversal lines are reduced to a point-in-polygon
/// test in the polygon's plane; lines inside that plane to a side test.
bool line_intersects_polygon(const Line3& l, const ConvexPolygon3& polygon);

/// True iff l meets conv(points). Projects along l onto a coordinate plane,
/// where the line becomes one point, and decides containment in the planar hull.
bool line_meets_hull(const Line3& l, std::span<const Point3> points);

/// Squared distance between l and conv(points): zero when the line meets the
/// hull, otherwise the minimum over the silhouette features (the vertices and
/// edges that bound the hull's shadow along l).
Rational line_polytope_distance_sq(const Line3& l, std::span<const Point3> points);

/// Distance to the bare polytope of K; the inflation radius is not subtracted.
Rational line_body_distance_sq(const Line3& l, const ConvexBody& body);

/// distance^2 <= inflation^2.
bool line_meets_body(const Line3& l, const ConvexBody& body);

/// Strict version. With inflation 0 the polytope must be full-dimensional and
/// the line must cross its interior; lower-dimensional polytopes have none.
bool line_meets_interior(const Line3& l, const ConvexBody& body);

/// Dimension of the affine hull (0..3) of a nonempty point set.
int affine_dimension(std::span<const Point3> points);

/// Exact, boundary inclusive.
bool point_in_hull(const Point3& p, std::span<const Point3> points);

/// General position for this library: every pair is non-parallel and disjoint.
bool pairwise_skew(std::span<const Line3> lines);

/// First pair (i < j) violating pairwise_skew, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_non_skew_pair(
    std::span<const Line3> lines);

using LineJitter = std::array<Rational, 6>;

/// Adds jitter[0..3) to the anchor and jitter[3..6) to the direction of the
/// canonical representation. Throws InvalidArgument if some |jitter[i]| > bound
/// and ZeroDirection if the perturbed direction vanishes.
Line3 perturb_line(const Line3& l, const LineJitter& jitter, const Rational& bound);

}  // namespace weaknet
