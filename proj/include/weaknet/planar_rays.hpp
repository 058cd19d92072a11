#pragma once

// Planar rays, half-strips and joint regions.
//
// A triple of rays is *separated* when the directions are pairwise
// non-parallel and no line meets all three rays. For a separated triple with
// origin triangle X, ray i is disjoint from exactly one side s_i of X (the side
// opposite its own origin); the half-strip X_i sweeps s_i along ray i, and the
// joint region is X_1 n X_2 n X_3. Every point of the joint region lies in
// every triangle with one vertex on each ray.

#include <array>
#include <optional>
#include <vector>

#include "weaknet/types.hpp"

namespace weaknet {

struct Ray2 {
  Point2 origin;
  Vec2 dir;

  Point2 at(const Rational& t) const { return origin + dir * t; }
};

/// {p : normal . p = offset}
struct Line2 {
  Vec2 normal;
  Rational offset;
};

/// {p : normal . p <= offset}
struct HalfPlane {
  Vec2 normal;
  Rational offset;

  Rational slack(const Point2& p) const { return offset - normal.dot(p); }
};

struct Segment2 {
  Point2 a;
  Point2 b;
};

struct RayTriple {
  std::array<Ray2, 3> rays;

  const Ray2& operator[](std::size_t i) const { return rays[i]; }
  Ray2& operator[](std::size_t i) { return rays[i]; }
};

struct Triangle2 {
  Point2 a;
  Point2 b;
  Point2 c;
};

/// Intersection of closed half-planes; possibly empty, unbounded or flat.
class ConvexRegion2 {
 public:
  ConvexRegion2() = default;
  explicit ConvexRegion2(std::vector<HalfPlane> halfplanes);

  const std::vector<HalfPlane>& halfplanes() const noexcept { return halfplanes_; }

  bool contains(const Point2& p) const;
  bool strictly_contains(const Point2& p) const;

  /// Exact two-variable feasibility.
  bool is_empty() const;

  /// Distinct feasible pairwise intersections of the bounding lines, in
  /// counter-clockwise order around their centroid. Empty when the region has
  /// no vertex (empty, or all normals parallel).
  std::vector<Point2> vertices() const;

  /// Centroid of the vertices when it lies strictly inside, nullopt otherwise.
  std::optional<Point2> interior_point() const;

  ConvexRegion2 intersected(const ConvexRegion2& other) const;

 private:
  std::vector<HalfPlane> halfplanes_;
};

/// normal != 0 required. Exact sign analysis of f(p) = normal . p - offset.
bool line2_meets_ray(const Line2& line, const Ray2& ray);

/// A line meeting all three rays, if one exists. Decided exactly by sweeping
/// the line normal over the circle: feasibility is constant on each open arc
/// between critical normals (perpendicular to a ray direction or to the
/// difference of two origins), so testing the critical normals and one normal
/// inside each arc is complete.
std::optional<Line2> find_transversal(const RayTriple& triple);

bool directions_pairwise_nonparallel(const RayTriple& triple);

bool is_separated_triple(const RayTriple& triple);

/// Side of the origin triangle disjoint from ray i (0-based), i.e. the segment
/// joining the other two origins. Throws DegenerateOriginTriangle for
/// collinear origins and NotSeparated when the triple is not separated.
Segment2 opposite_side(const RayTriple& triple, std::size_t i);

/// opposite_side(i) swept along ray i: three half-planes (the side's line and
/// the two lines through its endpoints parallel to the ray).
ConvexRegion2 half_strip(const RayTriple& triple, std::size_t i);

/// half_strip(0) n half_strip(1) n half_strip(2).
ConvexRegion2 joint_region(const RayTriple& triple);

/// Triangle with vertex origin_i + t_i dir_i on each ray (t_i >= 0).
Triangle2 spanned_triangle(const RayTriple& triple, const Rational& t1, const Rational& t2,
                           const Rational& t3);

/// Boundary counts as contained; degenerate triangles are handled exactly.
bool triangle_contains(const Triangle2& tri, const Point2& p);

/// Squared distance from p to the nearest bounding line when p satisfies every
/// constraint strictly, 0 otherwise.
Rational interior_margin(const ConvexRegion2& region, const Point2& p);

}  // namespace weaknet
