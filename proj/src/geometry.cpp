#include "weaknet/geometry.hpp"

#include <limits>

#include "weaknet/error.hpp"
#include "weaknet/hull2.hpp"
#include "weaknet/kernel.hpp"

namespace weaknet {
namespace {

Eigen::Index first_nonzero(const Vec3& v) {
  for (Eigen::Index i = 0; i < 3; ++i) {
    if (v(i) != 0) return i;
  }
  return -1;
}

// Parallel projection along dir onto the coordinate plane x_k = 0 with k the
// first nonzero component of dir. Injective on every plane transverse to dir,
// so hull combinatorics of a shadow are preserved.
struct ShadowProjector {
  Vec3 dir;
  Eigen::Index k;

  explicit ShadowProjector(const Vec3& d) : dir(d), k(first_nonzero(d)) {}

  Vec2 operator()(const Point3& p) const {
    const Vec3 q = p - dir * (p(k) / dir(k));
    return k == 0 ? Vec2(q(1), q(2)) : (k == 1 ? Vec2(q(0), q(2)) : Vec2(q(0), q(1)));
  }
};

struct Shadow {
  std::vector<Vec2> points;
  std::vector<std::size_t> hull;
  Vec2 line_point;
  Containment where;
};

Shadow shadow_of(const Line3& l, std::span<const Point3> pts) {
  const ShadowProjector project(l.dir());
  Shadow s;
  s.points.reserve(pts.size());
  for (const auto& p : pts) s.points.push_back(project(p));
  s.hull = convex_hull_indices<Rational>(s.points);
  s.line_point = project(l.anchor());
  s.where = locate_in_hull<Rational>(s.points, s.hull, s.line_point);
  return s;
}

// Index of the coordinate to drop when mapping a plane with this normal to 2D.
Eigen::Index dominant_axis(const Vec3& n) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < 3; ++i) {
    if (abs(n(i)) > abs(n(best))) best = i;
  }
  return best;
}

Vec2 drop_axis(const Point3& p, Eigen::Index k) {
  return k == 0 ? Vec2(p(1), p(2)) : (k == 1 ? Vec2(p(0), p(2)) : Vec2(p(0), p(1)));
}

bool line_meets_segment(const Line3& l, const Point3& a, const Point3& b) {
  const Vec3 e = b - a;
  const Vec3 c1 = (a - l.anchor()).cross(l.dir());
  const Vec3 c2 = e.cross(l.dir());
  if (c2.isZero()) return c1.isZero();  // segment parallel to the line
  if ((a - l.anchor()).dot(l.dir().cross(e)) != 0) return false;  // not coplanar
  // a + u e lies on the line iff c1 + u c2 = 0.
  const Rational u = -c1.dot(c2) / c2.squaredNorm();
  return u >= 0 && u <= 1;
}

}  // namespace

Line3::Line3(const Point3& anchor, const Vec3& dir) {
  const Eigen::Index k = first_nonzero(dir);
  if (k < 0) throw Error(ErrorKind::ZeroDirection, "line direction is the zero vector");
  dir_ = dir / dir(k);
  anchor_ = reject_from<Rational, 3>(anchor, dir_);
}

Line3 Line3::through(const Point3& p, const Point3& q) { return Line3(p, q - p); }

ConvexPolygon3::ConvexPolygon3(std::vector<Point3> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n == 0) throw Error(ErrorKind::InvalidPolygon, "polygon needs at least one vertex");
  if (n == 1) return;
  if (n == 2) {
    if (vertices_[0] == vertices_[1]) throw Error(ErrorKind::InvalidPolygon, "repeated vertex");
    return;
  }
  const Vec3 normal = (vertices_[1] - vertices_[0]).cross(vertices_[2] - vertices_[0]);
  if (normal.isZero()) throw Error(ErrorKind::InvalidPolygon, "first three vertices collinear");
  for (std::size_t j = 3; j < n; ++j) {
    if ((vertices_[j] - vertices_[0]).dot(normal) != 0) {
      throw Error(ErrorKind::InvalidPolygon, "vertices are not coplanar");
    }
  }
  // Strictly left of every directed edge <=> strictly convex, cyclic order.
  for (std::size_t i = 0; i < n; ++i) {
    const Point3& a = vertices_[i];
    const Vec3 e = vertices_[(i + 1) % n] - a;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (e.cross(vertices_[j] - a).dot(normal) <= 0) {
        throw Error(ErrorKind::InvalidPolygon, "vertices not in convex cyclic position");
      }
    }
  }
}

std::optional<Plane3> ConvexPolygon3::plane() const {
  if (vertices_.size() < 3) return std::nullopt;
  const Vec3 normal = (vertices_[1] - vertices_[0]).cross(vertices_[2] - vertices_[0]);
  return Plane3::through(vertices_[0], normal);
}

ConvexBody::ConvexBody(std::vector<Point3> vertices, Rational inflation)
    : vertices_(std::move(vertices)), inflation_(std::move(inflation)) {
  if (vertices_.empty()) throw Error(ErrorKind::InvalidArgument, "convex body without vertices");
  if (inflation_ < 0) throw Error(ErrorKind::InvalidArgument, "negative inflation radius");
}

bool line_contains_point(const Line3& l, const Point3& p) {
  return (p - l.anchor()).cross(l.dir()).isZero();
}

Rational line_line_dist_sq(const Line3& a, const Line3& b) {
  const Vec3 n = a.dir().cross(b.dir());
  if (n.isZero()) return point_line_dist_sq<Rational, 3>(b.anchor(), a.anchor(), a.dir());
  const Rational wn = (b.anchor() - a.anchor()).dot(n);
  return wn * wn / n.squaredNorm();
}

LinePlaneIntersection line_plane_intersection(const Line3& l, const Plane3& plane) {
  const Rational nd = plane.normal.dot(l.dir());
  if (nd == 0) {
    if (plane.contains(l.anchor())) return ContainedInPlane{};
    return ParallelDisjoint{};
  }
  return l.at((plane.offset - plane.normal.dot(l.anchor())) / nd);
}

bool line_intersects_polygon(const Line3& l, const ConvexPolygon3& polygon) {
  const auto& v = polygon.vertices();
  if (v.size() == 1) return line_contains_point(l, v[0]);
  if (v.size() == 2) return line_meets_segment(l, v[0], v[1]);

  const Plane3 plane = *polygon.plane();
  const auto hit = line_plane_intersection(l, plane);
  if (std::holds_alternative<ParallelDisjoint>(hit)) return false;
  const std::size_t n = v.size();
  if (const auto* p = std::get_if<Point3>(&hit)) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((v[(i + 1) % n] - v[i]).cross(*p - v[i]).dot(plane.normal) < 0) return false;
    }
    return true;
  }
  // Coplanar: the line misses iff all vertices are strictly on one side of it.
  bool left = false;
  bool right = false;
  for (const auto& q : v) {
    const Rational side = l.dir().cross(q - l.anchor()).dot(plane.normal);
    if (side >= 0) left = true;
    if (side <= 0) right = true;
  }
  return left && right;
}

bool line_meets_hull(const Line3& l, std::span<const Point3> points) {
  return shadow_of(l, points).where != Containment::Outside;
}

Rational line_polytope_distance_sq(const Line3& l, std::span<const Point3> points) {
  const Shadow s = shadow_of(l, points);
  if (s.where != Containment::Outside) return Rational(0);
  if (s.hull.size() == 1) {
    return point_line_dist_sq<Rational, 3>(points[s.hull[0]], l.anchor(), l.dir());
  }
  // The nearest point of the shadow lies on a hull edge; the hull edge is the
  // shadow of a polytope edge, and distance to the line is shadow distance.
  const std::size_t edges = s.hull.size() == 2 ? 1 : s.hull.size();
  std::optional<Rational> best;
  for (std::size_t i = 0; i < edges; ++i) {
    const Point3& a = points[s.hull[i]];
    const Point3& b = points[s.hull[(i + 1) % s.hull.size()]];
    Rational d = segment_line_dist_sq<Rational, 3>(a, b, l.anchor(), l.dir());
    if (!best || d < *best) best = std::move(d);
  }
  return *best;
}

Rational line_body_distance_sq(const Line3& l, const ConvexBody& body) {
  return line_polytope_distance_sq(l, body.vertices());
}

bool line_meets_body(const Line3& l, const ConvexBody& body) {
  if (body.inflation() == 0) return line_meets_hull(l, body.vertices());
  return line_body_distance_sq(l, body) <= body.inflation() * body.inflation();
}

bool line_meets_interior(const Line3& l, const ConvexBody& body) {
  if (body.inflation() > 0) {
    return line_body_distance_sq(l, body) < body.inflation() * body.inflation();
  }
  if (affine_dimension(body.vertices()) < 3) return false;
  // The shadow of the interior is the interior of the shadow.
  return shadow_of(l, body.vertices()).where == Containment::Interior;
}

int affine_dimension(std::span<const Point3> points) {
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "empty point set");
  const Point3& o = points[0];
  std::optional<Vec3> e1;
  std::optional<Vec3> normal;
  int dim = 0;
  for (const auto& p : points) {
    const Vec3 w = p - o;
    if (dim == 0) {
      if (!w.isZero()) {
        e1 = w;
        dim = 1;
      }
    } else if (dim == 1) {
      const Vec3 n = e1->cross(w);
      if (!n.isZero()) {
        normal = n;
        dim = 2;
      }
    } else if (normal->dot(w) != 0) {
      return 3;
    }
  }
  return dim;
}

bool point_in_hull(const Point3& p, std::span<const Point3> points) {
  const int dim = affine_dimension(points);
  std::vector<Point3> with_p(points.begin(), points.end());
  with_p.push_back(p);
  if (affine_dimension(with_p) > dim) return false;

  switch (dim) {
    case 0:
      return p == points[0];
    case 1: {
      const Point3& o = points[0];
      Vec3 e = Vec3::Zero();
      for (const auto& q : points) {
        if (q != o) {
          e = q - o;
          break;
        }
      }
      Rational lo(0);
      Rational hi(0);
      for (const auto& q : points) {
        const Rational u = (q - o).dot(e);
        if (u < lo) lo = u;
        if (u > hi) hi = u;
      }
      const Rational u = (p - o).dot(e);
      return u >= lo && u <= hi;
    }
    case 2: {
      Vec3 normal = Vec3::Zero();
      for (std::size_t i = 1; i < points.size() && normal.isZero(); ++i) {
        for (std::size_t j = i + 1; j < points.size() && normal.isZero(); ++j) {
          normal = (points[i] - points[0]).cross(points[j] - points[0]);
        }
      }
      const Eigen::Index k = dominant_axis(normal);
      std::vector<Vec2> flat;
      flat.reserve(points.size());
      for (const auto& q : points) flat.push_back(drop_axis(q, k));
      return locate_in_convex_hull<Rational>(flat, drop_axis(p, k)) != Containment::Outside;
    }
    default:
      break;
  }
  // Full-dimensional: by Caratheodory p lies in some tetrahedron of the vertices.
  const std::size_t n = points.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          const Rational vol = orient3d<Rational>(points[a], points[b], points[c], points[d]);
          if (vol == 0) continue;
          const int s = vol.sign();
          if (orient3d<Rational>(p, points[b], points[c], points[d]).sign() * s >= 0 &&
              orient3d<Rational>(points[a], p, points[c], points[d]).sign() * s >= 0 &&
              orient3d<Rational>(points[a], points[b], p, points[d]).sign() * s >= 0 &&
              orient3d<Rational>(points[a], points[b], points[c], p).sign() * s >= 0) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

std::optional<std::pair<std::size_t, std::size_t>> first_non_skew_pair(
    std::span<const Line3> lines) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Vec3 n = lines[i].dir().cross(lines[j].dir());
      if (n.isZero() || (lines[j].anchor() - lines[i].anchor()).dot(n) == 0) {
        return std::make_pair(i, j);
      }
    }
  }
  return std::nullopt;
}

bool pairwise_skew(std::span<const Line3> lines) { return !first_non_skew_pair(lines); }

Line3 perturb_line(const Line3& l, const LineJitter& jitter, const Rational& bound) {
  for (const auto& j : jitter) {
    if (abs(j) > bound) throw Error(ErrorKind::InvalidArgument, "jitter exceeds its bound");
  }
  const Vec3 da(jitter[0], jitter[1], jitter[2]);
  const Vec3 dd(jitter[3], jitter[4], jitter[5]);
  return Line3(l.anchor() + da, l.dir() + dd);
}

}  // namespace weaknet
