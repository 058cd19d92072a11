#include "weaknet/planar_rays.hpp"

#include <algorithm>

#include "weaknet/error.hpp"
#include "weaknet/hull2.hpp"
#include "weaknet/kernel.hpp"

namespace weaknet {
namespace {

// Angular order of nonzero planar vectors starting from the positive x-axis.
bool upper_half(const Vec2& v) { return v(1) > 0 || (v(1) == 0 && v(0) > 0); }

bool angle_less(const Vec2& a, const Vec2& b) {
  const bool ua = upper_half(a);
  const bool ub = upper_half(b);
  if (ua != ub) return ua;
  return cross2(a, b) > 0;
}

bool same_direction(const Vec2& a, const Vec2& b) { return cross2(a, b) == 0 && a.dot(b) > 0; }

std::optional<Line2> transversal_with_normal(const RayTriple& triple, const Vec2& normal) {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  std::optional<Rational> pinned;
  for (const auto& ray : triple.rays) {
    Rational f = normal.dot(ray.origin);
    const int g = Rational(normal.dot(ray.dir)).sign();
    if (g > 0) {
      if (!lower || f > *lower) lower = f;
    } else if (g < 0) {
      if (!upper || f < *upper) upper = f;
    } else {
      if (pinned && *pinned != f) return std::nullopt;
      pinned = f;
    }
  }
  Rational c;
  if (pinned) {
    c = *pinned;
  } else if (lower) {
    c = *lower;
  } else {
    c = *upper;
  }
  if ((lower && c < *lower) || (upper && c > *upper)) return std::nullopt;
  return Line2{normal, c};
}

void require_nonzero_dirs(const RayTriple& triple) {
  for (const auto& ray : triple.rays) {
    if (ray.dir.isZero()) throw Error(ErrorKind::ZeroDirection, "ray direction is zero");
  }
}

}  // namespace

ConvexRegion2::ConvexRegion2(std::vector<HalfPlane> halfplanes)
    : halfplanes_(std::move(halfplanes)) {}

bool ConvexRegion2::contains(const Point2& p) const {
  return std::all_of(halfplanes_.begin(), halfplanes_.end(),
                     [&](const HalfPlane& h) { return h.slack(p) >= 0; });
}

bool ConvexRegion2::strictly_contains(const Point2& p) const {
  return std::all_of(halfplanes_.begin(), halfplanes_.end(),
                     [&](const HalfPlane& h) { return h.normal.isZero() || h.slack(p) > 0; });
}

std::vector<Point2> ConvexRegion2::vertices() const {
  std::vector<Point2> out;
  const std::size_t n = halfplanes_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = halfplanes_[i];
      const auto& b = halfplanes_[j];
      const Rational det = cross2(a.normal, b.normal);
      if (det == 0) continue;
      // Cramer's rule on a.n . p = a.off, b.n . p = b.off.
      const Point2 p((a.offset * b.normal(1) - b.offset * a.normal(1)) / det,
                     (a.normal(0) * b.offset - b.normal(0) * a.offset) / det);
      if (!contains(p)) continue;
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  }
  if (out.size() > 2) {
    Point2 c = Point2::Zero();
    for (const auto& p : out) c += p;
    c /= Rational(static_cast<long>(out.size()));
    std::sort(out.begin(), out.end(),
              [&](const Point2& p, const Point2& q) { return angle_less(p - c, q - c); });
  }
  return out;
}

bool ConvexRegion2::is_empty() const {
  for (const auto& h : halfplanes_) {
    if (h.normal.isZero() && h.offset < 0) return true;
  }
  std::optional<Vec2> axis;
  bool spans_plane = false;
  for (const auto& h : halfplanes_) {
    if (h.normal.isZero()) continue;
    if (!axis) {
      axis = h.normal;
    } else if (cross2(*axis, h.normal) != 0) {
      spans_plane = true;
      break;
    }
  }
  if (!axis) return false;
  // Pointed regions that are nonempty have a vertex.
  if (spans_plane) return vertices().empty();

  // All normals parallel to axis: an interval of axis . p.
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  for (const auto& h : halfplanes_) {
    if (h.normal.isZero()) continue;
    const Rational scale = h.normal.dot(*axis) / axis->squaredNorm();
    const Rational bound = h.offset / scale;
    if (scale > 0) {
      if (!hi || bound < *hi) hi = bound;
    } else {
      if (!lo || bound > *lo) lo = bound;
    }
  }
  return lo && hi && *lo > *hi;
}

std::optional<Point2> ConvexRegion2::interior_point() const {
  const auto verts = vertices();
  if (verts.empty()) return std::nullopt;
  Point2 c = Point2::Zero();
  for (const auto& p : verts) c += p;
  c /= Rational(static_cast<long>(verts.size()));
  if (!strictly_contains(c)) return std::nullopt;
  return c;
}

ConvexRegion2 ConvexRegion2::intersected(const ConvexRegion2& other) const {
  std::vector<HalfPlane> all = halfplanes_;
  all.insert(all.end(), other.halfplanes_.begin(), other.halfplanes_.end());
  return ConvexRegion2(std::move(all));
}

bool line2_meets_ray(const Line2& line, const Ray2& ray) {
  const int f = Rational(line.normal.dot(ray.origin) - line.offset).sign();
  const int g = Rational(line.normal.dot(ray.dir)).sign();
  return f == 0 || f * g < 0;
}

std::optional<Line2> find_transversal(const RayTriple& triple) {
  require_nonzero_dirs(triple);
  std::vector<Vec2> critical;
  for (std::size_t i = 0; i < 3; ++i) {
    const Vec2 n = perp<Rational>(triple[i].dir);
    critical.push_back(n);
    critical.push_back(-n);
    for (std::size_t j = i + 1; j < 3; ++j) {
      const Vec2 e = triple[j].origin - triple[i].origin;
      if (e.isZero()) continue;
      critical.push_back(perp<Rational>(e));
      critical.push_back(-perp<Rational>(e));
    }
  }
  std::sort(critical.begin(), critical.end(), angle_less);
  critical.erase(std::unique(critical.begin(), critical.end(), same_direction), critical.end());

  std::vector<Vec2> candidates = critical;
  for (std::size_t i = 0; i < critical.size(); ++i) {
    const Vec2& a = critical[i];
    const Vec2& b = critical[(i + 1) % critical.size()];
    // Consecutive gaps never exceed a half turn because critical normals come
    // in opposite pairs; a half-turn gap is bisected by the quarter turn of a.
    candidates.push_back(cross2(a, b) > 0 ? Vec2(a + b) : perp<Rational>(a));
  }
  for (const auto& n : candidates) {
    if (auto line = transversal_with_normal(triple, n)) return line;
  }
  return std::nullopt;
}

bool directions_pairwise_nonparallel(const RayTriple& triple) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (cross2(triple[i].dir, triple[j].dir) == 0) return false;
    }
  }
  return true;
}

bool is_separated_triple(const RayTriple& triple) {
  require_nonzero_dirs(triple);
  return directions_pairwise_nonparallel(triple) && !find_transversal(triple);
}

Segment2 opposite_side(const RayTriple& triple, std::size_t i) {
  if (i > 2) throw Error(ErrorKind::InvalidArgument, "ray index out of range");
  if (orient2d(triple[0].origin, triple[1].origin, triple[2].origin) == 0) {
    throw Error(ErrorKind::DegenerateOriginTriangle, "ray origins are collinear");
  }
  if (!is_separated_triple(triple)) {
    throw Error(ErrorKind::NotSeparated, "ray triple is not separated");
  }
  const std::size_t j = (i + 1) % 3;
  const std::size_t k = (i + 2) % 3;
  const Segment2 side{triple[std::min(j, k)].origin, triple[std::max(j, k)].origin};
  // The two sides through origin_i meet ray i; the third must not.
  const Line2 support{perp<Rational>(Vec2(side.b - side.a)), perp<Rational>(Vec2(side.b - side.a)).dot(side.a)};
  if (line2_meets_ray(support, triple[i])) {
    throw Error(ErrorKind::NotSeparated, "ray meets the line of its opposite side");
  }
  return side;
}

ConvexRegion2 half_strip(const RayTriple& triple, std::size_t i) {
  const Segment2 side = opposite_side(triple, i);
  const Vec2& d = triple[i].dir;
  const Vec2 ns = perp<Rational>(Vec2(side.b - side.a));
  const Rational base = ns.dot(side.a);
  std::vector<HalfPlane> hs;
  const int g = Rational(ns.dot(d)).sign();
  if (g > 0) {
    hs.push_back({-ns, -base});
  } else if (g < 0) {
    hs.push_back({ns, base});
  } else {
    // Ray parallel to its side: the strip collapses onto the side's line.
    hs.push_back({ns, base});
    hs.push_back({-ns, -base});
    const Rational start = std::min(d.dot(side.a), d.dot(side.b));
    hs.push_back({-d, -start});
    return ConvexRegion2(std::move(hs));
  }
  const Vec2 m = perp<Rational>(d);
  const Rational ma = m.dot(side.a);
  const Rational mb = m.dot(side.b);
  hs.push_back({m, std::max(ma, mb)});
  hs.push_back({-m, -std::min(ma, mb)});
  return ConvexRegion2(std::move(hs));
}

ConvexRegion2 joint_region(const RayTriple& triple) {
  return half_strip(triple, 0).intersected(half_strip(triple, 1)).intersected(half_strip(triple, 2));
}

Triangle2 spanned_triangle(const RayTriple& triple, const Rational& t1, const Rational& t2,
                           const Rational& t3) {
  if (t1 < 0 || t2 < 0 || t3 < 0) {
    throw Error(ErrorKind::InvalidArgument, "ray parameters must be nonnegative");
  }
  return {triple[0].at(t1), triple[1].at(t2), triple[2].at(t3)};
}

bool triangle_contains(const Triangle2& tri, const Point2& p) {
  const Rational area = orient2d(tri.a, tri.b, tri.c);
  if (area == 0) {
    const std::array<Vec2, 3> pts{tri.a, tri.b, tri.c};
    return locate_in_convex_hull<Rational>(pts, p) != Containment::Outside;
  }
  const int s = area.sign();
  return Rational(orient2d(tri.a, tri.b, p)).sign() * s >= 0 &&
         Rational(orient2d(tri.b, tri.c, p)).sign() * s >= 0 &&
         Rational(orient2d(tri.c, tri.a, p)).sign() * s >= 0;
}

Rational interior_margin(const ConvexRegion2& region, const Point2& p) {
  std::optional<Rational> best;
  for (const auto& h : region.halfplanes()) {
    if (h.normal.isZero()) continue;
    const Rational slack = h.slack(p);
    if (slack <= 0) return Rational(0);
    Rational m = slack * slack / h.normal.squaredNorm();
    if (!best || m < *best) best = std::move(m);
  }
  return best.value_or(Rational(0));
}

}  // namespace weaknet
