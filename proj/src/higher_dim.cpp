#include "weaknet/higher_dim.hpp"

#include "weaknet/error.hpp"

namespace weaknet {
namespace {

void require_flat_body(const ConvexBody& k) {
  if (k.inflation() != 0) {
    throw Error(ErrorKind::InvalidArgument, "lifted bodies must have zero inflation");
  }
}

}  // namespace

LineD::LineD(PointD anchor, VecX dir) : anchor_(std::move(anchor)), dir_(std::move(dir)) {
  if (anchor_.size() < 3 || anchor_.size() != dir_.size()) {
    throw Error(ErrorKind::InvalidArgument, "line needs matching coordinates of length >= 3");
  }
  if (dir_.isZero()) throw Error(ErrorKind::ZeroDirection, "line direction is zero");
}

PointD embed(const Point3& p, int d) {
  if (d < 3) throw Error(ErrorKind::InvalidArgument, "dimension must be at least 3");
  PointD out = PointD::Zero(d);
  out.head<3>() = p;
  return out;
}

LineD embed(const Line3& l, int d) { return LineD(embed(l.anchor(), d), embed(l.dir(), d)); }

Point3 truncate(const PointD& p) { return p.head<3>(); }

std::variant<Line3, Point3> project_line_to_S(const LineD& l) {
  const Vec3 dir = truncate(l.dir());
  if (dir.isZero()) return truncate(l.anchor());
  return Line3(truncate(l.anchor()), dir);
}

bool line_meets_embedded(const LineD& l, const ConvexBody& k) {
  require_flat_body(k);
  const auto extra_anchor = l.anchor().tail(l.dim() - 3);
  const auto extra_dir = l.dir().tail(l.dim() - 3);
  // The line reaches S where every extra coordinate vanishes.
  Eigen::Index pivot = 0;
  while (pivot < extra_dir.size() && extra_dir(pivot) == 0) ++pivot;
  if (pivot == extra_dir.size()) {
    if (!extra_anchor.isZero()) return false;
    return line_meets_hull(Line3(truncate(l.anchor()), truncate(l.dir())), k.vertices());
  }
  const Rational t = -extra_anchor(pivot) / extra_dir(pivot);
  const PointD p = l.at(t);
  if (!p.tail(l.dim() - 3).isZero()) return false;
  return point_in_hull(truncate(p), k.vertices());
}

bool projection_meets(const LineD& l, const ConvexBody& k) {
  require_flat_body(k);
  const auto projected = project_line_to_S(l);
  if (const auto* point = std::get_if<Point3>(&projected)) return point_in_hull(*point, k.vertices());
  return line_meets_hull(std::get<Line3>(projected), k.vertices());
}

ProjectionReport verify_projection_property(const LineD& l, const ConvexBody& k) {
  return ProjectionReport{line_meets_embedded(l, k), projection_meets(l, k)};
}

}  // namespace weaknet
