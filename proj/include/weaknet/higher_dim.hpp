#pragma once

// Lifting the planar-in-R^3 configuration into R^d. S is the span of the first
// three coordinate axes; projecting onto S is truncation.

#include <variant>

#include "weaknet/geometry.hpp"

namespace weaknet {

/// A line in R^d, d >= 3. Not canonicalized.
class LineD {
 public:
  /// Throws InvalidArgument on mismatched sizes or d < 3, ZeroDirection on dir == 0.
  LineD(PointD anchor, VecX dir);

  Eigen::Index dim() const noexcept { return anchor_.size(); }
  const PointD& anchor() const noexcept { return anchor_; }
  const VecX& dir() const noexcept { return dir_; }
  PointD at(const Rational& t) const { return anchor_ + dir_ * t; }

 private:
  PointD anchor_;
  VecX dir_;
};

PointD embed(const Point3& p, int d);
LineD embed(const Line3& l, int d);

/// Drops every coordinate past the third.
Point3 truncate(const PointD& p);

/// Orthogonal projection onto S: a line, or a point when dir is orthogonal to S.
std::variant<Line3, Point3> project_line_to_S(const LineD& l);

/// Whether l meets the zero-padded copy of conv(K). K must have inflation 0.
bool line_meets_embedded(const LineD& l, const ConvexBody& k);

/// Whether the projection of l (line or point) meets conv(K).
bool projection_meets(const LineD& l, const ConvexBody& k);

struct ProjectionReport {
  bool lifted_hits = false;
  bool projection_hits = false;
  /// Only the forward implication is checked; a projection hit alone is fine.
  bool violated() const { return lifted_hits && !projection_hits; }
};

ProjectionReport verify_projection_property(const LineD& l, const ConvexBody& k);

}  // namespace weaknet
