#pragma once

// Scalar-generic predicates and squared-distance formulas. Every function is
// a polynomial or rational expression in its inputs, so instantiating with an
// exact field gives exact answers; instantiating with double gives the usual
// floating-point approximation (used only by numeric test oracles).

#include <Eigen/Core>

#include "weaknet/types.hpp"

namespace weaknet {

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar cross2(const Eigen::MatrixBase<DerivedA>& a,
                                 const Eigen::MatrixBase<DerivedB>& b) {
  return a(0) * b(1) - a(1) * b(0);
}

/// Twice the signed area of (a, b, c); positive for a counter-clockwise turn.
template <typename DA, typename DB, typename DC>
typename DA::Scalar orient2d(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                             const Eigen::MatrixBase<DC>& c) {
  return (b(0) - a(0)) * (c(1) - a(1)) - (b(1) - a(1)) * (c(0) - a(0));
}

/// Six times the signed volume of the tetrahedron (a, b, c, d).
template <typename Scalar>
Scalar orient3d(const Vector3<Scalar>& a, const Vector3<Scalar>& b, const Vector3<Scalar>& c,
                const Vector3<Scalar>& d) {
  return (b - a).cross(c - a).dot(d - a);
}

/// Counter-clockwise normal of a planar vector.
template <typename Scalar>
Vector2<Scalar> perp(const Vector2<Scalar>& v) {
  return Vector2<Scalar>(-v(1), v(0));
}

/// Component of v orthogonal to dir (dir != 0).
template <typename Scalar, int N>
Eigen::Matrix<Scalar, N, 1> reject_from(const Eigen::Matrix<Scalar, N, 1>& v,
                                        const Eigen::Matrix<Scalar, N, 1>& dir) {
  const Scalar k = v.dot(dir) / dir.squaredNorm();
  return v - dir * k;
}

/// Squared distance from p to the line anchor + t*dir.
template <typename Scalar, int N>
Scalar point_line_dist_sq(const Eigen::Matrix<Scalar, N, 1>& p,
                          const Eigen::Matrix<Scalar, N, 1>& anchor,
                          const Eigen::Matrix<Scalar, N, 1>& dir) {
  const Eigen::Matrix<Scalar, N, 1> w = p - anchor;
  const Scalar wd = w.dot(dir);
  return w.squaredNorm() - wd * wd / dir.squaredNorm();
}

/// Squared distance from the closed segment [a, b] to the line anchor + t*dir.
/// The squared distance along the segment is a convex quadratic in the segment
/// parameter, minimized in closed form and clamped to [0, 1].
template <typename Scalar, int N>
Scalar segment_line_dist_sq(const Eigen::Matrix<Scalar, N, 1>& a,
                            const Eigen::Matrix<Scalar, N, 1>& b,
                            const Eigen::Matrix<Scalar, N, 1>& anchor,
                            const Eigen::Matrix<Scalar, N, 1>& dir) {
  const Eigen::Matrix<Scalar, N, 1> w = reject_from<Scalar, N>(a - anchor, dir);
  const Eigen::Matrix<Scalar, N, 1> e = reject_from<Scalar, N>(b - a, dir);
  const Scalar ee = e.squaredNorm();
  if (ee == Scalar(0)) return w.squaredNorm();
  Scalar u = -w.dot(e) / ee;
  if (u < Scalar(0)) u = Scalar(0);
  if (u > Scalar(1)) u = Scalar(1);
  return (w + e * u).squaredNorm();
}

/// Squared distance from p to the closed segment [a, b].
template <typename Scalar, int N>
Scalar point_segment_dist_sq(const Eigen::Matrix<Scalar, N, 1>& p,
                             const Eigen::Matrix<Scalar, N, 1>& a,
                             const Eigen::Matrix<Scalar, N, 1>& b) {
  const Eigen::Matrix<Scalar, N, 1> e = b - a;
  const Scalar ee = e.squaredNorm();
  if (ee == Scalar(0)) return (p - a).squaredNorm();
  Scalar u = (p - a).dot(e) / ee;
  if (u < Scalar(0)) u = Scalar(0);
  if (u > Scalar(1)) u = Scalar(1);
  return (p - a - e * u).squaredNorm();
}

template <typename DA, typename DB>
bool lex_less(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

}  // namespace weaknet
