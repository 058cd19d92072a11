#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "weaknet/kernel.hpp"

namespace weaknet {

enum class Containment { Outside, Boundary, Interior };

/// Andrew's monotone chain. Returns indices of the strictly convex hull in
/// counter-clockwise order; duplicates and collinear points are dropped, so a
/// degenerate input yields one index (all points equal) or two (collinear).
template <typename Scalar>
std::vector<std::size_t> convex_hull_indices(std::span<const Vector2<Scalar>> pts) {
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return lex_less(pts[i], pts[j]); });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t i, std::size_t j) { return pts[i] == pts[j]; }),
              order.end());
  if (order.size() < 3) return order;

  std::vector<std::size_t> hull(2 * order.size());
  std::size_t k = 0;
  for (std::size_t i : order) {
    while (k >= 2 && orient2d(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= Scalar(0)) --k;
    hull[k++] = i;
  }
  for (std::size_t idx = order.size() - 1, lower = k + 1; idx-- > 0;) {
    const std::size_t i = order[idx];
    while (k >= lower && orient2d(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= Scalar(0)) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

/// Locates p relative to the hull returned by convex_hull_indices. A hull of one
/// or two points has no interior, so hits on it report Boundary.
template <typename Scalar>
Containment locate_in_hull(std::span<const Vector2<Scalar>> pts,
                           const std::vector<std::size_t>& hull, const Vector2<Scalar>& p) {
  if (hull.empty()) return Containment::Outside;
  if (hull.size() == 1) return pts[hull[0]] == p ? Containment::Boundary : Containment::Outside;
  if (hull.size() == 2) {
    const auto& a = pts[hull[0]];
    const auto& b = pts[hull[1]];
    if (orient2d(a, b, p) != Scalar(0)) return Containment::Outside;
    const Scalar u = (p - a).dot(b - a);
    return (u >= Scalar(0) && u <= (b - a).squaredNorm()) ? Containment::Boundary
                                                           : Containment::Outside;
  }
  bool on_edge = false;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Scalar o = orient2d(pts[hull[i]], pts[hull[(i + 1) % hull.size()]], p);
    if (o < Scalar(0)) return Containment::Outside;
    if (o == Scalar(0)) on_edge = true;
  }
  return on_edge ? Containment::Boundary : Containment::Interior;
}

template <typename Scalar>
Containment locate_in_convex_hull(std::span<const Vector2<Scalar>> pts, const Vector2<Scalar>& p) {
  return locate_in_hull(pts, convex_hull_indices(pts), p);
}

}  // namespace weaknet
