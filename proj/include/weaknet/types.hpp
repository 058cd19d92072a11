#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "weaknet/rational.hpp"

namespace weaknet {

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

using Vec2 = Vector2<Rational>;
using Vec3 = Vector3<Rational>;
using VecX = VectorX<Rational>;
using Mat3 = Matrix3<Rational>;

using Point2 = Vec2;
using Point3 = Vec3;
using PointD = VecX;

inline Vec2 vec2(const Rational& x, const Rational& y) { return Vec2(x, y); }
inline Vec3 vec3(const Rational& x, const Rational& y, const Rational& z) { return Vec3(x, y, z); }

}  // namespace weaknet
