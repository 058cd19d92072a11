#include <doctest.h>

#include "helpers.hpp"
#include "weaknet/higher_dim.hpp"
#include "weaknet/ruling.hpp"

using namespace testing;

namespace {

VecX vecx(std::initializer_list<Rational> xs) {
  VecX v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

const ConvexBody& segment() {
  static const ConvexBody seg({p3("1", "4/3", "4/3"), p3("2", "7/6", "7/3")});
  return seg;
}

}  // namespace

TEST_CASE("embedding pads with zeros") {
  CHECK(embed(vec3(1, 2, 3), 5) == vecx({1, 2, 3, 0, 0}));
  const LineD l = embed(lambda_line(1), 4);
  CHECK(l.anchor() == vecx({1, 0, 0, 0}));
  CHECK(l.dir() == vecx({0, 1, 1, 0}));
  CHECK(std::get<Line3>(project_line_to_S(l)) == lambda_line(1));
  CHECK(truncate(embed(vec3(4, 5, 6), 6)) == vec3(4, 5, 6));
  CHECK(error_kind([] { embed(vec3(1, 2, 3), 2); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([] { LineD(vecx({0, 0, 0, 0}), vecx({0, 0, 0, 0})); }) == ErrorKind::ZeroDirection);
}

TEST_CASE("projection to S") {
  const LineD vertical(vecx({1, q("4/3"), q("4/3"), 7}), vecx({0, 0, 0, 1}));
  const auto p = project_line_to_S(vertical);
  REQUIRE(std::holds_alternative<Point3>(p));
  CHECK(std::get<Point3>(p) == p3("1", "4/3", "4/3"));
  CHECK(point_in_hull(std::get<Point3>(p), segment().vertices()));
  const LineD diag(vecx({0, 0, 0, 0}), vecx({1, 1, 1, 1}));
  CHECK(std::get<Line3>(project_line_to_S(diag)) == Line3(vec3(0, 0, 0), vec3(1, 1, 1)));
}

TEST_CASE("lifted incidence") {
  // Through a vertex of K in an arbitrary direction.
  const LineD through(embed(p3("2", "7/6", "7/3"), 5), vecx({1, -2, 3, 4, 5}));
  const ProjectionReport r = verify_projection_property(through, segment());
  CHECK(r.lifted_hits);
  CHECK(r.projection_hits);
  // Parallel to the 4th axis above a point of K: pierces S at that point.
  const LineD above(vecx({1, q("4/3"), q("4/3"), 7}), vecx({0, 0, 0, 1}));
  CHECK(verify_projection_property(above, segment()).lifted_hits);
  // Parallel to S but off it: misses the lifted body, while its shadow hits.
  const LineD off(vecx({2, 0, 0, 1}), vecx({0, 1, 2, 0}));
  const ProjectionReport o = verify_projection_property(off, segment());
  CHECK_FALSE(o.lifted_hits);
  CHECK(o.projection_hits);
  CHECK_FALSE(o.violated());
  // Crossing S outside K.
  const LineD miss(vecx({5, 5, 5, 0}), vecx({0, 0, 1, 1}));
  CHECK_FALSE(line_meets_embedded(miss, segment()));
  // Extra coordinates that cannot vanish together.
  const LineD never(vecx({1, q("4/3"), q("4/3"), 1, 1}), vecx({0, 0, 0, 1, 2}));
  CHECK_FALSE(line_meets_embedded(never, segment()));
}

TEST_CASE("the projection implication on random hitting lines") {
  Rng rng(61);
  const ConvexBody tetra({vec3(0, 0, 0), vec3(3, 0, 0), vec3(0, 3, 0), vec3(0, 0, 3)});
  for (int d = 4; d <= 6; ++d) {
    for (int i = 0; i < 40; ++i) {
      Point3 p = Point3::Zero();
      Rational total = 0;
      for (const auto& v : tetra.vertices()) {
        const Rational w = rng.uniform_rational(1, 5, 8);
        p += v * w;
        total += w;
      }
      VecX dir = VecX::Zero(d);
      while (dir.isZero()) {
        for (int k = 0; k < d; ++k) dir(k) = small(rng, 3);
      }
      const LineD l(embed(p / total, d) - dir * small(rng), dir);
      const ProjectionReport r = verify_projection_property(l, tetra);
      CHECK(r.lifted_hits);
      CHECK_FALSE(r.violated());
    }
  }
}
