#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "weaknet/cube.hpp"
#include "weaknet/kernel.hpp"

using namespace testing;

namespace {

Point3 centroid(const Triangle3& t) { return (t.v[0] + t.v[1] + t.v[2]) / Rational(3); }

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TEST_CASE("blue lines and diagonals") {
  const auto blue = blue_lines();
  CHECK(line_contains_point(blue[0], vec3(5, 1, -1)));
  CHECK(line_contains_point(blue[1], vec3(-1, 5, 1)));
  CHECK(line_contains_point(blue[2], vec3(1, -1, 5)));
  CHECK(line_contains_point(main_diagonals()[0], vec3(2, 2, 2)));
  for (int a = 0; a < 3; ++a) CHECK(line_contains_point(blue[a], blue_point(a, q("7/3"))));
}

TEST_CASE("blue/diagonal incidence table") {
  const auto blue = blue_lines();
  const auto diag = main_diagonals();
  const std::array<std::array<bool, 3>, 4> expected{{{false, false, false}, {true, true, false},
                                                     {true, false, true}, {false, true, true}}};
  for (int j = 0; j < 4; ++j) {
    for (int a = 0; a < 3; ++a) {
      CAPTURE(j);
      CAPTURE(a);
      CHECK((line_line_dist_sq(diag[j], blue[a]) == 0) == expected[j][a]);
    }
  }
}

TEST_CASE("triangles on the blue lines") {
  CHECK(centroid(triangle_T(2, 2, 2)) == p3("2/3", "2/3", "2/3"));
  CHECK(line_contains_point(main_diagonals()[0], centroid(triangle_T(-2, -2, -2))));
  CHECK(triangle_T(0, 0, 0).v == std::array<Point3, 3>{vec3(0, 1, -1), vec3(-1, 0, 1), vec3(1, -1, 0)});
}

TEST_CASE("crossing depth and interior crossings") {
  const Triangle3 t = triangle_T(2, 2, 2);
  CHECK(crossing_depth(main_diagonals()[0], t) == q("1/3"));
  CHECK(line_meets_triangle_interior(main_diagonals()[0], t));
  // Through a vertex: depth 0, not interior.
  const Line3 through_vertex(t.v[0], vec3(1, 1, 1));
  CHECK(crossing_depth(through_vertex, t) == Rational(0));
  CHECK_FALSE(line_meets_triangle_interior(through_vertex, t));
  // In the triangle's plane, through the centroid.
  const Line3 in_plane(centroid(t), t.v[1] - t.v[0]);
  CHECK_FALSE(crossing_depth(in_plane, t).has_value());
  CHECK(line_meets_triangle_interior(in_plane, t));
  // In the plane along an edge.
  CHECK_FALSE(line_meets_triangle_interior(Line3::through(t.v[0], t.v[1]), t));
}

TEST_CASE("projection along the diagonals") {
  const ProjectionFrame f = ProjectionFrame::along(vec3(1, 1, 1));
  CHECK(f.point(vec3(2, 1, -1)) == vec2(q("1/2"), q("5/6")));
  CHECK(f.direction(vec3(1, 0, 0)) == vec2(q("1/2"), q("1/6")));
  CHECK(f.point(vec3(1, 1, 1)) == vec2(0, 0));
  CHECK_FALSE(f.direction(vec3(2, 2, 2)).has_value());
  CHECK(std::holds_alternative<Point2>(f.ray(Ray3{vec3(1, 0, 0), vec3(1, 1, 1)})));
  CHECK(ProjectionFrame::along(vec3(1, -1, 1)).b1() == vec3(1, 1, 0));
  CHECK(ProjectionFrame::along(vec3(1, -1, 1)).b2() == vec3(1, -1, -2));
  CHECK(error_kind([] { ProjectionFrame::along(vec3(0, 0, 0)); }) == ErrorKind::ZeroDirection);
}

TEST_CASE("projection frames are orthogonal and linear") {
  Rng rng(51);
  const auto diagonals = diagonal_directions();
  std::vector<Vec3> dirs(diagonals.begin(), diagonals.end());
  dirs.push_back(vec3(1, 2, 3));
  dirs.push_back(vec3(0, 0, 1));
  for (const auto& u : dirs) {
    const ProjectionFrame f = ProjectionFrame::along(u);
    CHECK(f.b1().dot(u) == 0);
    CHECK(f.b2().dot(u) == 0);
    CHECK(f.b1().dot(f.b2()) == 0);
    CHECK(f.point(u) == vec2(0, 0));
    for (int i = 0; i < 20; ++i) {
      const Point3 a = random_point(rng), b = random_point(rng);
      CHECK(f.point(a + b) == f.point(a) + f.point(b));
      // Points differing by a multiple of u project together.
      CHECK(f.point(a + u * small(rng)) == f.point(a));
    }
  }
}

TEST_CASE("ray triples per diagonal") {
  const DiagonalRays d1 = rays_for_diagonal(1);
  CHECK(d1.r[0].origin == vec3(2, 1, -1));
  CHECK(d1.r[1].origin == vec3(-1, 2, 1));
  CHECK(d1.r[2].origin == vec3(1, -1, 2));
  CHECK(d1.r[0].dir == vec3(1, 0, 0));
  CHECK(d1.q[0].dir == vec3(-1, 0, 0));
  CHECK(d1.q[1].dir == vec3(0, -1, 0));
  CHECK(d1.q[2].dir == vec3(0, 0, -1));
  // Q rays start at parameter -2, covering {x_i <= -2}.
  CHECK(d1.q[0].origin == vec3(-2, 1, -1));

  const DiagonalRays d3 = rays_for_diagonal(3);
  CHECK(d3.r_signs == SignPattern{1, -1, 1});
  CHECK(d3.r[1].origin == vec3(-1, -2, 1));
  CHECK(d3.r[1].dir == vec3(0, -1, 0));
  CHECK(rays_for_diagonal(2).r_signs == SignPattern{1, 1, -1});
  CHECK(rays_for_diagonal(4).r_signs == SignPattern{-1, 1, 1});

  // The eight sign patterns are covered exactly once.
  std::vector<SignPattern> seen;
  for (int w = 1; w <= 4; ++w) {
    seen.push_back(rays_for_diagonal(w).r_signs);
    seen.push_back(rays_for_diagonal(w).q_signs);
  }
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  CHECK(seen.size() == 8);
  CHECK(error_kind([] { rays_for_diagonal(5); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("joint region cases have the frozen origin margins") {
  const std::array<std::pair<const char*, const char*>, 4> margins{
      {{"1/10", "1/10"}, {"9/274", "9/274"}, {"9/340", "9/130"}, {"9/130", "9/340"}}};
  for (int w = 1; w <= 4; ++w) {
    const JointRegionCaseReport r = check_joint_region_case(w);
    CAPTURE(w);
    CHECK(r.ok());
    CHECK(r.r.origin_margin == q(margins[w - 1].first));
    CHECK(r.q.origin_margin == q(margins[w - 1].second));
  }
}

TEST_CASE("Q rays starting at parameter +2 are not separated") {
  // With origins at +2 and reversed directions the projected rays of
  // diagonal 1 admit a common transversal.
  const ProjectionFrame f = ProjectionFrame::along(vec3(1, 1, 1));
  RayTriple t;
  for (int a = 0; a < 3; ++a) {
    Vec3 dir = Vec3::Zero();
    dir(a) = -1;
    t[a] = std::get<Ray2>(f.ray(Ray3{blue_point(a, 2), dir}));
  }
  CHECK_FALSE(is_separated_triple(t));
}

TEST_CASE("perturbation certificates") {
  PerturbationCert exact{vec3(1, 1, 1), vec3(0, 0, 0), vec3(1, 1, 1), q("1/100")};
  CHECK(exact.valid());
  PerturbationCert far = exact;
  far.anchor = vec3(0, 0, q("1/50"));
  CHECK_FALSE(far.valid());
  PerturbationCert tilted = exact;
  tilted.dir = vec3(1, 1, -1);
  CHECK_FALSE(tilted.valid());
  PerturbationCert reversed = exact;
  reversed.dir = vec3(-1, -1, -1);
  CHECK_FALSE(reversed.valid());

  Rng rng(52);
  for (int w = 1; w <= 4; ++w) {
    for (int i = 0; i < 25; ++i) {
      const PerturbationCert c = sample_perturbation(w, q("1/100"), rng);
      CHECK(c.valid());
      CHECK(c.base == diagonal_directions()[w - 1]);
    }
  }
  CHECK(error_kind([&] { sample_perturbation(1, 0, rng); }) == ErrorKind::BadEpsilon);
}

TEST_CASE("claim on diagonals: exact examples") {
  const ClaimHit hit = diagonal_hit(main_diagonals(), triangle_T(2, 2, 2));
  REQUIRE(hit.first.has_value());
  CHECK(*hit.first == 0);
  CHECK(hit.best_depth == q("1/3"));
  CHECK(diagonal_hit(main_diagonals(), triangle_T(2, -3, 2)).first.has_value());
  const DiagClaimReport zero = verify_diag_claim(0, 200, 3);
  CHECK(zero.ok());
  CHECK(zero.worst_depth > 0);
}

TEST_CASE("claim on diagonals with perturbed lines, small run") {
  const DiagClaimReport r = verify_diag_claim(parse_rational(kClaimEpsilon), 300, 7);
  CHECK(r.ok());
  CHECK(r.trials == 300);
  long total = 0;
  for (long c : r.certified_by) total += c;
  CHECK(total == 300);
  // Replay is exact.
  const DiagClaimReport again = verify_diag_claim(parse_rational(kClaimEpsilon), 300, 7);
  CHECK(again.worst_depth == r.worst_depth);
  CHECK(again.certified_by == r.certified_by);
}

TEST_CASE("quaternion rotations are exact") {
  const Mat3 r = rotation_from_quaternion(2, 0, 0, 1);
  Mat3 expected;
  expected << q("3/5"), q("-4/5"), 0, q("4/5"), q("3/5"), 0, 0, 0, 1;
  CHECK(r == expected);
  for (const auto& p : default_placements(1000)) {
    CHECK(p.rotation.transpose() * p.rotation == Mat3::Identity());
    CHECK(p.rotation.determinant() == 1);
  }
}

TEST_CASE("three-cube assembly") {
  const MultiCubeConfig cfg = assemble_three_cubes(default_placements(1000), q("1/100"), 0);
  CHECK(cfg.blue.size() == 9);
  CHECK(cfg.red.size() == 13);
  CHECK(cfg.certs.size() == 12);
  for (const auto& c : cfg.certs) CHECK(c.valid());
  std::vector<Line3> all = cfg.blue;
  all.insert(all.end(), cfg.red.begin(), cfg.red.end());
  CHECK(pairwise_skew(all));
  const Vec3 c0 = cfg.placements[0].center, c1 = cfg.placements[1].center, c2 = cfg.placements[2].center;
  CHECK(line_contains_point(cfg.red[12], (c0 + c1 + c2) / Rational(3)));
  CHECK(cfg.red[12].dir().cross((c1 - c0).cross(c2 - c0)).isZero());
  CHECK(MultiCubeConfig::red_label(12) == "axis");
  CHECK(MultiCubeConfig::red_label(5) == "cube1.diag2");
  CHECK(MultiCubeConfig::blue_label(4) == "cube1.l_y");
  // Same seed, same lines.
  CHECK(assemble_three_cubes(default_placements(1000), q("1/100"), 0).red == cfg.red);
}

TEST_CASE("three-cube assembly with the (3,4,5) rotations about each axis") {
  const std::array<Placement, 3> placements{
      Placement{rotation_from_quaternion(2, 0, 0, 1), vec3(500, 0, 0)},
      Placement{rotation_from_quaternion(2, 1, 0, 0), vec3(0, 500, 0)},
      Placement{rotation_from_quaternion(2, 0, 1, 0), vec3(0, 0, 500)}};
  CHECK_NOTHROW(assemble_three_cubes(placements, q("1/100"), 1));
}

TEST_CASE("degenerate placements are rejected") {
  const auto eps = q("1/100");
  CHECK(error_kind([&] { assemble_three_cubes(default_placements(1), eps, 0); }) == ErrorKind::DegeneratePlacement);
  // Identity rotations: blue lines of different cubes are parallel.
  std::array<Placement, 3> identity{Placement{Mat3::Identity(), vec3(0, 0, 0)},
                                    Placement{Mat3::Identity(), vec3(300, 0, 0)},
                                    Placement{Mat3::Identity(), vec3(150, 260, 0)}};
  CHECK(error_kind([&] { assemble_three_cubes(identity, eps, 0); }) == ErrorKind::DegeneratePlacement);
  auto collinear = default_placements(1000);
  collinear[2].center = vec3(-1000, 2000, 0);
  CHECK(error_kind([&] { assemble_three_cubes(collinear, eps, 0); }) == ErrorKind::DegeneratePlacement);
  auto skewed = default_placements(1000);
  skewed[0].rotation(0, 0) += q("1/1000");
  CHECK(error_kind([&] { assemble_three_cubes(skewed, eps, 0); }) == ErrorKind::DegeneratePlacement);
  auto lopsided = default_placements(1000);
  lopsided[0].center = vec3(1001, 0, 0);
  CHECK(error_kind([&] { assemble_three_cubes(lopsided, eps, 0); }) == ErrorKind::DegeneratePlacement);
  CHECK(error_kind([&] { assemble_three_cubes(default_placements(1000), 0, 0); }) == ErrorKind::BadEpsilon);
}

TEST_CASE("nine blue, thirteen red: small run covers every regime") {
  const MultiCubeConfig cfg = assemble_three_cubes(default_placements(1000), q("1/100"), 0);
  const NineThirteenReport r = verify_nine_thirteen(cfg, 60, 5);
  CHECK(r.ok());
  REQUIRE(r.certificates.size() == 60);
  for (std::size_t t = 0; t < 60; ++t) {
    CHECK(r.certificates[t] >= 0);
    CHECK(r.certificates[t] == r.hitting[t].front());
    if (r.regimes[t] == SampleRegime::Inside) CHECK(contains(r.hitting[t], 12));
    if (r.regimes[t] == SampleRegime::Far) CHECK(r.hitting[t].front() < 12);
  }
  CHECK(regime_name(SampleRegime::Mixed) == "mixed");
}
