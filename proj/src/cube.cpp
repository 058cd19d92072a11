#include "weaknet/cube.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>

#include "weaknet/error.hpp"
#include "weaknet/kernel.hpp"
#include "weaknet/rng.hpp"

namespace weaknet {
namespace {

void require_diagonal(int which) {
  if (which < 1 || which > 4) throw Error(ErrorKind::InvalidArgument, "diagonal index must be 1..4");
}

Vec3 unit_axis(int axis) {
  Vec3 e = Vec3::Zero();
  e(axis) = 1;
  return e;
}

// (x, y, z) -> (z, x, y) maps l_x -> l_y -> l_z -> l_x, diagonal 3 -> 2 -> 4,
// and a sign pattern (s1, s2, s3) on (l_x, l_y, l_z) to (s3, s1, s2).
SignPattern shift(const SignPattern& s) { return {s[2], s[0], s[1]}; }

std::array<Ray3, 3> rays_for_pattern(const SignPattern& signs) {
  std::array<Ray3, 3> out;
  for (int a = 0; a < 3; ++a) {
    out[a] = Ray3{blue_point(a, Rational(2 * signs[a])), unit_axis(a) * Rational(signs[a])};
  }
  return out;
}

TripleCheck check_triple(const std::array<Ray3, 3>& rays, const ProjectionFrame& frame) {
  TripleCheck check;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto projected = frame.ray(rays[i]);
    if (!std::holds_alternative<Ray2>(projected)) return check;
    check.projected[i] = std::get<Ray2>(projected);
  }
  check.separated = is_separated_triple(check.projected);
  if (!check.separated || orient2d(check.projected[0].origin, check.projected[1].origin,
                                   check.projected[2].origin) == 0) {
    return check;
  }
  const ConvexRegion2 region = joint_region(check.projected);
  check.nonempty = !region.is_empty();
  check.origin_margin = interior_margin(region, Point2::Zero());
  return check;
}

Rational far_parameter(Rng& rng) {
  const Rational magnitude = std::min(rng.log_uniform(Rational(2), 9, 1000), Rational(1000));
  return rng.coin() ? magnitude : Rational(-magnitude);
}

Rational inside_parameter(Rng& rng) { return rng.uniform_rational(Rational(-2), Rational(2), 1000); }

bool within(const Rational& value, const Rational& tolerance) { return abs(value) <= tolerance; }

}  // namespace

std::array<Line3, 3> blue_lines() {
  return {Line3(vec3(0, 1, -1), vec3(1, 0, 0)), Line3(vec3(-1, 0, 1), vec3(0, 1, 0)),
          Line3(vec3(1, -1, 0), vec3(0, 0, 1))};
}

std::array<Vec3, 4> diagonal_directions() {
  return {vec3(1, 1, 1), vec3(1, 1, -1), vec3(1, -1, 1), vec3(-1, 1, 1)};
}

std::array<Line3, 4> main_diagonals() {
  const auto dirs = diagonal_directions();
  return {Line3(Vec3::Zero(), dirs[0]), Line3(Vec3::Zero(), dirs[1]), Line3(Vec3::Zero(), dirs[2]),
          Line3(Vec3::Zero(), dirs[3])};
}

Point3 blue_point(int axis, const Rational& t) {
  switch (axis) {
    case 0: return vec3(t, 1, -1);
    case 1: return vec3(-1, t, 1);
    case 2: return vec3(1, -1, t);
    default: throw Error(ErrorKind::InvalidArgument, "blue axis must be 0..2");
  }
}

Triangle3 triangle_T(const Rational& x1, const Rational& x2, const Rational& x3) {
  return Triangle3{{blue_point(0, x1), blue_point(1, x2), blue_point(2, x3)}};
}

std::optional<Rational> crossing_depth(const Line3& l, const Triangle3& tri) {
  const auto& v = tri.v;
  const Vec3 normal = (v[1] - v[0]).cross(v[2] - v[0]);
  const Rational nd = normal.dot(l.dir());
  if (normal.isZero() || nd == 0) return std::nullopt;
  const Point3 x = l.at(normal.dot(v[0] - l.anchor()) / nd);
  const Rational area = normal.squaredNorm();
  Rational depth = normal.dot((v[1] - x).cross(v[2] - x)) / area;
  depth = std::min(depth, Rational(normal.dot((v[2] - x).cross(v[0] - x)) / area));
  depth = std::min(depth, Rational(normal.dot((v[0] - x).cross(v[1] - x)) / area));
  if (depth < 0) return std::nullopt;
  return depth;
}

bool line_meets_triangle_interior(const Line3& l, const Triangle3& tri) {
  const auto& v = tri.v;
  const Vec3 normal = (v[1] - v[0]).cross(v[2] - v[0]);
  if (normal.isZero()) return false;
  if (normal.dot(l.dir()) != 0) {
    const auto depth = crossing_depth(l, tri);
    return depth && *depth > 0;
  }
  if (normal.dot(l.anchor() - v[0]) != 0) return false;
  // In the triangle's plane: the line crosses the interior iff vertices lie
  // strictly on both sides of it.
  bool pos = false;
  bool neg = false;
  for (const auto& p : v) {
    const int s = Rational(normal.dot(l.dir().cross(p - l.anchor()))).sign();
    pos = pos || s > 0;
    neg = neg || s < 0;
  }
  return pos && neg;
}

ProjectionFrame ProjectionFrame::along(const Vec3& u) {
  if (u.isZero()) throw Error(ErrorKind::ZeroDirection, "projection direction is zero");
  const auto dirs = diagonal_directions();
  if (u == dirs[0]) return ProjectionFrame(u, vec3(1, -1, 0), vec3(1, 1, -2));
  if (u == dirs[1]) return ProjectionFrame(u, vec3(1, -1, 0), vec3(1, 1, 2));
  if (u == dirs[2]) return ProjectionFrame(u, vec3(1, 1, 0), vec3(1, -1, -2));
  if (u == dirs[3]) return ProjectionFrame(u, vec3(1, 1, 0), vec3(-1, 1, -2));
  int k = 0;
  for (int i = 1; i < 3; ++i) {
    if (abs(u(i)) < abs(u(k))) k = i;
  }
  const Vec3 b1 = u.cross(unit_axis(k));
  return ProjectionFrame(u, b1, u.cross(b1));
}

Point2 ProjectionFrame::point(const Point3& p) const {
  // b1, b2 are orthogonal to u, so p . b_i equals the projected point's.
  return Point2(p.dot(b1_) / b1_.squaredNorm(), p.dot(b2_) / b2_.squaredNorm());
}

std::optional<Vec2> ProjectionFrame::direction(const Vec3& d) const {
  const Vec2 out = point(d);
  if (out.isZero()) return std::nullopt;
  return out;
}

std::variant<Ray2, Point2> ProjectionFrame::ray(const Ray3& r) const {
  const Point2 origin = point(r.origin);
  const auto dir = direction(r.dir);
  if (!dir) return origin;
  return Ray2{origin, *dir};
}

DiagonalRays rays_for_diagonal(int which) {
  require_diagonal(which);
  SignPattern r{1, 1, 1};
  SignPattern q{-1, -1, -1};
  if (which != 1) {
    r = {1, -1, 1};
    q = {-1, 1, -1};
    const int shifts = which == 3 ? 0 : (which == 2 ? 1 : 2);
    for (int i = 0; i < shifts; ++i) {
      r = shift(r);
      q = shift(q);
    }
  }
  return DiagonalRays{which, r, q, rays_for_pattern(r), rays_for_pattern(q)};
}

JointRegionCaseReport check_joint_region_case(int which) {
  require_diagonal(which);
  return check_joint_region_case(which, diagonal_directions()[which - 1]);
}

JointRegionCaseReport check_joint_region_case(int which, const Vec3& u) {
  const DiagonalRays rays = rays_for_diagonal(which);
  const ProjectionFrame frame = ProjectionFrame::along(u);
  return JointRegionCaseReport{which, check_triple(rays.r, frame), check_triple(rays.q, frame)};
}

bool PerturbationCert::valid() const {
  if (eps <= 0 || eps >= 1 || dir.isZero() || base.isZero()) return false;
  const Rational dot = base.dot(dir);
  const Rational slack = 1 - eps;
  return point_line_dist_sq<Rational, 3>(Point3::Zero(), anchor, dir) < eps * eps && dot > 0 &&
         dot * dot > slack * slack * base.squaredNorm() * dir.squaredNorm();
}

PerturbationCert sample_perturbation(int which, const Rational& eps, Rng& rng) {
  require_diagonal(which);
  if (eps <= 0 || eps >= 1) throw Error(ErrorKind::BadEpsilon, "perturbation eps must lie in (0, 1)");
  const Vec3 u = diagonal_directions()[which - 1];
  // Directions within angle acos(1 - eps) of u; |u| = sqrt(3), and the box
  // half-width sqrt(6 eps) slightly overshoots the admissible cone.
  const Rational h = round_to_denominator(std::sqrt(6.0 * to_double(eps)), 1 << 20);
  const Rational half = eps / 2;
  for (;;) {
    PerturbationCert cert;
    cert.base = u;
    cert.eps = eps;
    cert.anchor = vec3(rng.uniform_rational(-half, half, 4096), rng.uniform_rational(-half, half, 4096),
                       rng.uniform_rational(-half, half, 4096));
    cert.dir = u + vec3(rng.uniform_rational(-h, h, 4096), rng.uniform_rational(-h, h, 4096),
                        rng.uniform_rational(-h, h, 4096));
    if (cert.valid()) return cert;
  }
}

ClaimHit diagonal_hit(const std::array<Line3, 4>& reds, const Triangle3& tri) {
  ClaimHit hit;
  for (int j = 0; j < 4; ++j) {
    if (!line_meets_triangle_interior(reds[j], tri)) continue;
    if (!hit.first) hit.first = j;
    const auto depth = crossing_depth(reds[j], tri);
    if (depth && (!hit.best_depth || *depth > *hit.best_depth)) hit.best_depth = depth;
  }
  return hit;
}

DiagClaimReport verify_diag_claim(const Rational& eps, long trials, std::uint64_t seed) {
  if (eps < 0) throw Error(ErrorKind::BadEpsilon, "eps must be nonnegative");
  DiagClaimReport report;
  report.eps = eps;
  report.trials = trials;
  report.seed = seed;
  const Rng root(seed);
  for (long trial = 0; trial < trials; ++trial) {
    Rng rng = root.derive(static_cast<std::uint64_t>(trial));
    std::array<Rational, 3> x;
    for (auto& xi : x) xi = far_parameter(rng);
    std::array<Line3, 4> reds = main_diagonals();
    if (eps > 0) {
      for (int j = 0; j < 4; ++j) reds[j] = sample_perturbation(j + 1, eps, rng).line();
    }
    const ClaimHit hit = diagonal_hit(reds, triangle_T(x[0], x[1], x[2]));
    if (!hit.first) {
      report.counterexamples.push_back(x);
      continue;
    }
    ++report.certified_by[*hit.first];
    if (hit.best_depth && (!report.worst_depth || *hit.best_depth < *report.worst_depth)) {
      report.worst_depth = hit.best_depth;
    }
  }
  return report;
}

Mat3 rotation_from_quaternion(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d) {
  const Rational n = a * a + b * b + c * c + d * d;
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "zero quaternion");
  Mat3 r;
  r << a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c),
      2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b),
      2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d;
  return r / n;
}

std::array<Placement, 3> default_placements(const Rational& scale) {
  return {Placement{rotation_from_quaternion(1, 2, 3, 4), vec3(scale, 0, 0)},
          Placement{rotation_from_quaternion(2, -1, 1, 3), vec3(0, scale, 0)},
          Placement{rotation_from_quaternion(3, 1, -2, 1), vec3(0, 0, scale)}};
}

std::string MultiCubeConfig::blue_label(std::size_t i) {
  static const char* axes[] = {"l_x", "l_y", "l_z"};
  return "cube" + std::to_string(i / 3) + "." + axes[i % 3];
}

std::string MultiCubeConfig::red_label(std::size_t i) {
  if (i == 12) return "axis";
  return "cube" + std::to_string(i / 4) + ".diag" + std::to_string(i % 4 + 1);
}

MultiCubeConfig assemble_three_cubes(const std::array<Placement, 3>& placements,
                                     const Rational& eps, std::uint64_t seed) {
  if (eps <= 0 || eps >= 1) throw Error(ErrorKind::BadEpsilon, "perturbation eps must lie in (0, 1)");
  const Rational tolerance(Integer(1), Integer(1000000));
  for (const auto& p : placements) {
    const Mat3 defect = p.rotation.transpose() * p.rotation - Mat3::Identity();
    for (Eigen::Index i = 0; i < 9; ++i) {
      if (!within(defect(i), tolerance)) {
        throw Error(ErrorKind::DegeneratePlacement, "rotation is not orthogonal within 1e-6");
      }
    }
    if (p.rotation.determinant() <= 0) {
      throw Error(ErrorKind::DegeneratePlacement, "rotation reverses orientation");
    }
  }
  const Vec3& c0 = placements[0].center;
  const Vec3& c1 = placements[1].center;
  const Vec3& c2 = placements[2].center;
  const std::array<Rational, 3> sides{(c1 - c0).squaredNorm(), (c2 - c1).squaredNorm(),
                                      (c0 - c2).squaredNorm()};
  if (*std::min_element(sides.begin(), sides.end()) < 100 * 100) {
    throw Error(ErrorKind::DegeneratePlacement, "cube centers must be at least 100 apart");
  }
  const Vec3 normal = (c1 - c0).cross(c2 - c0);
  if (normal.isZero()) throw Error(ErrorKind::DegeneratePlacement, "cube centers are collinear");
  const Rational lo = (1 - tolerance) * (1 - tolerance);
  const Rational hi = (1 + tolerance) * (1 + tolerance);
  for (const auto& a : sides) {
    for (const auto& b : sides) {
      if (a / b < lo || a / b > hi) {
        throw Error(ErrorKind::DegeneratePlacement, "centers are not equilateral within 1e-6");
      }
    }
  }

  MultiCubeConfig config;
  config.placements = placements;
  config.eps = eps;
  config.seed = seed;
  const auto local_blue = blue_lines();
  const Rng root(seed);
  for (std::size_t c = 0; c < 3; ++c) {
    for (const auto& l : local_blue) config.blue.push_back(placements[c].apply(l));
    for (int j = 0; j < 4; ++j) {
      Rng stream = root.derive(4 * c + static_cast<std::size_t>(j));
      PerturbationCert cert = sample_perturbation(j + 1, eps, stream);
      config.red.push_back(placements[c].apply(cert.line()));
      config.certs.push_back(std::move(cert));
    }
  }
  config.red.emplace_back((c0 + c1 + c2) / Rational(3), normal);

  std::vector<Line3> all = config.blue;
  all.insert(all.end(), config.red.begin(), config.red.end());
  if (const auto pair = first_non_skew_pair(all)) {
    const auto label = [](std::size_t i) {
      return i < 9 ? "blue " + MultiCubeConfig::blue_label(i)
                   : "red " + MultiCubeConfig::red_label(i - 9);
    };
    throw Error(ErrorKind::DegeneratePlacement,
                label(pair->first) + " and " + label(pair->second) + " are not skew");
  }
  return config;
}

std::string regime_name(SampleRegime regime) {
  switch (regime) {
    case SampleRegime::Far: return "far";
    case SampleRegime::Inside: return "inside";
    case SampleRegime::Mixed: return "mixed";
  }
  return "unknown";
}

NineThirteenReport verify_nine_thirteen(const MultiCubeConfig& config, long trials,
                                        std::uint64_t seed) {
  NineThirteenReport report;
  report.trials = trials;
  report.seed = seed;
  const Rng root(seed);
  for (long trial = 0; trial < trials; ++trial) {
    Rng rng = root.derive(static_cast<std::uint64_t>(trial));
    const auto regime = static_cast<SampleRegime>(trial % 3);
    std::vector<Point3> points;
    for (std::size_t c = 0; c < 3; ++c) {
      // 0: all three far, 1: all three inside, 2: one inside and two far.
      int mode = regime == SampleRegime::Far ? 0 : (regime == SampleRegime::Inside ? 1 : 0);
      if (regime == SampleRegime::Mixed) mode = static_cast<int>(rng.uniform_int(0, 2));
      const int inside_axis = static_cast<int>(rng.uniform_int(0, 2));
      for (int a = 0; a < 3; ++a) {
        const bool inside = mode == 1 || (mode == 2 && a == inside_axis);
        const Rational t = inside ? inside_parameter(rng) : far_parameter(rng);
        points.push_back(config.placements[c].apply(blue_point(a, t)));
      }
    }
    std::vector<int> hitting;
    for (std::size_t r = 0; r < config.red.size(); ++r) {
      if (line_meets_hull(config.red[r], points)) hitting.push_back(static_cast<int>(r));
    }
    const int certificate = hitting.empty() ? -1 : hitting.front();
    report.certificates.push_back(certificate);
    report.hitting.push_back(std::move(hitting));
    report.regimes.push_back(regime);
    if (certificate < 0) report.failures.push_back(trial);
  }
  return report;
}

}  // namespace weaknet
