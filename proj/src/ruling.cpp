#include "weaknet/ruling.hpp"

#include <algorithm>
#include <numeric>

#include "weaknet/error.hpp"

namespace weaknet {

Line3 lambda_line(const Rational& alpha) {
  return Line3(vec3(alpha, 0, 0), vec3(0, 1, alpha));
}

Line3 ell_line(const Rational& beta) { return Line3(vec3(0, beta, 0), vec3(1, 0, beta)); }

RulingFamily::RulingFamily(std::vector<Rational> params) : params_(std::move(params)) {
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (params_[i] <= 0) throw Error(ErrorKind::InvalidArgument, "ruling parameters must be positive");
    if (i > 0 && params_[i] <= params_[i - 1]) {
      throw Error(ErrorKind::InvalidArgument, "ruling parameters must be strictly increasing");
    }
  }
}

RulingFamily RulingFamily::integers(std::size_t n) {
  std::vector<Rational> params;
  for (std::size_t i = 1; i <= n; ++i) params.emplace_back(static_cast<long>(i));
  return RulingFamily(std::move(params));
}

std::vector<Line3> RulingFamily::lines() const {
  std::vector<Line3> out;
  out.reserve(params_.size());
  for (const auto& a : params_) out.push_back(lambda_line(a));
  return out;
}

SigmaClass classify_vs_sigma(const Line3& l) {
  const Point3& a = l.anchor();
  const Vec3& d = l.dir();
  // z - x y along a + t d is q2 t^2 + q1 t + q0.
  const Rational q2 = -d(0) * d(1);
  const Rational q1 = d(2) - a(0) * d(1) - a(1) * d(0);
  const Rational q0 = a(2) - a(0) * a(1);

  SigmaClass out{SigmaClass::Kind::Secant, Rational(0), {}, 0};
  if (q2 == 0 && q1 == 0 && q0 == 0) {
    if (d(0) == 0) {
      out.kind = SigmaClass::Kind::OnSigmaLambda;
      out.param = a(0);
    } else {
      out.kind = SigmaClass::Kind::OnSigmaEll;
      out.param = a(1);
    }
    return out;
  }

  std::vector<Rational> roots;
  if (q2 == 0) {
    if (q1 != 0) roots.push_back(-q0 / q1);
  } else {
    const Rational disc = q1 * q1 - 4 * q2 * q0;
    if (disc == 0) {
      roots.push_back(-q1 / (2 * q2));
    } else if (disc > 0) {
      if (const auto r = exact_sqrt(disc)) {
        roots.push_back((-q1 + *r) / (2 * q2));
        roots.push_back((-q1 - *r) / (2 * q2));
      } else {
        out.irrational_roots = 2;
      }
    }
  }
  for (const auto& t : roots) {
    Rational y = a(1) + t * d(1);
    if (std::find(out.y_values.begin(), out.y_values.end(), y) == out.y_values.end()) {
      out.y_values.push_back(std::move(y));
    }
  }
  std::sort(out.y_values.begin(), out.y_values.end());
  return out;
}

Rational choose_beta_star(const std::vector<Line3>& r_prime) {
  // Each line of R' meets at most two rulings ell(b) (or is one), so this halts.
  for (long b = 1;; ++b) {
    const Line3 candidate = ell_line(Rational(b));
    const bool clear = std::all_of(r_prime.begin(), r_prime.end(), [&](const Line3& r) {
      return line_line_dist_sq(candidate, r) > 0;
    });
    if (clear) return Rational(b);
  }
}

WitnessPlan witness_plan(const RulingFamily& family, const std::vector<std::size_t>& b_indices,
                         const std::vector<Line3>& red) {
  if (b_indices.empty()) throw Error(ErrorKind::EmptyB, "no rulings to stab");
  WitnessPlan plan;
  plan.b_indices = b_indices;
  std::sort(plan.b_indices.begin(), plan.b_indices.end());
  plan.b_indices.erase(std::unique(plan.b_indices.begin(), plan.b_indices.end()),
                       plan.b_indices.end());
  for (std::size_t i : plan.b_indices) {
    if (i >= family.size()) throw Error(ErrorKind::InvalidArgument, "ruling index out of range");
    const Line3 blue = family.line(i);
    for (std::size_t j = 0; j < red.size(); ++j) {
      if (red[j] == blue) {
        throw Error(ErrorKind::NonDisjointBR, "ruling " + std::to_string(i) +
                                                  " is also red line " + std::to_string(j));
      }
    }
    plan.b_params.push_back(family.params()[i]);
  }
  plan.alpha_min = plan.b_params.front();

  std::vector<Line3> r_prime_lines;
  for (std::size_t j = 0; j < red.size(); ++j) {
    if (classify_vs_sigma(red[j]).kind == SigmaClass::Kind::OnSigmaLambda) {
      plan.r_sigma.push_back(j);
    } else {
      plan.r_prime.push_back(j);
      r_prime_lines.push_back(red[j]);
    }
  }

  plan.beta_star = choose_beta_star(r_prime_lines);
  if (r_prime_lines.empty()) {
    plan.s = Rational(1);
    return plan;
  }
  const Line3 axis = ell_line(plan.beta_star);
  Rational delta_sq = line_line_dist_sq(axis, r_prime_lines.front());
  for (const auto& r : r_prime_lines) delta_sq = std::min(delta_sq, line_line_dist_sq(axis, r));
  plan.delta_sq = delta_sq;

  // Smallest i with (1/i)^2 (1 + 1/a1)^2 < delta^2, i.e. i^2 > (1 + 1/a1)^2 / delta^2.
  const Rational radius_factor = 1 + 1 / plan.alpha_min;
  const Integer i = smallest_int_with_square_above(radius_factor * radius_factor / delta_sq);
  plan.s = Rational(Integer(1), i);
  return plan;
}

Point3 witness_point(const Rational& alpha, const Rational& beta_star, const Rational& s) {
  if (alpha == 0) throw Error(ErrorKind::ZeroAlpha, "witness point needs alpha != 0");
  return vec3(alpha, beta_star + s / alpha, beta_star * alpha + s);
}

ConvexPolygon3 build_witness(const WitnessPlan& plan) {
  std::vector<Point3> vertices;
  vertices.reserve(plan.b_params.size());
  for (const auto& a : plan.b_params) vertices.push_back(witness_point(a, plan.beta_star, plan.s));
  try {
    return ConvexPolygon3(std::move(vertices));
  } catch (const Error& e) {
    throw Error(ErrorKind::ConvexityCheckFailed, e.what());
  }
}

bool contact_is_single_vertex(const Line3& l, const ConvexPolygon3& polygon) {
  const auto& v = polygon.vertices();
  if (v.size() == 1) return line_contains_point(l, v[0]);
  if (v.size() == 2) {
    if ((v[1] - v[0]).cross(l.dir()).isZero()) return false;
    return line_contains_point(l, v[0]) || line_contains_point(l, v[1]);
  }
  const Plane3 plane = *polygon.plane();
  const auto hit = line_plane_intersection(l, plane);
  const auto* p = std::get_if<Point3>(&hit);
  return p != nullptr && std::find(v.begin(), v.end(), *p) != v.end();
}

VerificationReport verify_witness(const ConvexPolygon3& witness, const std::vector<Line3>& blue,
                                  const std::vector<Line3>& red) {
  VerificationReport report;
  for (std::size_t i = 0; i < blue.size(); ++i) {
    if (!line_intersects_polygon(blue[i], witness)) {
      report.violations.push_back("blue line " + std::to_string(i) + " misses the witness");
    } else if (!contact_is_single_vertex(blue[i], witness)) {
      report.violations.push_back("blue line " + std::to_string(i) +
                                  " does not meet the witness in a single vertex");
    } else {
      report.stabbed.push_back(i);
    }
  }
  for (std::size_t j = 0; j < red.size(); ++j) {
    if (line_intersects_polygon(red[j], witness)) {
      report.violations.push_back("red line " + std::to_string(j) + " meets the witness");
    } else {
      report.missed.push_back(j);
    }
  }
  return report;
}

}  // namespace weaknet
