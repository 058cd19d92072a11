#include "weaknet/json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

#include "weaknet/error.hpp"

namespace weaknet {
namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

void reject_floats(const Json& j) {
  if (j.is_number_float()) parse_fail("floating-point literal " + j.dump() + "; use a rational string");
  if (j.is_structured()) {
    for (const auto& item : j) reject_floats(item);
  }
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) parse_fail(std::string("expected an object with field '") + name + "'");
  const auto it = j.find(name);
  if (it == j.end()) parse_fail(std::string("missing field '") + name + "'");
  return *it;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be a list");
  return j;
}

template <typename T>
Json pairs_to_json(const std::vector<std::pair<T, T>>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back(Json::array({a, b}));
  return out;
}

std::uint64_t seed_from_json(const Json& j) {
  const Rational q = j.is_string() ? rational_from_json(j) : Rational(static_cast<long>(index_from_json(j)));
  if (!is_integer(q) || q < 0) parse_fail("seed must be a non-negative integer");
  return numerator(q).convert_to<std::uint64_t>();
}

}  // namespace

Json parse_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    parse_fail(e.what());
  }
  reject_floats(j);
  return j;
}

Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_json(text);
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) parse_fail("expected a rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

std::size_t index_from_json(const Json& j) {
  if (!j.is_number_unsigned()) parse_fail("expected a non-negative integer index, got " + j.dump());
  return j.get<std::size_t>();
}

Json to_json(const Rational& q) { return to_string(q); }

VecX vector_from_json(const Json& j, Eigen::Index size) {
  array(j, "coordinates");
  if (size >= 0 && static_cast<Eigen::Index>(j.size()) != size) {
    parse_fail("expected " + std::to_string(size) + " coordinates, got " + std::to_string(j.size()));
  }
  VecX out(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) out(static_cast<Eigen::Index>(i)) = rational_from_json(j[i]);
  return out;
}

Point2 point2_from_json(const Json& j) { return vector_from_json(j, 2); }
Point3 point3_from_json(const Json& j) { return vector_from_json(j, 3); }

Line3 line3_from_json(const Json& j) {
  return Line3(point3_from_json(field(j, "anchor")), point3_from_json(field(j, "dir")));
}

Json to_json(const Line3& l) { return {{"anchor", to_json(l.anchor())}, {"dir", to_json(l.dir())}}; }

std::vector<Line3> lines_from_json(const Json& j) {
  std::vector<Line3> out;
  for (const auto& item : array(j, "lines")) out.push_back(line3_from_json(item));
  return out;
}

Json to_json(const std::vector<Line3>& lines) {
  Json out = Json::array();
  for (const auto& l : lines) out.push_back(to_json(l));
  return out;
}

ConvexBody body_from_json(const Json& j) {
  std::vector<Point3> vertices;
  for (const auto& v : array(field(j, "vertices"), "vertices")) vertices.push_back(point3_from_json(v));
  const auto it = j.find("inflation");
  return ConvexBody(std::move(vertices), it == j.end() ? Rational(0) : rational_from_json(*it));
}

Json to_json(const ConvexBody& body) {
  Json vertices = Json::array();
  for (const auto& v : body.vertices()) vertices.push_back(to_json(v));
  return {{"vertices", vertices}, {"inflation", to_json(body.inflation())}};
}

Json to_json(const ConvexPolygon3& polygon) {
  Json vertices = Json::array();
  for (const auto& v : polygon.vertices()) vertices.push_back(to_json(v));
  return {{"vertices", vertices}};
}

Ray2 ray2_from_json(const Json& j) {
  Ray2 r{point2_from_json(field(j, "origin")), point2_from_json(field(j, "dir"))};
  if (r.dir.isZero()) throw Error(ErrorKind::ZeroDirection, "ray direction is zero");
  return r;
}

Json to_json(const Ray2& r) { return {{"origin", to_json(r.origin)}, {"dir", to_json(r.dir)}}; }

RayTriple triple_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) parse_fail("a ray triple is a list of three rays");
  return RayTriple{{ray2_from_json(j[0]), ray2_from_json(j[1]), ray2_from_json(j[2])}};
}

Json to_json(const RayTriple& t) { return Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])}); }

HalfPlane halfplane_from_json(const Json& j) {
  return HalfPlane{point2_from_json(field(j, "normal")), rational_from_json(field(j, "offset"))};
}

Json to_json(const HalfPlane& h) { return {{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}}; }
Json to_json(const Line2& l) { return {{"normal", to_json(l.normal)}, {"offset", to_json(l.offset)}}; }
Json to_json(const Segment2& s) { return Json::array({to_json(s.a), to_json(s.b)}); }

Json to_json(const ConvexRegion2& region) {
  Json halfplanes = Json::array();
  for (const auto& h : region.halfplanes()) halfplanes.push_back(to_json(h));
  Json vertices = Json::array();
  for (const auto& v : region.vertices()) vertices.push_back(to_json(v));
  return {{"halfplanes", halfplanes}, {"vertices", vertices}, {"empty", region.is_empty()}};
}

LineD lined_from_json(const Json& j, int d) {
  return LineD(vector_from_json(field(j, "anchor"), d), vector_from_json(field(j, "dir"), d));
}

Json to_json(const LineD& l) { return {{"anchor", to_json(l.anchor())}, {"dir", to_json(l.dir())}}; }

Json to_json(const SigmaClass& c) {
  switch (c.kind) {
    case SigmaClass::Kind::OnSigmaLambda: return {{"kind", "on_sigma_lambda"}, {"param", to_json(c.param)}};
    case SigmaClass::Kind::OnSigmaEll: return {{"kind", "on_sigma_ell"}, {"param", to_json(c.param)}};
    case SigmaClass::Kind::Secant: break;
  }
  Json ys = Json::array();
  for (const auto& y : c.y_values) ys.push_back(to_json(y));
  return {{"kind", "secant"}, {"y_values", ys}, {"irrational_roots", c.irrational_roots}};
}

Json to_json(const WitnessPlan& plan) {
  Json params = Json::array();
  for (const auto& a : plan.b_params) params.push_back(to_json(a));
  return {{"beta_star", to_json(plan.beta_star)},
          {"s", to_json(plan.s)},
          {"delta_sq", plan.delta_sq ? to_json(*plan.delta_sq) : Json("inf")},
          {"alpha_min", to_json(plan.alpha_min)},
          {"b_indices", plan.b_indices},
          {"b_params", params},
          {"r_sigma", plan.r_sigma},
          {"r_prime", plan.r_prime}};
}

Json to_json(const VerificationReport& report) {
  return {{"stabbed", report.stabbed}, {"missed", report.missed}, {"violations", report.violations}};
}

Json to_json(const RefutationWitness& witness) {
  return {{"body", to_json(witness.body)},
          {"stabbed", witness.stabbed},
          {"plan", to_json(witness.plan)},
          {"report", to_json(witness.report)}};
}

Json to_json(const HardeningReport& report) {
  Json colliding = nullptr;
  if (report.colliding_pair) colliding = Json::array({report.colliding_pair->first, report.colliding_pair->second});
  return {{"lost_hits", pairs_to_json(report.lost_hits)},
          {"new_red_hits", pairs_to_json(report.new_red_hits)},
          {"colliding_pair", colliding},
          {"failed_checks", report.failed_checks()}};
}

Json to_json(const TripleCheck& check) {
  return {{"projected", to_json(check.projected)},
          {"separated", check.separated},
          {"nonempty", check.nonempty},
          {"origin_margin", to_json(check.origin_margin)},
          {"ok", check.ok()}};
}

Json to_json(const JointRegionCaseReport& report) {
  return {{"diagonal", report.which}, {"r", to_json(report.r)}, {"q", to_json(report.q)}, {"ok", report.ok()}};
}

Json to_json(const PerturbationCert& cert) {
  return {{"base", to_json(cert.base)},
          {"anchor", to_json(cert.anchor)},
          {"dir", to_json(cert.dir)},
          {"eps", to_json(cert.eps)},
          {"valid", cert.valid()}};
}

Json to_json(const DiagClaimReport& report) {
  Json counterexamples = Json::array();
  for (const auto& x : report.counterexamples) {
    counterexamples.push_back(Json::array({to_json(x[0]), to_json(x[1]), to_json(x[2])}));
  }
  return {{"eps", to_json(report.eps)},
          {"trials", report.trials},
          {"seed", std::to_string(report.seed)},
          {"certified_by", report.certified_by},
          {"worst_depth", report.worst_depth ? to_json(*report.worst_depth) : Json(nullptr)},
          {"counterexamples", counterexamples},
          {"ok", report.ok()}};
}

Json to_json(const Placement& placement) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < 3; ++r) rows.push_back(to_json(placement.rotation.row(r)));
  return {{"rotation", rows}, {"center", to_json(placement.center)}};
}

Placement placement_from_json(const Json& j) {
  const Json& rows = array(field(j, "rotation"), "rotation");
  if (rows.size() != 3) parse_fail("rotation must have three rows");
  Placement p;
  for (Eigen::Index r = 0; r < 3; ++r) p.rotation.row(r) = point3_from_json(rows[static_cast<std::size_t>(r)]);
  p.center = point3_from_json(field(j, "center"));
  return p;
}

Json to_json(const MultiCubeConfig& config) {
  Json placements = Json::array();
  for (const auto& p : config.placements) placements.push_back(to_json(p));
  Json blue = Json::array();
  for (std::size_t i = 0; i < config.blue.size(); ++i) {
    Json entry = to_json(config.blue[i]);
    entry["label"] = MultiCubeConfig::blue_label(i);
    blue.push_back(entry);
  }
  Json red = Json::array();
  for (std::size_t i = 0; i < config.red.size(); ++i) {
    Json entry = to_json(config.red[i]);
    entry["label"] = MultiCubeConfig::red_label(i);
    red.push_back(entry);
  }
  Json certs = Json::array();
  for (const auto& c : config.certs) certs.push_back(to_json(c));
  return {{"placements", placements}, {"eps", to_json(config.eps)}, {"seed", std::to_string(config.seed)},
          {"blue", blue}, {"red", red}, {"certificates", certs}};
}

MultiCubeConfig multicube_from_json(const Json& j) {
  const Json& list = array(field(j, "placements"), "placements");
  if (list.size() != 3) parse_fail("exactly three placements are required");
  const std::array<Placement, 3> placements{placement_from_json(list[0]), placement_from_json(list[1]),
                                            placement_from_json(list[2])};
  MultiCubeConfig config =
      assemble_three_cubes(placements, rational_from_json(field(j, "eps")), seed_from_json(field(j, "seed")));
  const auto compare = [&](const char* name, const std::vector<Line3>& rebuilt) {
    const auto it = j.find(name);
    if (it == j.end()) return;
    if (lines_from_json(*it) != rebuilt) {
      parse_fail(std::string("listed ") + name + " lines do not match the rebuilt configuration");
    }
  };
  compare("blue", config.blue);
  compare("red", config.red);
  return config;
}

Json to_json(const NineThirteenReport& report) {
  Json trials = Json::array();
  for (std::size_t t = 0; t < report.certificates.size(); ++t) {
    const int c = report.certificates[t];
    Json hitting = Json::array();
    for (int r : report.hitting[t]) hitting.push_back(MultiCubeConfig::red_label(static_cast<std::size_t>(r)));
    trials.push_back({{"trial", t},
                      {"regime", regime_name(report.regimes[t])},
                      {"hitting", hitting},
                      {"certificate", c < 0 ? Json(nullptr) : Json(MultiCubeConfig::red_label(static_cast<std::size_t>(c)))}});
  }
  return {{"trials", report.trials}, {"seed", std::to_string(report.seed)}, {"per_trial", trials},
          {"failures", report.failures}, {"ok", report.ok()}};
}

Json to_json(const ProjectionReport& report) {
  return {{"lifted_hits", report.lifted_hits},
          {"projection_hits", report.projection_hits},
          {"violated", report.violated()}};
}

}  // namespace weaknet
