#pragma once

// JSON encoding of the library's values. Every rational is a string "p/q" or
// "p"; JSON numbers are rejected wherever a rational is expected, and
// floating-point literals are rejected anywhere in a document. Non-negative
// JSON integers are accepted only for indices.

#include <string>
#include <string_view>

#include <json.hpp>

#include "weaknet/cube.hpp"
#include "weaknet/geometry.hpp"
#include "weaknet/higher_dim.hpp"
#include "weaknet/net_game.hpp"
#include "weaknet/planar_rays.hpp"
#include "weaknet/ruling.hpp"

namespace weaknet {

using Json = nlohmann::ordered_json;

/// Throws ParseError on malformed text or any floating-point literal.
Json parse_json(std::string_view text);
/// Reads and parses a file; "-" reads standard input.
Json read_json_file(const std::string& path);

Rational rational_from_json(const Json& j);
std::size_t index_from_json(const Json& j);
Json to_json(const Rational& q);

/// A list of rational strings of the given length (any length when size < 0).
VecX vector_from_json(const Json& j, Eigen::Index size = -1);
Point2 point2_from_json(const Json& j);
Point3 point3_from_json(const Json& j);
template <typename Derived>
Json to_json(const Eigen::MatrixBase<Derived>& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(Rational(v(i))));
  return out;
}

Line3 line3_from_json(const Json& j);
Json to_json(const Line3& l);
std::vector<Line3> lines_from_json(const Json& j);
Json to_json(const std::vector<Line3>& lines);

ConvexBody body_from_json(const Json& j);
Json to_json(const ConvexBody& body);
Json to_json(const ConvexPolygon3& polygon);

Ray2 ray2_from_json(const Json& j);
Json to_json(const Ray2& r);
RayTriple triple_from_json(const Json& j);
Json to_json(const RayTriple& t);
HalfPlane halfplane_from_json(const Json& j);
Json to_json(const HalfPlane& h);
Json to_json(const Line2& l);
Json to_json(const Segment2& s);
/// {"halfplanes": [...], "vertices": [...], "empty": bool}
Json to_json(const ConvexRegion2& region);

LineD lined_from_json(const Json& j, int d);
Json to_json(const LineD& l);

Json to_json(const SigmaClass& c);
Json to_json(const WitnessPlan& plan);
Json to_json(const VerificationReport& report);
Json to_json(const RefutationWitness& witness);
Json to_json(const HardeningReport& report);

Json to_json(const TripleCheck& check);
Json to_json(const JointRegionCaseReport& report);
Json to_json(const PerturbationCert& cert);
Json to_json(const DiagClaimReport& report);
Json to_json(const Placement& placement);
Placement placement_from_json(const Json& j);
/// Placements, eps, seed and every line with its label.
Json to_json(const MultiCubeConfig& config);
/// Rebuilds the configuration from placements, eps and seed, then checks any
/// listed lines against the rebuilt ones (ParseError on mismatch).
MultiCubeConfig multicube_from_json(const Json& j);
Json to_json(const NineThirteenReport& report);
Json to_json(const ProjectionReport& report);

}  // namespace weaknet
