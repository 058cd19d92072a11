#include "weaknet/cli.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "weaknet/cube.hpp"
#include "weaknet/error.hpp"
#include "weaknet/higher_dim.hpp"
#include "weaknet/json_io.hpp"
#include "weaknet/net_game.hpp"
#include "weaknet/rng.hpp"
#include "weaknet/ruling.hpp"

namespace weaknet::cli {
namespace {

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void param(const std::string& name, Json value) { params_[name] = std::move(value); }
  void seed(std::uint64_t s) { seed_ = std::to_string(s); }
  void extra(const std::string& name, Json value) { extra_[name] = std::move(value); }

  void check(const std::string& name, bool pass, Json certificate) {
    checks_.push_back({{"name", name}, {"pass", pass}, {"certificate", std::move(certificate)}});
    all_passed_ = all_passed_ && pass;
  }

  bool all_passed() const { return all_passed_; }

  Json finish(std::chrono::steady_clock::duration elapsed) const {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    Json out = {{"command", command_}, {"parameters", params_}, {"seed", seed_}, {"checks", checks_}};
    for (const auto& [k, v] : extra_.items()) out[k] = v;
    out["all_passed"] = all_passed_;
    out["wall_time_s"] = to_string(Rational(Integer(ms), Integer(1000)));
    return out;
  }

 private:
  std::string command_;
  Json params_ = Json::object();
  Json seed_ = nullptr;
  Json checks_ = Json::array();
  Json extra_ = Json::object();
  bool all_passed_ = true;
};

Rational rational_flag(const std::string& text) { return parse_rational(text); }

std::uint64_t seed_flag(const std::string& text) {
  const Rational q = parse_rational(text);
  if (!is_integer(q) || q < 0) throw Error(ErrorKind::ParseError, "seed must be a non-negative integer");
  return numerator(q).convert_to<std::uint64_t>();
}

long positive_flag(const std::string& name, const std::string& text) {
  const Rational q = parse_rational(text);
  if (!is_integer(q) || q < 1) throw Error(ErrorKind::ParseError, name + " must be a positive integer");
  return numerator(q).convert_to<long>();
}

std::vector<std::size_t> indices_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "B must be a list of indices");
  std::vector<std::size_t> out;
  for (const auto& item : j) out.push_back(index_from_json(item));
  return out;
}

const Json& require(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorKind::ParseError, std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

// Each subcommand fills a Report; the caller handles timing and exit codes.

void ruling_witness(Report& report, const std::string& input) {
  const Json j = read_json_file(input);
  std::vector<Rational> params;
  for (const auto& a : require(j, "A")) params.push_back(rational_from_json(a));
  const RulingFamily family(std::move(params));
  const auto b = indices_from_json(require(j, "B"));
  for (std::size_t i : b) {
    if (i >= family.size()) throw Error(ErrorKind::ParseError, "B index out of range");
  }
  const std::vector<Line3> red = lines_from_json(require(j, "R"));
  report.param("input", j);
  const WitnessPlan plan = witness_plan(family, b, red);
  const ConvexPolygon3 polygon = build_witness(plan);
  std::vector<Line3> blue;
  for (std::size_t i : plan.b_indices) blue.push_back(family.line(i));
  const VerificationReport verified = verify_witness(polygon, blue, red);
  report.extra("plan", to_json(plan));
  report.extra("witness", to_json(polygon));
  report.extra("report", to_json(verified));
  report.check("stab-all-B", verified.stabbed.size() == blue.size(), verified.stabbed);
  report.check("miss-all-R", verified.missed.size() == red.size(), verified.missed);
  report.check("no-violations", verified.ok(), verified.violations);
}

struct NetRefuteArgs {
  std::string epsilon;
  std::string k;
  std::string n;
  std::string adversary;
  std::vector<std::string> harden;
  std::string seed = "0";
};

void net_refute(Report& report, const NetRefuteArgs& args) {
  const Rational epsilon = rational_flag(args.epsilon);
  const long k = positive_flag("--k", args.k);
  const long n = args.n.empty() ? minimal_n(epsilon, k) : positive_flag("--n", args.n);
  const std::uint64_t seed = seed_flag(args.seed);
  const Json adversary_json = read_json_file(args.adversary);
  const std::vector<Line3> red =
      lines_from_json(adversary_json.is_object() ? require(adversary_json, "lines") : adversary_json);
  report.param("epsilon", to_json(epsilon));
  report.param("k", std::to_string(k));
  report.param("n", std::to_string(n));
  report.param("adversary", to_json(red));

  const RulingFamily family = RulingFamily::integers(static_cast<std::size_t>(n));
  const RefutationWitness witness = refute(family, epsilon, k, red);
  const long quota = stab_quota(epsilon, n);
  report.extra("witness", to_json(witness));
  report.extra("stabbed", witness.stabbed.size());
  report.extra("quota", quota);
  report.check("stab-quota", static_cast<long>(witness.stabbed.size()) >= quota,
               {{"stabbed", witness.stabbed.size()}, {"quota", quota}});
  report.check("adversary-misses", witness.report.missed.size() == red.size(), witness.report.missed);
  report.check("witness-verified", witness.report.ok(), witness.report.violations);

  if (args.harden.empty()) return;
  if (args.harden.size() != 2) throw Error(ErrorKind::ParseError, "--harden takes DELTA_PRIME JITTER");
  const Rational delta_prime = rational_flag(args.harden[0]);
  const Rational jitter = rational_flag(args.harden[1]);
  if (jitter < 0) throw Error(ErrorKind::InvalidArgument, "jitter must be nonnegative");
  report.seed(seed);
  report.param("delta_prime", to_json(delta_prime));
  report.param("jitter", to_json(jitter));
  Rng rng(seed);
  const auto jitters = random_jitters(family.size(), jitter, rng);
  HardeningReport hardening;
  try {
    hardening = harden(family, {witness}, delta_prime, jitters, jitter).report;
  } catch (const HardeningError& e) {
    hardening = e.report();
  }
  const Json cert = to_json(hardening);
  report.extra("hardening", cert);
  report.check("interior-hit", hardening.interior_hits_ok(), cert["lost_hits"]);
  report.check("adversary-miss", hardening.adversary_misses_ok(), cert["new_red_hits"]);
  report.check("pairwise-skew", hardening.skew_ok(), cert["colliding_pair"]);
}

void add_joint_region_cases(Report& report) {
  for (int which = 1; which <= 4; ++which) {
    const JointRegionCaseReport c = check_joint_region_case(which);
    report.check("joint-region-case-" + std::to_string(which), c.ok(), to_json(c));
  }
}

void cube_verify(Report& report, const std::string& eps_text, const std::string& trials_text,
                 const std::string& seed_text, const std::string& config_path) {
  const Rational eps = rational_flag(eps_text);
  const long trials = positive_flag("--trials", trials_text);
  const std::uint64_t seed = seed_flag(seed_text);
  report.param("eps", to_json(eps));
  report.param("trials", std::to_string(trials));
  report.seed(seed);
  std::optional<MultiCubeConfig> config;
  if (!config_path.empty()) {
    const Json j = read_json_file(config_path);
    config = multicube_from_json(j.contains("config") ? j.at("config") : j);
    report.param("config", config_path);
  }
  add_joint_region_cases(report);
  const DiagClaimReport claim = verify_diag_claim(eps, trials, seed);
  report.check("diag-claim", claim.ok(), to_json(claim));
  if (config) {
    const NineThirteenReport nine = verify_nine_thirteen(*config, trials, seed);
    report.check("nine-thirteen", nine.ok(), to_json(nine));
  }
}

void cube_assemble(Report& report, const std::string& separation_text, const std::string& eps_text,
                   const std::string& seed_text) {
  const Rational separation = rational_flag(separation_text);
  const Rational eps = rational_flag(eps_text);
  const std::uint64_t seed = seed_flag(seed_text);
  report.param("separation", to_json(separation));
  report.param("eps", to_json(eps));
  report.seed(seed);
  const MultiCubeConfig config = assemble_three_cubes(default_placements(separation), eps, seed);
  std::vector<Line3> all = config.blue;
  all.insert(all.end(), config.red.begin(), config.red.end());
  report.check("pairwise-skew", pairwise_skew(all), Json(all.size()));
  bool certs_ok = true;
  for (const auto& c : config.certs) certs_ok = certs_ok && c.valid();
  report.check("perturbation-certificates", certs_ok, Json(config.certs.size()));
  report.extra("config", to_json(config));
}

void rays_joint_region(Report& report, const std::string& input, const std::vector<std::string>& point) {
  const Json j = read_json_file(input);
  const RayTriple triple = triple_from_json(j.is_object() ? require(j, "rays") : j);
  report.param("rays", to_json(triple));
  std::optional<Point2> p;
  if (!point.empty()) {
    if (point.size() != 2) throw Error(ErrorKind::ParseError, "--point takes X Y");
    p = vec2(rational_flag(point[0]), rational_flag(point[1]));
  } else if (j.is_object() && j.contains("point")) {
    p = point2_from_json(j.at("point"));
  }
  if (const auto transversal = find_transversal(triple)) {
    report.check("separated", false, {{"transversal", to_json(*transversal)}});
    return;
  }
  if (!directions_pairwise_nonparallel(triple)) {
    report.check("separated", false, "parallel directions");
    return;
  }
  report.check("separated", true, nullptr);
  Json strips = Json::array();
  for (std::size_t i = 0; i < 3; ++i) strips.push_back(to_json(half_strip(triple, i)));
  const ConvexRegion2 region = joint_region(triple);
  report.extra("half_strips", strips);
  report.extra("joint_region", to_json(region));
  const auto interior = region.interior_point();
  report.check("joint-region-nonempty", !region.is_empty(),
               interior ? to_json(*interior) : Json(nullptr));
  if (p) {
    report.param("point", to_json(*p));
    report.check("point-in-joint-region", region.contains(*p),
                 {{"margin", to_json(interior_margin(region, *p))}});
  }
}

void project_d(Report& report, const std::string& d_text, const std::string& input) {
  const long d = positive_flag("--d", d_text);
  if (d < 3) throw Error(ErrorKind::InvalidArgument, "--d must be at least 3");
  const Json j = read_json_file(input);
  const LineD line = lined_from_json(require(j, "line"), static_cast<int>(d));
  const ConvexBody body = body_from_json(require(j, "body"));
  report.param("d", std::to_string(d));
  report.param("line", to_json(line));
  report.param("body", to_json(body));
  const ProjectionReport result = verify_projection_property(line, body);
  const auto projected = project_line_to_S(line);
  Json projection = std::holds_alternative<Line3>(projected)
                        ? Json{{"line", to_json(std::get<Line3>(projected))}}
                        : Json{{"point", to_json(std::get<Point3>(projected))}};
  report.extra("projection", projection);
  report.check("projection-implication", !result.violated(), to_json(result));
}

void selftest(Report& report) {
  // (t,t,t) misses all three blue lines; each other diagonal meets exactly two.
  const auto blue = blue_lines();
  const auto diagonals = main_diagonals();
  for (std::size_t j = 0; j < 4; ++j) {
    Json hits = Json::array();
    for (const auto& b : blue) hits.push_back(line_line_dist_sq(diagonals[j], b) == 0);
    long count = 0;
    for (const auto& h : hits) count += h.get<bool>() ? 1 : 0;
    report.check("incidence-diag-" + std::to_string(j + 1), count == (j == 0 ? 0 : 2), hits);
  }
  add_joint_region_cases(report);
  const std::array<std::tuple<const char*, long, long>, 3> table{
      {{"1/2", 3, 7}, {"3/4", 1, 5}, {"1/2", 1, 3}}};
  for (const auto& [eps, k, expected] : table) {
    const long n = minimal_n(parse_rational(eps), k);
    report.check(std::string("minimal-n-") + eps + "-" + std::to_string(k), n == expected, std::to_string(n));
  }
  const WitnessPlan plan = witness_plan(RulingFamily::integers(2), {0, 1}, {ell_line(0)});
  const Json segment = to_json(build_witness(plan));
  const Json expected = parse_json(R"({"vertices": [["1","4/3","4/3"], ["2","7/6","7/3"]]})");
  report.check("witness-segment-A12", segment == expected, segment);
}

int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::HardeningFailed ? kCheckFailed : kBadInput;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the weak epsilon-net lower-bound constructions", "weaknet"};
  app.require_subcommand(1);

  std::string input = "-";
  auto* ruling = app.add_subcommand("ruling-witness", "Build and verify a witness polygon from {A, B, R}");
  ruling->add_option("--input", input, "JSON file, '-' for standard input");

  NetRefuteArgs net;
  auto* refute_cmd = app.add_subcommand("net-refute", "Refute an adversary's k lines on the ruling family");
  refute_cmd->add_option("--epsilon", net.epsilon, "Rational in (0, 1)")->required();
  refute_cmd->add_option("--k", net.k, "Adversary size")->required();
  refute_cmd->add_option("--n", net.n, "Family size (default: minimal)");
  refute_cmd->add_option("--adversary", net.adversary, "JSON list of lines")->required();
  refute_cmd->add_option("--harden", net.harden, "DELTA_PRIME JITTER")->expected(2);
  refute_cmd->add_option("--seed", net.seed, "Seed for the jitters");

  std::string eps = "1/100";
  std::string trials = "1000";
  std::string seed = "0";
  std::string config;
  auto* verify = app.add_subcommand("cube-verify", "Verify the cube gadget claims");
  verify->add_option("--eps", eps, "Perturbation budget");
  verify->add_option("--trials", trials, "Number of sampled triangles");
  verify->add_option("--seed", seed, "Seed");
  verify->add_option("--config", config, "Three-cube configuration to sample as well");

  std::string separation = "1000";
  auto* assemble = app.add_subcommand("cube-assemble", "Assemble the nine blue and thirteen red lines");
  assemble->add_option("--separation", separation, "Distance of each center from the origin");
  assemble->add_option("--eps", eps, "Perturbation budget");
  assemble->add_option("--seed", seed, "Seed");

  std::vector<std::string> point;
  auto* rays = app.add_subcommand("rays-joint-region", "Joint region of a separated ray triple");
  rays->add_option("--input", input, "JSON file, '-' for standard input");
  rays->add_option("--point", point, "X Y")->expected(2);

  std::string d = "4";
  auto* project = app.add_subcommand("project-d", "Check the projection implication in R^d");
  project->add_option("--d", d, "Ambient dimension")->required();
  project->add_option("--input", input, "JSON file, '-' for standard input");

  auto* self = app.add_subcommand("selftest", "Run the fixed exact fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kAllPassed;
  } catch (const CLI::ParseError& e) {
    err << "ParseError: " << e.what() << "\n";
    return kBadInput;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report(app.get_subcommands().front()->get_name());
  try {
    if (*ruling) ruling_witness(report, input);
    if (*refute_cmd) net_refute(report, net);
    if (*verify) cube_verify(report, eps, trials, seed, config);
    if (*assemble) cube_assemble(report, separation, eps, seed);
    if (*rays) rays_joint_region(report, input, point);
    if (*project) project_d(report, d, input);
    if (*self) selftest(report);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  }
  out << report.finish(std::chrono::steady_clock::now() - start).dump(2) << "\n";
  if (!report.all_passed()) {
    err << "one or more checks failed\n";
    return kCheckFailed;
  }
  return kAllPassed;
}

}  // namespace weaknet::cli
