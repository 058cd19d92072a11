#include <doctest.h>

#include "helpers.hpp"
#include "random_instances.hpp"
#include "weaknet/error.hpp"
#include "weaknet/net_game.hpp"

using namespace testing;

namespace {

RefutationWitness worked_game() {
  return refute(RulingFamily::integers(7), q("1/2"), 3, {lambda_line(1), lambda_line(2), x_axis()});
}

}  // namespace

TEST_CASE("minimal n table") {
  CHECK(minimal_n(q("1/2"), 3) == 7);
  CHECK(minimal_n(q("3/4"), 1) == 5);
  CHECK(minimal_n(q("1/2"), 1) == 3);
  CHECK_THROWS_AS(minimal_n(q("0"), 1), Error);
  CHECK_THROWS_AS(minimal_n(q("1"), 1), Error);
  for (const char* e : {"1/4", "1/2", "3/4", "2/3", "9/10"}) {
    for (long k = 1; k <= 8; ++k) {
      const long n = minimal_n(q(e), k);
      CHECK(Rational(n) * (1 - q(e)) > k);
      CHECK_FALSE(Rational(n - 1) * (1 - q(e)) > k);
      // |B| >= n - k > eps n.
      CHECK(Rational(n - k) > q(e) * n);
    }
  }
}

TEST_CASE("stab quota") {
  CHECK(stab_quota(q("1/2"), 7) == 4);
  CHECK(stab_quota(q("1/2"), 8) == 4);
  CHECK(stab_quota(q("3/4"), 5) == 4);
}

TEST_CASE("the worked refutation") {
  const RefutationWitness w = worked_game();
  CHECK(w.stabbed == std::vector<std::size_t>{2, 3, 4, 5, 6});
  CHECK(w.report.ok());
  CHECK(w.report.missed.size() == 3);
  CHECK(w.plan.s == q("1/2"));
}

TEST_CASE("refutation edge cases") {
  const RefutationWitness all = refute(RulingFamily::integers(3), q("1/2"), 1, {});
  CHECK(all.stabbed.size() == 3);
  const RefutationWitness inside = refute(RulingFamily::integers(6), q("1/4"), 3,
                                          {lambda_line(1), lambda_line(2), lambda_line(3)});
  CHECK(inside.stabbed == std::vector<std::size_t>{3, 4, 5});
  CHECK(inside.report.ok());
  try {
    refute(RulingFamily::integers(7), q("1/2"), 1, {x_axis(), y_axis()});
    FAIL("expected TooManyAdversaryLines");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooManyAdversaryLines);
  }
  CHECK_THROWS_AS(refute(RulingFamily::integers(6), q("1/2"), 3, {}), Error);
}

TEST_CASE("random games") {
  Rng rng(41);
  for (const char* e : {"1/4", "1/2", "3/4"}) {
    for (long k = 1; k <= 5; ++k) {
      const long n = minimal_n(q(e), k);
      const RulingFamily fam = RulingFamily::integers(static_cast<std::size_t>(n));
      for (int t = 0; t < 10; ++t) {
        const auto red = random_adversary(rng, fam, k);
        const RefutationWitness w = refute(fam, q(e), k, red);
        CHECK(static_cast<long>(w.stabbed.size()) >= stab_quota(q(e), n));
        CHECK(w.report.ok());
        if (!red.empty()) {
          CHECK(miss_margin({w.body}, red) > 0);
        }
        for (const auto& r : red) CHECK_FALSE(line_meets_body(r, w.body));
      }
    }
  }
}

TEST_CASE("inflation") {
  const ConvexBody point({vec3(0, 0, 1)});
  CHECK(inflate(point, 1).inflation() == 1);
  CHECK(line_meets_body(x_axis(), inflate(point, 1)));
  CHECK_FALSE(line_meets_body(x_axis(), inflate(point, q("99/100"))));
  CHECK(inflate(inflate(point, q("1/3")), q("1/6")).inflation() == inflate(point, q("1/2")).inflation());
  try {
    inflate(point, 0);
    FAIL("expected NonpositiveRadius");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonpositiveRadius);
  }
  const ConvexBody seg({p3("1", "4/3", "4/3"), p3("2", "7/6", "7/3")});
  CHECK_FALSE(line_meets_body(x_axis(), inflate(seg, q("1/100"))));
}

TEST_CASE("meeting implies meeting the interior of any inflation") {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const auto cloud = random_cloud(rng, 1 + rng.below(5), 3);
    const Line3 l(cloud[rng.below(cloud.size())], random_point(rng) + vec3(0, 9, 0));
    CHECK(line_meets_interior(l, inflate(ConvexBody(cloud), q("1/1000000"))));
  }
}

TEST_CASE("miss margin") {
  const ConvexBody seg({p3("1", "4/3", "4/3"), p3("2", "7/6", "7/3")});
  CHECK(miss_margin({seg}, {x_axis()}) == q("32/9"));
  CHECK(miss_margin({seg}, {x_axis(), lambda_line(2)}) == 0);
  CHECK(miss_margin({seg, ConvexBody({vec3(100, 100, 100)})}, {x_axis(), lambda_line(2)}) == 11604);  // 98^2 + 100^2/5
  CHECK_THROWS_AS(miss_margin({}, {x_axis()}), Error);
}

TEST_CASE("hardening the worked game passes") {
  const RulingFamily fam = RulingFamily::integers(7);
  Rng rng(43);
  const auto jitters = random_jitters(fam.size(), q("1/1000000"), rng);
  const HardenedConfig h = harden(fam, {worked_game()}, q("1/1000"), jitters, q("1/1000000"));
  CHECK(h.report.ok());
  CHECK(h.inflated.front().inflation() == q("1/1000"));
  CHECK(pairwise_skew(h.perturbed));
}

TEST_CASE("hardening failure paths") {
  const RulingFamily fam = RulingFamily::integers(7);
  const RefutationWitness w = worked_game();
  std::vector<LineJitter> none(fam.size(), LineJitter{0, 0, 0, 0, 0, 0});

  // Move lambda_1 onto lambda_2.
  std::vector<LineJitter> collide = none;
  const Line3 a = fam.line(0), b = fam.line(1);
  for (int c = 0; c < 3; ++c) {
    collide[0][c] = b.anchor()(c) - a.anchor()(c);
    collide[0][3 + c] = b.dir()(c) - a.dir()(c);
  }
  try {
    harden(fam, {w}, q("1/1000"), collide, 10);
    FAIL("expected HardeningError");
  } catch (const HardeningError& e) {
    CHECK(e.kind() == ErrorKind::HardeningFailed);
    CHECK(e.report().failed_checks() == std::vector<std::string>{"pairwise_skew"});
    CHECK(e.report().colliding_pair == std::make_pair(std::size_t{0}, std::size_t{1}));
  }

  // delta' just above the exact margin of the closest adversary line.
  std::size_t closest = 0;
  for (std::size_t j = 1; j < w.adversary.size(); ++j) {
    if (line_body_distance_sq(w.adversary[j], w.body) < line_body_distance_sq(w.adversary[closest], w.body)) closest = j;
  }
  const Rational margin = line_body_distance_sq(w.adversary[closest], w.body);
  const Rational delta = round_to_denominator(std::sqrt(to_double(margin)) + 1e-9, 1000000000);
  REQUIRE(delta * delta >= margin);
  REQUIRE((delta - Rational(Integer(1), Integer(100000))) * (delta - Rational(Integer(1), Integer(100000))) < margin);
  try {
    harden(fam, {w}, delta, none, 0);
    FAIL("expected HardeningError");
  } catch (const HardeningError& e) {
    CHECK(e.report().failed_checks() == std::vector<std::string>{"adversary-now-hits"});
    CHECK(e.report().new_red_hits == std::vector<std::pair<std::size_t, std::size_t>>{{0, closest}});
  }
}
