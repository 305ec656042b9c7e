#include <doctest.h>

#include <cmath>
#include <set>
#include <tuple>

#include "oracle/reference.hpp"
#include "polynoise/gradient.hpp"

using namespace polynoise;

namespace {

constexpr double kTwoPowMinus20 = 1.0 / 1048576.0;

double l1(Gradient2 g) { return std::fabs(g.x) + std::fabs(g.y); }
double l1(Gradient3 g) { return std::fabs(g.x) + std::fabs(g.y) + std::fabs(g.z); }
double l1(Gradient4 g) { return std::fabs(g.x) + std::fabs(g.y) + std::fabs(g.z) + std::fabs(g.w); }

}  // namespace

TEST_CASE("grad2 examples") {
  const Gradient2 g0 = grad2(0.0f);
  CHECK(g0.x == 0.0f);
  CHECK(g0.y == 0.5f);

  // x = 20/41 - 1 evaluated by hand.
  const Gradient2 g10 = grad2(10.0f);
  CHECK(g10.x == doctest::Approx(20.0 / 41.0).epsilon(1e-6));
  CHECK(g10.y == doctest::Approx(0.5 / 41.0).epsilon(1e-5));
  CHECK(l1(g10) == doctest::Approx(0.5).epsilon(1e-7));

  // The fold repeats every 41 indices up to the rounding of 1/41.
  const Gradient2 g41 = grad2(41.0f);
  CHECK(std::fabs(g41.x - g0.x) <= kTwoPowMinus20);
  CHECK(std::fabs(g41.y - g0.y) <= kTwoPowMinus20);
}

TEST_CASE("grad2 lies on the diamond for every hash") {
  for (int h = 0; h < 289; ++h) {
    const Gradient2 g = grad2(static_cast<float>(h));
    REQUIRE(std::fabs(l1(g) - 0.5) <= kTwoPowMinus20);
    const auto ref = oracle::referenceGradient<2>(h);
    REQUIRE(std::fabs(g.x - ref[0]) <= 1e-6);
    REQUIRE(std::fabs(g.y - ref[1]) <= 1e-6);
  }
}

TEST_CASE("grad2 has 41 distinct directions") {
  std::set<std::pair<float, float>> directions;
  for (int h = 0; h < 41; ++h) {
    const Gradient2 g = grad2(static_cast<float>(h));
    directions.insert({g.x, g.y});
  }
  CHECK(directions.size() == 41);
}

TEST_CASE("grad3 examples") {
  // k = 24: a = b = 3, inside the octahedron face.
  const Gradient3 inner = grad3(24.0f);
  CHECK(inner.x == doctest::Approx(-1.0 / 14.0).epsilon(1e-6));
  CHECK(inner.y == doctest::Approx(-1.0 / 14.0).epsilon(1e-6));
  CHECK(inner.z == doctest::Approx(6.0 / 7.0).epsilon(1e-6));

  // k = 48: a = b = 6, folded to the opposite face.
  const Gradient3 folded = grad3(48.0f);
  CHECK(folded.x == doctest::Approx(-3.0 / 14.0).epsilon(1e-6));
  CHECK(folded.y == doctest::Approx(-3.0 / 14.0).epsilon(1e-6));
  CHECK(folded.z == doctest::Approx(-4.0 / 7.0).epsilon(1e-6));
  CHECK(l1(folded) == doctest::Approx(1.0).epsilon(1e-6));

  // Same fold for every index congruent mod 49.
  CHECK(grad3(48.0f + 49.0f).z == folded.z);
}

TEST_CASE("grad3 covers 49 octahedron points with unit L1 norm") {
  std::set<std::tuple<float, float, float>> points;
  for (int h = 0; h < 289; ++h) {
    const Gradient3 g = grad3(static_cast<float>(h));
    REQUIRE(std::fabs(l1(g) - 1.0) <= 1e-6);
    const auto ref = oracle::referenceGradient<3>(h);
    REQUIRE(std::fabs(g.x - ref[0]) <= 1e-6);
    REQUIRE(std::fabs(g.y - ref[1]) <= 1e-6);
    REQUIRE(std::fabs(g.z - ref[2]) <= 1e-6);
    points.insert({g.x, g.y, g.z});
  }
  CHECK(points.size() == 49);
}

TEST_CASE("grad4 examples") {
  // a = b = 3, c = 3: interior branch, w > 0.
  const Gradient4 inner = grad4(49.0f * 3 + 7.0f * 3 + 3);
  CHECK(inner.w > 0.0f);
  CHECK(inner.x == doctest::Approx(-1.0 / 14.0).epsilon(1e-6));
  CHECK(inner.z == doctest::Approx(1.0 / 12.0).epsilon(1e-6));
  CHECK(l1(inner) == doctest::Approx(1.5).epsilon(1e-6));

  // k = 293: a = b = 6, c = 5, folded branch.
  const Gradient4 folded = grad4(293.0f);
  CHECK(folded.w < 0.0f);
  CHECK(folded.x == doctest::Approx(-3.0 / 14.0).epsilon(1e-6));
  CHECK(folded.z == doctest::Approx(-0.25).epsilon(1e-6));
  CHECK(l1(folded) == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("all 294 grad4 points lie on the truncated cross-polytope") {
  std::set<std::tuple<float, float, float, float>> points;
  for (int k = 0; k < 294; ++k) {
    const Gradient4 g = grad4(static_cast<float>(k));
    REQUIRE(std::fabs(l1(g) - 1.5) <= 1e-6);
    const auto ref = oracle::referenceGradient<4>(k);
    REQUIRE(std::fabs(g.x - ref[0]) <= 1e-6);
    REQUIRE(std::fabs(g.w - ref[3]) <= 1e-6);
    points.insert({g.x, g.y, g.z, g.w});
  }
  CHECK(points.size() == 294);
}

TEST_CASE("implicit normalization stays positive over every gradient set") {
  for (int k = 0; k < 294; ++k) {
    const float h = static_cast<float>(k);
    const Gradient2 g2 = grad2(h);
    const Gradient3 g3 = grad3(h);
    const Gradient4 g4 = grad4(h);
    REQUIRE(taylorInvSqrt(dot(g2, g2)) > 0.0f);
    REQUIRE(taylorInvSqrt(dot(g3, g3)) > 0.0f);
    REQUIRE(taylorInvSqrt(dot(g4, g4)) > 0.0f);
  }
}

TEST_CASE("taylorInvSqrt") {
  CHECK(taylorInvSqrt(0.0f) == 1.79284291400159f);
  CHECK(std::fabs(taylorInvSqrt(0.7f) - 1.0 / std::sqrt(0.7)) <= 1e-6);
  // The linear term is the tangent of 1/sqrt(r) at r = 0.7 (double check).
  CHECK(std::fabs(1.79284291400159 - 0.85373472095314 * 0.7 - 1.0 / std::sqrt(0.7)) < 1e-13);

  const double atOne = taylorInvSqrt(1.0f);
  CHECK(atOne == doctest::Approx(0.93910819).epsilon(1e-6));
  CHECK(1.0 - atOne == doctest::Approx(0.0609).epsilon(1e-3));

  double worst = 0.0;
  for (int k = 0; k <= 1000; ++k) {
    const double r = 0.5 + 0.5 * k / 1000.0;
    worst = std::max(worst, std::fabs(taylorInvSqrt(static_cast<float>(r)) * std::sqrt(r) - 1.0));
  }
  CHECK(worst <= 0.07);
}
