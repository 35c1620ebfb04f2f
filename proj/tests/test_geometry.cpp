// SPDX-License-Identifier: Apache-2.0
//
// vlcoris: reflector-assisted indoor visible light communication simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cmath>
#include <random>
#include <stdexcept>

#include "approx.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "vlcoris/geometry.hpp"

using namespace vlcoris;

TEST_CASE("segment blockage by the body cylinder") {
  const BodyCylinder body{{1.0, 1.3, 0.0}, 0.15, 1.75};
  CHECK_FALSE(segment_blocked({{1, 1, 3}, {1, 1, 1}}, body));

  const BodyCylinder centred{{1.0, 1.0, 0.0}, 0.15, 1.75};
  const Segment diag{{0, 0, 3}, {2, 2, 1}};
  const bool sampled = oracle::sampled_blocked({0, 0, 3}, {2, 2, 1}, {1, 1, 0}, 0.15, 1.75);
  CHECK(segment_blocked(diag, centred) == sampled);
  // Within 0.15 m of the axis the segment stays between z = 1.89 and 2.11,
  // clear of the 1.75 m top.
  CHECK_FALSE(sampled);
  CHECK(segment_blocked({{0, 0, 1.5}, {2, 2, 1.0}}, centred));

  SUBCASE("segments above the body never block") {
    CHECK_FALSE(segment_blocked({{0, 0, 2.0}, {3, 3, 2.5}}, centred));
  }
}

TEST_CASE("segment blockage agrees with dense sampling") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int disagree = 0;
  for (int i = 0; i < 2000; ++i) {
    const oracle::P3 a{4 * u(rng), 4 * u(rng), 3 * u(rng)};
    const oracle::P3 b{4 * u(rng), 4 * u(rng), 3 * u(rng)};
    const oracle::P3 base{1 + 2 * u(rng), 1 + 2 * u(rng), 0};
    const bool exact = segment_blocked({{a.x, a.y, a.z}, {b.x, b.y, b.z}},
                                       BodyCylinder{{base.x, base.y, 0}, 0.3, 1.75});
    const bool sampled = oracle::sampled_blocked(a, b, base, 0.3, 1.75);
    // Sampling can only miss grazing intersections, never invent one.
    if (sampled) CHECK(exact);
    disagree += exact != sampled;
  }
  CHECK(disagree <= 4);
}

TEST_CASE("specular point by the image method") {
  const Room room;
  const WallGrid wall(WallId::x0, room, 30, 15);

  const auto p = specular_point_on_plane({1, 2, 3}, {1, 2, 1}, wall);
  REQUIRE(p);
  CHECK(p->x == doctest::Approx(0.0));
  CHECK(p->y == rel(2.0));
  CHECK(p->z == rel(2.0));
  CHECK(mirror_image({1, 2, 1}, wall) == Point3{-1, 2, 1});

  // LED and receiver share a vertical line parallel to the wall: the path
  // still meets x = 0, halfway up by symmetry.
  const auto q = specular_point({1, 0.5, 3}, {1, 0.5, 1}, wall);
  REQUIRE(q);
  CHECK(q->point.z == rel(2.0));
  CHECK(q->point.y == rel(0.5));

  // A reflection point beyond the wall's edge has no element.
  CHECK_FALSE(specular_point({1, 2, 3}, {1, 8, 1}, wall));
  CHECK(wall.locate({0, 2, 2}).has_value());
}

TEST_CASE("specular point equalises incidence and reflection angles") {
  const Room room;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int i = 0; i < 1000; ++i) {
    const WallGrid wall(static_cast<WallId>(i % 4), room, 30, 15);
    const Point3 led{4 * u(rng), 4 * u(rng), 2 + u(rng)};
    const Point3 pd{4 * u(rng), 4 * u(rng), 1.5 * u(rng)};
    const auto q = specular_point_on_plane(led, pd, wall);
    REQUIRE(q);
    const Vec3 n = wall.normal();
    const Vec3 a = led - *q, b = pd - *q;
    const double in = std::acos(a.dot(n) / a.norm());
    const double out = std::acos(b.dot(n) / b.norm());
    CHECK(std::abs(in - out) < 1e-9);
    // Same plane of incidence: the two directions and the normal are coplanar.
    const Vec3 c{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    CHECK(std::abs(c.dot(n)) < 1e-9 * (1 + c.norm()));
  }
}

TEST_CASE("coverage limits") {
  CHECK(coverage_limit(ReflectorMode::oris, 1.0, 3.0, 1.0, deg_to_rad(50.0)) ==
        rel(2.38351).epsilon(1e-5));
  CHECK(coverage_limit(ReflectorMode::oris, 1.0, 3.0, 1.0, 1e-9) == doctest::Approx(0.0));
  for (double x : {0.0, 1.0, 2.5, 4.0})
    CHECK(coverage_limit(ReflectorMode::oris, x, 3.0, 1.0, deg_to_rad(40.0)) ==
          coverage_limit(ReflectorMode::oris, 0.0, 3.0, 1.0, deg_to_rad(40.0)));
  // Mirrors lose reach as the LED moves away from the wall.
  CHECK(coverage_limit(ReflectorMode::mirror, 0.5, 3.0, 1.0, deg_to_rad(50.0)) >
        coverage_limit(ReflectorMode::mirror, 1.5, 3.0, 1.0, deg_to_rad(50.0)));
  CHECK(coverage_limit(ReflectorMode::mirror, 4.0, 3.0, 1.0, deg_to_rad(30.0)) == 0.0);
  CHECK_THROWS_AS(coverage_limit(ReflectorMode::oris, 1.0, 1.0, 2.0, 0.5), std::invalid_argument);
}

TEST_CASE("ray-traced coverage tracks the closed form") {
  for (int psi = 20; psi <= 70; psi += 10)
    for (double x : {0.0, 1.0, 3.0})
      for (ReflectorMode m : {ReflectorMode::mirror, ReflectorMode::oris})
        CHECK(std::abs(coverage_raytrace(m, x, 3.0, 1.0, deg_to_rad(psi)) -
                       coverage_limit(m, x, 3.0, 1.0, deg_to_rad(psi))) <= 0.01 + 1e-9);
}

TEST_CASE("wall grid layout") {
  const Room room;
  const WallGrid wall(WallId::y1, room, 30, 15);
  CHECK(wall.size() == 450);
  CHECK(wall.element_area() == rel(4.0 / 30 * 3.0 / 15));
  for (int k = 0; k < wall.size(); ++k) REQUIRE(wall.locate(wall.element_center(k)) == k);
  CHECK(wall.signed_distance({2, 3, 1}) == rel(1.0));
  CHECK(parse_wall_id("x1") == WallId::x1);
  CHECK_FALSE(parse_wall_id("ceiling"));
}
