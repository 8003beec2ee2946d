// Copyright 2026 the somdraw authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "somdraw/region.hpp"

using namespace somdraw;

namespace {

std::vector<Vec2> hexagon_vertices(Vec2 center, double r) {
    std::vector<Vec2> poly;
    for (int k = 0; k < 6; ++k) {
        const double angle = k * (3.14159265358979323846 / 3.0);
        poly.push_back({center.x + r * std::cos(angle), center.y + r * std::sin(angle)});
    }
    return poly;
}

}  // namespace

TEST_SUITE("region") {

TEST_CASE("degenerate regions are rejected at construction") {
    CHECK_THROWS_AS(Region::rectangle({0.0, 0.5}, {1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(Region::rectangle({1.0, 0.0}, {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Region::hexagon({0.5, 0.5}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Region::hexagon({0.5, 0.5}, -1.0), std::invalid_argument);
}

TEST_CASE("unit-square samples stay inside") {
    const Region region = Region::unit_square();
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        const Vec2 p = sample_stimulus(region, rng);
        CHECK(p.x >= 0.0);
        CHECK(p.x < 1.0);
        CHECK(p.y >= 0.0);
        CHECK(p.y < 1.0);
        CHECK(region.contains(p));
    }
}

TEST_CASE("hexagon samples pass an independent containment oracle") {
    const Vec2 center{0.5, 0.5};
    const double radius = 0.5;
    const Region region = Region::hexagon(center, radius);
    const auto polygon = hexagon_vertices(center, radius);
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Vec2 p = sample_stimulus(region, rng);
        CHECK(oracles::point_in_convex_polygon(polygon, p));
    }
    // And agreement both ways on arbitrary probe points.
    Rng probe_rng(12);
    for (int i = 0; i < 2000; ++i) {
        const Vec2 p{probe_rng.uniform(-0.2, 1.2), probe_rng.uniform(-0.2, 1.2)};
        CHECK(region.contains(p, 1e-9) == oracles::point_in_convex_polygon(polygon, p));
    }
}

TEST_CASE("unit-square sample mean converges to the centroid") {
    const Region region = Region::unit_square();
    Rng rng(99);
    double sum_x = 0.0, sum_y = 0.0;
    const int draws = 100'000;
    for (int i = 0; i < draws; ++i) {
        const Vec2 p = sample_stimulus(region, rng);
        sum_x += p.x;
        sum_y += p.y;
    }
    CHECK(std::abs(sum_x / draws - 0.5) < 0.01);
    CHECK(std::abs(sum_y / draws - 0.5) < 0.01);
}

TEST_CASE("sampling is deterministic per seed") {
    const Region region = Region::hexagon({0.0, 0.0}, 2.0);
    Rng a(5), b(5), c(6);
    bool any_difference = false;
    for (int i = 0; i < 64; ++i) {
        const Vec2 pa = region.sample(a);
        const Vec2 pb = region.sample(b);
        const Vec2 pc = region.sample(c);
        CHECK(pa == pb);
        any_difference = any_difference || !(pa == pc);
    }
    CHECK(any_difference);
}

TEST_CASE("rng produces doubles in [0, 1)") {
    Rng rng(123456789);
    for (int i = 0; i < 10'000; ++i) {
        const double u = rng.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

}  // TEST_SUITE
