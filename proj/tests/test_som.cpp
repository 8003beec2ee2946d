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
#include "somdraw/metrics.hpp"
#include "somdraw/som.hpp"

using namespace somdraw;

namespace {

// Independent argmin over true Euclidean distances.
NodeId scan_winner(const Layout& layout, Vec2 stimulus) {
    NodeId best = 0;
    double best_dist = std::hypot(layout[0].x - stimulus.x, layout[0].y - stimulus.y);
    for (NodeId i = 1; i < layout.size(); ++i) {
        const double d = std::hypot(layout[i].x - stimulus.x, layout[i].y - stimulus.y);
        if (d < best_dist) {
            best_dist = d;
            best = i;
        }
    }
    return best;
}

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_SUITE("som") {

TEST_CASE("winner picks the nearest node, lowest index on ties") {
    Layout two;
    two.positions = {{0.0, 0.0}, {1.0, 1.0}};
    CHECK(winner(two, {0.1, 0.1}) == 0);
    CHECK(winner(two, {0.9, 0.9}) == 1);

    Layout tie;
    tie.positions = {{0.5, 0.5}, {0.5, 0.5}};
    CHECK(winner(tie, {0.9, 0.1}) == 0);

    CHECK_THROWS_AS(winner(Layout{}, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("winner equals an exhaustive distance scan") {
    Rng rng(31);
    const Layout layout = oracles::random_positions(16, rng);
    for (int i = 0; i < 1000; ++i) {
        const Vec2 stimulus{rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
        CHECK(winner(layout, stimulus) == scan_winner(layout, stimulus));
    }
}

TEST_CASE("gaussian_factor closed-form values") {
    CHECK(gaussian_factor(0.0, 1.0) == 1.0);
    CHECK(gaussian_factor(0.0, 17.3) == 1.0);
    CHECK(gaussian_factor(1.0, 1.0) == doctest::Approx(0.6065306597126334).epsilon(1e-12));
    CHECK(gaussian_factor(2.0, 1.0) == doctest::Approx(0.1353352832366127).epsilon(1e-12));
    CHECK_THROWS_AS(gaussian_factor(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_factor(1.0, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_factor(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("som_schedule endpoints are exact and the middle is geometric") {
    const SomParams defaults;
    CHECK(som_schedule(0, defaults).alpha == 0.5);
    CHECK(som_schedule(0, defaults).radius == 3);
    CHECK(som_schedule(defaults.t_max - 1, defaults).alpha == 0.1);

    SomParams p;
    p.t_max = 1001;
    const double mid = som_schedule(500, p).alpha;  // exponent exactly 1/2
    CHECK(mid == doctest::Approx(0.5 * std::sqrt(0.2)).epsilon(1e-12));
    CHECK(mid == doctest::Approx(0.2236).epsilon(1e-3));

    CHECK_THROWS_AS(som_schedule(p.t_max, p), std::out_of_range);
}

TEST_CASE("som_schedule radius steps down in equal stages") {
    SomParams p;
    p.t_max = 8;
    p.r_max = 3;
    p.r_min = 0;
    p.sigma_scale = 1.0;
    const std::uint32_t expected[] = {3, 3, 2, 2, 1, 1, 0, 0};
    for (std::uint64_t t = 0; t < p.t_max; ++t) {
        CHECK(som_schedule(t, p).radius == expected[t]);
        CHECK(som_schedule(t, p).sigma == std::max<std::uint32_t>(expected[t], 1));
    }

    const SomParams defaults;  // r 3 -> 1, sigma scaled by 0.5
    CHECK(som_schedule(0, defaults).radius == 3);
    CHECK(som_schedule(0, defaults).sigma == 1.5);
    CHECK(som_schedule(defaults.t_max - 1, defaults).radius == 1);
    CHECK(som_schedule(defaults.t_max - 1, defaults).sigma == 0.5);
}

TEST_CASE("som_schedule is non-increasing in both alpha and radius") {
    SomParams p;
    p.t_max = 517;
    p.alpha_max = 0.73;
    p.alpha_min = 0.02;
    p.r_max = 5;
    p.r_min = 1;
    p.sigma_scale = 0.8;
    double prev_alpha = p.alpha_max;
    std::uint32_t prev_radius = p.r_max;
    for (std::uint64_t t = 0; t < p.t_max; ++t) {
        const auto s = som_schedule(t, p);
        CHECK(s.alpha <= prev_alpha);
        CHECK(s.radius <= prev_radius);
        CHECK(s.sigma == doctest::Approx(0.8 * std::max<std::uint32_t>(s.radius, 1)));
        prev_alpha = s.alpha;
        prev_radius = s.radius;
    }
    CHECK(som_schedule(0, p).alpha == p.alpha_max);
    CHECK(som_schedule(p.t_max - 1, p).alpha == p.alpha_min);
    CHECK(som_schedule(0, p).radius == p.r_max);
    CHECK(som_schedule(p.t_max - 1, p).radius == p.r_min);
}

TEST_CASE("som params validation") {
    SomParams p;
    p.t_max = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.alpha_min = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.alpha_min = 0.6;  // above alpha_max
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.alpha_max = 1.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.r_max = 1;
    p.r_min = 2;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.sigma_scale = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    CHECK_NOTHROW(SomParams{}.validate());
}

TEST_CASE("som_step: winner-only convex step") {
    const Graph g(2, {{0, 1}});
    Layout layout;
    layout.positions = {{0.0, 0.0}, {5.0, 5.0}};
    som_step(layout, g, {1.0, 0.0}, 0.5, 0, 1.0);  // radius 0: no neighbors move
    CHECK(layout[0].x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(layout[0].y == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(layout[1] == Vec2{5.0, 5.0});
}

TEST_CASE("som_step: no movement when every node sits on the stimulus") {
    const Graph g = path3();
    Layout layout;
    layout.positions = {{0.3, 0.7}, {0.3, 0.7}, {0.3, 0.7}};
    const Layout before = layout;
    som_step(layout, g, {0.3, 0.7}, 0.9, 2, 1.0);
    CHECK(layout == before);
}

TEST_CASE("som_step: hand-derived path example") {
    // Path 0-1-2 at (0,0),(1,0),(2,0), stimulus (0,1), alpha 0.4, radius 1,
    // sigma 1. Winner is node 0; node 1 moves by 0.4*exp(-1/2)*(stimulus-pos);
    // node 2 is outside the radius.
    const Graph g = path3();
    Layout layout;
    layout.positions = {{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
    som_step(layout, g, {0.0, 1.0}, 0.4, 1, 1.0);

    CHECK(layout[0].x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(layout[0].y == doctest::Approx(0.4).epsilon(1e-12));

    const double f = 0.4 * std::exp(-0.5);
    CHECK(layout[1].x == doctest::Approx(1.0 - f).epsilon(1e-12));
    CHECK(layout[1].y == doctest::Approx(f).epsilon(1e-12));

    CHECK(layout[2] == Vec2{2.0, 0.0});  // untouched, bit-identical
}

TEST_CASE("som_step leaves nodes beyond the radius bit-identical") {
    Rng rng(8);
    const Graph g = oracles::random_graph(20, 30, rng);
    for (const std::uint32_t radius : {0u, 1u, 2u}) {
        Layout layout = oracles::random_positions(20, rng);
        const Layout before = layout;
        const Vec2 stimulus{rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
        const NodeId w = winner(layout, stimulus);
        som_step(layout, g, stimulus, 0.7, radius, 1.3);
        const auto within = graph_distance_within(g, w, radius);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (within.find(v) == within.end()) {
                CHECK(layout[v] == before[v]);
            } else if (!(stimulus == before[v])) {
                CHECK(layout[v] != before[v]);
            }
        }
    }
}

TEST_CASE("som_layout is deterministic at paper defaults") {
    const auto [g, faces] = grid_graph(4, 4);
    (void)faces;
    const Region region = Region::unit_square();
    const SomParams defaults;
    const Layout a = som_layout(g, region, defaults, 9);
    const Layout b = som_layout(g, region, defaults, 9);
    CHECK(a == b);
    const Layout c = som_layout(g, region, defaults, 10);
    CHECK(a != c);
}

TEST_CASE("som_layout keeps all positions inside convex regions") {
    const auto [g, faces] = grid_graph(3, 3);
    (void)faces;
    SomParams p;
    p.t_max = 3000;
    for (const Region& region :
         {Region::unit_square(), Region::hexagon({0.5, 0.5}, 0.5),
          Region::rectangle({-2.0, 1.0}, {3.0, 4.0})}) {
        const Layout layout = som_layout(g, region, p, 4);
        for (const Vec2 pos : layout.positions) {
            CHECK(region.contains(pos, 1e-9));
        }
    }
}

TEST_CASE("som_layout on a single-node graph chases stimuli inside the region") {
    const Graph g(1, {});
    SomParams p;
    p.t_max = 500;
    const Region region = Region::unit_square();
    const Layout layout = som_layout(g, region, p, 21);
    CHECK(region.contains(layout[0], 1e-9));
}

}  // TEST_SUITE
