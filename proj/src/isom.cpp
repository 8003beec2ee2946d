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

#include "somdraw/isom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "somdraw/som.hpp"  // winner()

namespace somdraw {

namespace {

void apply_step(Layout& layout, const Graph& g, Vec2 stimulus, double alpha, std::uint32_t radius,
                BfsScratch& scratch) {
    const NodeId w = winner(layout, stimulus);
    scratch.for_each_within(g, w, radius, [&](NodeId node, std::uint32_t d) {
        const double f = isom_factor(d) * alpha;
        Vec2& pos = layout.positions[node];
        pos += f * (stimulus - pos);
    });
}

}  // namespace

std::uint64_t IsomParams::effective_radius_stage_length() const {
    if (radius_stage_length > 0) return radius_stage_length;
    const std::uint64_t stages = static_cast<std::uint64_t>(r_max - r_min) + 1;
    return std::max<std::uint64_t>(1, t_max / stages);
}

void IsomParams::validate() const {
    if (t_max < 1) throw std::invalid_argument("isom: t_max must be at least 1");
    if (!(min_adaption > 0.0)) throw std::invalid_argument("isom: min_adaption must be positive");
    if (min_adaption > max_adaption) {
        throw std::invalid_argument("isom: min_adaption must not exceed max_adaption");
    }
    if (max_adaption > 1.0) throw std::invalid_argument("isom: max_adaption must not exceed 1");
    if (!(cooling > 0.0)) throw std::invalid_argument("isom: cooling must be positive");
    if (r_max < r_min) throw std::invalid_argument("isom: r_max must be at least r_min");
}

double isom_adaption(std::uint64_t t, const IsomParams& p) {
    if (t > p.t_max) {
        throw std::out_of_range("isom_adaption: t = " + std::to_string(t) + " not in [0, " +
                                std::to_string(p.t_max) + "]");
    }
    const double progress = static_cast<double>(t) / static_cast<double>(p.t_max);
    const double decayed = std::exp(-p.cooling * progress) * p.max_adaption;
    return std::max(p.min_adaption, decayed);
}

double isom_factor(std::uint32_t hop_distance) {
    return std::ldexp(1.0, -static_cast<int>(std::min<std::uint32_t>(hop_distance, 1074)));
}

std::uint32_t isom_radius_at(std::uint64_t t, const IsomParams& p) {
    if (t >= p.t_max) {
        throw std::out_of_range("isom_radius_at: t = " + std::to_string(t) + " not in [0, " +
                                std::to_string(p.t_max) + ")");
    }
    if (p.r_max == p.r_min) return p.r_max;
    const std::uint64_t steps_down = t / p.effective_radius_stage_length();
    return steps_down >= p.r_max - p.r_min ? p.r_min
                                           : p.r_max - static_cast<std::uint32_t>(steps_down);
}

void isom_step(Layout& layout, const Graph& g, Vec2 stimulus, double alpha, std::uint32_t radius) {
    if (layout.size() != g.node_count()) {
        throw std::invalid_argument("layout has " + std::to_string(layout.size()) +
                                    " positions for a graph with " +
                                    std::to_string(g.node_count()) + " nodes");
    }
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw std::invalid_argument("alpha must be in (0, 1]");
    }
    BfsScratch scratch(g.node_count());
    apply_step(layout, g, stimulus, alpha, radius, scratch);
}

Layout isom_layout(const Graph& g, const Region& region, const IsomParams& p, std::uint64_t seed) {
    p.validate();
    Rng rng(seed);
    Layout layout = random_layout(g, region, rng);
    BfsScratch scratch(g.node_count());
    for (std::uint64_t t = 0; t < p.t_max; ++t) {
        const double alpha = isom_adaption(t, p);
        const std::uint32_t radius = isom_radius_at(t, p);
        const Vec2 stimulus = sample_stimulus(region, rng);
        apply_step(layout, g, stimulus, alpha, radius, scratch);
    }
    return layout;
}

}  // namespace somdraw
