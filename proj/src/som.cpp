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

#include "somdraw/som.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace somdraw {

namespace {

// Shared by the public single-step entry point and the full run; the factor
// table holds gaussian_factor(d, sigma) for d = 0..radius so a run only pays
// for exp() when the stage (and with it sigma) changes.
void apply_step(Layout& layout, const Graph& g, Vec2 stimulus, double alpha, std::uint32_t radius,
                std::span<const double> gauss_by_dist, BfsScratch& scratch) {
    const NodeId w = winner(layout, stimulus);
    scratch.for_each_within(g, w, radius, [&](NodeId node, std::uint32_t d) {
        const double f = alpha * gauss_by_dist[d];
        Vec2& pos = layout.positions[node];
        pos += f * (stimulus - pos);
    });
}

std::vector<double> gauss_table(std::uint32_t radius, double sigma) {
    std::vector<double> table(static_cast<std::size_t>(radius) + 1);
    for (std::uint32_t d = 0; d <= radius; ++d) {
        table[d] = gaussian_factor(static_cast<double>(d), sigma);
    }
    return table;
}

void check_step_args(const Layout& layout, const Graph& g, double alpha) {
    if (layout.size() != g.node_count()) {
        throw std::invalid_argument("layout has " + std::to_string(layout.size()) +
                                    " positions for a graph with " +
                                    std::to_string(g.node_count()) + " nodes");
    }
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw std::invalid_argument("alpha must be in (0, 1]");
    }
}

}  // namespace

void SomParams::validate() const {
    if (t_max < 1) throw std::invalid_argument("som: t_max must be at least 1");
    if (!(alpha_min > 0.0)) throw std::invalid_argument("som: alpha_min must be positive");
    if (alpha_min > alpha_max) throw std::invalid_argument("som: alpha_min must not exceed alpha_max");
    if (alpha_max > 1.0) throw std::invalid_argument("som: alpha_max must not exceed 1");
    if (r_max < r_min) throw std::invalid_argument("som: r_max must be at least r_min");
    if (!(sigma_scale > 0.0)) throw std::invalid_argument("som: sigma_scale must be positive");
}

NodeId winner(const Layout& layout, Vec2 stimulus) {
    if (layout.positions.empty()) {
        throw std::invalid_argument("winner: empty layout");
    }
    NodeId best = 0;
    double best_d2 = squared_distance(layout.positions[0], stimulus);
    const NodeId n = static_cast<NodeId>(layout.positions.size());
    for (NodeId i = 1; i < n; ++i) {
        const double d2 = squared_distance(layout.positions[i], stimulus);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return best;
}

double gaussian_factor(double hop_distance, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_factor: sigma must be positive");
    if (hop_distance < 0.0) throw std::invalid_argument("gaussian_factor: distance must be >= 0");
    return std::exp(-(hop_distance * hop_distance) / (2.0 * sigma * sigma));
}

SomSchedulePoint som_schedule(std::uint64_t t, const SomParams& p) {
    if (t >= p.t_max) {
        throw std::out_of_range("som_schedule: t = " + std::to_string(t) + " not in [0, " +
                                std::to_string(p.t_max) + ")");
    }
    // Endpoints are pinned rather than computed: alpha(0) and alpha(t_max-1)
    // must equal the configured bounds exactly, which the pow() expression
    // only guarantees to within rounding.
    double alpha;
    if (t == 0) {
        alpha = p.alpha_max;
    } else if (t == p.t_max - 1) {
        alpha = p.alpha_min;
    } else {
        const double progress = static_cast<double>(t) / static_cast<double>(p.t_max - 1);
        alpha = p.alpha_max * std::pow(p.alpha_min / p.alpha_max, progress);
    }

    std::uint32_t radius = p.r_max;
    if (p.r_max > p.r_min) {
        const std::uint64_t stages = static_cast<std::uint64_t>(p.r_max - p.r_min) + 1;
        const std::uint64_t stage_len = std::max<std::uint64_t>(1, p.t_max / stages);
        const std::uint64_t steps_down = t / stage_len;
        radius = steps_down >= p.r_max - p.r_min ? p.r_min
                                                 : p.r_max - static_cast<std::uint32_t>(steps_down);
    }

    const double sigma = p.sigma_scale * static_cast<double>(std::max<std::uint32_t>(radius, 1));
    return {alpha, radius, sigma};
}

void som_step(Layout& layout, const Graph& g, Vec2 stimulus, double alpha, std::uint32_t radius,
              double sigma) {
    check_step_args(layout, g, alpha);
    if (!(sigma > 0.0)) throw std::invalid_argument("som_step: sigma must be positive");
    const std::vector<double> gauss = gauss_table(radius, sigma);
    BfsScratch scratch(g.node_count());
    apply_step(layout, g, stimulus, alpha, radius, gauss, scratch);
}

Layout som_layout(const Graph& g, const Region& region, const SomParams& p, std::uint64_t seed) {
    p.validate();
    Rng rng(seed);
    Layout layout = random_layout(g, region, rng);
    BfsScratch scratch(g.node_count());

    std::vector<double> gauss;
    std::uint32_t cached_radius = 0;
    double cached_sigma = -1.0;
    for (std::uint64_t t = 0; t < p.t_max; ++t) {
        const SomSchedulePoint s = som_schedule(t, p);
        if (s.sigma != cached_sigma || s.radius != cached_radius || gauss.empty()) {
            gauss = gauss_table(s.radius, s.sigma);
            cached_radius = s.radius;
            cached_sigma = s.sigma;
        }
        const Vec2 stimulus = sample_stimulus(region, rng);
        apply_step(layout, g, stimulus, s.alpha, s.radius, gauss, scratch);
    }
    return layout;
}

}  // namespace somdraw
