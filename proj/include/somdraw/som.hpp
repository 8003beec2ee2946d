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

#ifndef SOMDRAW_SOM_HPP
#define SOMDRAW_SOM_HPP

#include <cstdint>

#include "somdraw/graph.hpp"
#include "somdraw/layout.hpp"
#include "somdraw/region.hpp"

namespace somdraw {

/// Schedule and neighborhood parameters for the Kohonen-style layout.
/// Defaults are the reference setup: learning rate decaying 0.5 -> 0.1,
/// initial radius 3, one million stimuli.
struct SomParams {
    std::uint64_t t_max = 1'000'000;
    double alpha_max = 0.5;
    double alpha_min = 0.1;
    std::uint32_t r_max = 3;
    /// The neighborhood never vanishes by default: a final stage of
    /// winner-only updates at alpha_min degenerates into plain vector
    /// quantization and measurably tears an already-untangled drawing apart
    /// (hundreds of crossings on a 10x10 grid). r_min = 0 stays available
    /// for experiments.
    std::uint32_t r_min = 1;
    /// Gaussian width is sigma_scale * max(radius, 1), so the neighborhood
    /// sharpens together with the radius stages. 0.5 puts the factor at the
    /// neighborhood rim at exp(-2) ~ 0.14; at 1.0 the rim still moves by
    /// 61% of the winner's step and the map over-contracts.
    double sigma_scale = 0.5;

    /// Throws std::invalid_argument when any bound is violated
    /// (0 < alpha_min <= alpha_max <= 1, r_max >= r_min, t_max >= 1,
    /// sigma_scale > 0).
    void validate() const;
};

struct SomSchedulePoint {
    double alpha;
    std::uint32_t radius;
    double sigma;
};

/// Index of the node whose position is nearest to the stimulus in Euclidean
/// distance; ties break to the lowest index. Throws on an empty layout.
NodeId winner(const Layout& layout, Vec2 stimulus);

/// exp(-d^2 / (2 sigma^2)) for hop distance d >= 0 and sigma > 0.
double gaussian_factor(double hop_distance, double sigma);

/// Schedule at iteration t in [0, t_max): alpha decays geometrically from
/// alpha_max to alpha_min (endpoints exact); the radius steps down from r_max
/// to r_min in equal-length stages, the last stage absorbing any remainder.
SomSchedulePoint som_schedule(std::uint64_t t, const SomParams& p);

/// One stimulus: the winner moves by alpha * (stimulus - pos); every node at
/// hop distance 0 < d <= radius from it moves by
/// alpha * gaussian_factor(d, sigma) * (stimulus - pos); all others are
/// untouched.
void som_step(Layout& layout, const Graph& g, Vec2 stimulus, double alpha, std::uint32_t radius,
              double sigma);

/// Full run: random initial layout, then t_max iterations of
/// (sample stimulus -> winner -> step) under som_schedule. A pure function of
/// (g, region, p, seed); equal inputs reproduce bit-identically.
Layout som_layout(const Graph& g, const Region& region, const SomParams& p, std::uint64_t seed);

}  // namespace somdraw

#endif  // SOMDRAW_SOM_HPP
