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

#ifndef SOMDRAW_REGION_HPP
#define SOMDRAW_REGION_HPP

#include "somdraw/rng.hpp"
#include "somdraw/vec2.hpp"

namespace somdraw {

enum class RegionKind { rectangle, hexagon };

/// Convex region the stimuli are drawn from and the layout lives in.
/// Either an axis-aligned rectangle or a regular hexagon with vertices at
/// 0, 60, ..., 300 degrees around its center. Both kinds are validated to
/// have positive extent at construction.
class Region {
public:
    static Region rectangle(Vec2 min_corner, Vec2 max_corner);
    static Region hexagon(Vec2 center, double circumradius);

    /// [0,1]^2, the benchmark default.
    static Region unit_square() { return rectangle({0.0, 0.0}, {1.0, 1.0}); }

    RegionKind kind() const noexcept { return kind_; }

    /// Axis-aligned bounding box (the region itself for rectangles).
    Vec2 min_corner() const noexcept { return min_; }
    Vec2 max_corner() const noexcept { return max_; }

    Vec2 center() const noexcept { return center_; }

    /// Hexagon circumradius; 0 for rectangles.
    double circumradius() const noexcept { return circumradius_; }

    /// Closed containment test with an absolute slack on each bounding
    /// half-plane, for numeric checks on layout positions.
    bool contains(Vec2 p, double tolerance = 0.0) const noexcept;

    /// Uniform point in the region. Rectangles draw x then y; hexagons
    /// rejection-sample bounding-box draws until one lands inside, so the
    /// stream is consumed deterministically in both cases.
    Vec2 sample(Rng& rng) const;

private:
    Region() = default;

    RegionKind kind_ = RegionKind::rectangle;
    Vec2 min_;
    Vec2 max_;
    Vec2 center_;
    double circumradius_ = 0.0;
};

/// Free-function alias for Region::sample, matching the vocabulary of the
/// layout loops ("choose a random point in the input area").
inline Vec2 sample_stimulus(const Region& region, Rng& rng) { return region.sample(rng); }

}  // namespace somdraw

#endif  // SOMDRAW_REGION_HPP
