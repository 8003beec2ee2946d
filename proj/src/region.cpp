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

#include "somdraw/region.hpp"

#include <cmath>
#include <stdexcept>

namespace somdraw {

namespace {

constexpr double kHalfSqrt3 = 0.8660254037844386;  // sqrt(3)/2

}  // namespace

Region Region::rectangle(Vec2 min_corner, Vec2 max_corner) {
    if (!(max_corner.x > min_corner.x) || !(max_corner.y > min_corner.y)) {
        throw std::invalid_argument("region: rectangle must have positive width and height");
    }
    Region r;
    r.kind_ = RegionKind::rectangle;
    r.min_ = min_corner;
    r.max_ = max_corner;
    r.center_ = {0.5 * (min_corner.x + max_corner.x), 0.5 * (min_corner.y + max_corner.y)};
    return r;
}

Region Region::hexagon(Vec2 center, double circumradius) {
    if (!(circumradius > 0.0)) {
        throw std::invalid_argument("region: hexagon must have positive circumradius");
    }
    Region r;
    r.kind_ = RegionKind::hexagon;
    r.center_ = center;
    r.circumradius_ = circumradius;
    r.min_ = {center.x - circumradius, center.y - kHalfSqrt3 * circumradius};
    r.max_ = {center.x + circumradius, center.y + kHalfSqrt3 * circumradius};
    return r;
}

bool Region::contains(Vec2 p, double tolerance) const noexcept {
    if (kind_ == RegionKind::rectangle) {
        return p.x >= min_.x - tolerance && p.x <= max_.x + tolerance &&
               p.y >= min_.y - tolerance && p.y <= max_.y + tolerance;
    }
    // Pointy-right regular hexagon, by symmetry of |dx|, |dy|: the flat top
    // and bottom sit at |dy| = sqrt(3)/2 r, the slanted sides satisfy
    // sqrt(3) |dx| + |dy| <= sqrt(3) r.
    const double qx = std::abs(p.x - center_.x);
    const double qy = std::abs(p.y - center_.y);
    const double sqrt3 = 2.0 * kHalfSqrt3;
    return qy <= kHalfSqrt3 * circumradius_ + tolerance &&
           sqrt3 * qx + qy <= sqrt3 * circumradius_ + tolerance;
}

Vec2 Region::sample(Rng& rng) const {
    if (kind_ == RegionKind::rectangle) {
        const double x = rng.uniform(min_.x, max_.x);
        const double y = rng.uniform(min_.y, max_.y);
        return {x, y};
    }
    // Rejection sampling from the bounding box keeps the distribution exactly
    // uniform over the hexagon (acceptance rate 3/4 per draw).
    for (;;) {
        const double x = rng.uniform(min_.x, max_.x);
        const double y = rng.uniform(min_.y, max_.y);
        const Vec2 p{x, y};
        if (contains(p)) return p;
    }
}

}  // namespace somdraw
