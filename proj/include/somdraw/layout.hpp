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

#ifndef SOMDRAW_LAYOUT_HPP
#define SOMDRAW_LAYOUT_HPP

#include <cstdint>
#include <vector>

#include "somdraw/graph.hpp"
#include "somdraw/region.hpp"
#include "somdraw/rng.hpp"
#include "somdraw/vec2.hpp"

namespace somdraw {

/// Straight-line drawing: one 2-D position per node, indexed by NodeId, in
/// the coordinate frame of the stimulus region.
struct Layout {
    std::vector<Vec2> positions;

    std::size_t size() const noexcept { return positions.size(); }
    Vec2& operator[](NodeId v) { return positions[v]; }
    const Vec2& operator[](NodeId v) const { return positions[v]; }

    friend bool operator==(const Layout&, const Layout&) = default;
};

/// Positions sampled i.i.d. uniform over the region, node 0 first. This
/// overload continues an existing stream; a full layout run draws its initial
/// positions and then its stimuli from one generator.
Layout random_layout(const Graph& g, const Region& region, Rng& rng);

/// Same, on a fresh generator. Equal seeds give bit-identical layouts.
Layout random_layout(const Graph& g, const Region& region, std::uint64_t seed);

}  // namespace somdraw

#endif  // SOMDRAW_LAYOUT_HPP
