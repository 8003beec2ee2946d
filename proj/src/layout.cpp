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

#include "somdraw/layout.hpp"

namespace somdraw {

Layout random_layout(const Graph& g, const Region& region, Rng& rng) {
    Layout layout;
    layout.positions.reserve(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        layout.positions.push_back(region.sample(rng));
    }
    return layout;
}

Layout random_layout(const Graph& g, const Region& region, std::uint64_t seed) {
    Rng rng(seed);
    return random_layout(g, region, rng);
}

}  // namespace somdraw
