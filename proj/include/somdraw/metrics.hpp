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

#ifndef SOMDRAW_METRICS_HPP
#define SOMDRAW_METRICS_HPP

#include <cstddef>
#include <optional>

#include "somdraw/graph.hpp"
#include "somdraw/layout.hpp"

namespace somdraw {

/// Quality measurements of one drawing. crossings == 0 is necessary for a
/// plane straight-line drawing; convex_face_fraction is only present when a
/// face list was supplied.
struct MetricsReport {
    std::size_t crossings = 0;
    double area = 0.0;
    double avg_edge_length = 0.0;
    std::optional<double> convex_face_fraction;

    friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Absolute tolerance on orientation cross products, chosen for coordinates
/// of roughly unit scale. Callers measuring layouts in a very different
/// scale should pass their own.
inline constexpr double kOrientationEpsilon = 1e-12;

/// Number of unordered edge pairs whose closed segments intersect, excluding
/// pairs that share a graph endpoint. Proper crossings, endpoint touches of
/// non-incident edges and collinear overlaps all count once per pair.
/// O(m^2) pairwise tests.
std::size_t count_crossings(const Graph& g, const Layout& layout,
                            double epsilon = kOrientationEpsilon);

/// Axis-aligned bounding-box area of the node positions.
/// Throws on an empty layout.
double bounding_area(const Layout& layout);

/// Arithmetic mean of the Euclidean edge lengths. Throws on an edgeless
/// graph.
double average_edge_length(const Graph& g, const Layout& layout);

/// Fraction of inner faces (the face marked outer is excluded) drawn as
/// convex simple polygons. Convexity is non-strict: collinear vertices are
/// allowed. Vacuously 1 when there are no inner faces. Throws on a face
/// with fewer than 3 vertices.
double convex_face_fraction(const FaceList& faces, const Layout& layout,
                            double epsilon = kOrientationEpsilon);

/// All metrics of one drawing in a single record.
MetricsReport evaluate(const Graph& g, const Layout& layout);
MetricsReport evaluate(const Graph& g, const Layout& layout, const FaceList& faces);

}  // namespace somdraw

#endif  // SOMDRAW_METRICS_HPP
