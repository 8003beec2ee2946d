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

#include "somdraw/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "somdraw/vec2.hpp"

namespace somdraw {

namespace {

// -1 / 0 / +1 for the turn a->b->c, with |cross| <= epsilon snapped to 0.
int orientation(Vec2 a, Vec2 b, Vec2 c, double epsilon) {
    const double z = cross(b - a, c - a);
    if (z > epsilon) return 1;
    if (z < -epsilon) return -1;
    return 0;
}

// Assumes p collinear with segment ab.
bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Closed-segment intersection test (touching endpoints and collinear overlap
// included), the classic four-orientation formulation.
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double epsilon) {
    const int o1 = orientation(a, b, c, epsilon);
    const int o2 = orientation(a, b, d, epsilon);
    const int o3 = orientation(c, d, a, epsilon);
    const int o4 = orientation(c, d, b, epsilon);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

void check_positions(const Graph& g, const Layout& layout) {
    if (layout.size() != g.node_count()) {
        throw std::invalid_argument("layout has " + std::to_string(layout.size()) +
                                    " positions for a graph with " +
                                    std::to_string(g.node_count()) + " nodes");
    }
}

// Convex simple polygon test. All consecutive-edge cross products must carry
// one sign (epsilon-zeros allowed, so collinear vertices do not disqualify),
// and no two non-adjacent sides may intersect.
bool face_is_convex(const std::vector<NodeId>& face, const Layout& layout, double epsilon) {
    const std::size_t k = face.size();
    if (k < 3) {
        throw std::invalid_argument("convex_face_fraction: face with fewer than 3 vertices");
    }
    for (const NodeId v : face) {
        if (v >= layout.size()) {
            throw std::out_of_range("convex_face_fraction: face references node " +
                                    std::to_string(v) + " outside the layout");
        }
    }

    int sign = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const Vec2 p0 = layout[face[i]];
        const Vec2 p1 = layout[face[(i + 1) % k]];
        const Vec2 p2 = layout[face[(i + 2) % k]];
        const double z = cross(p1 - p0, p2 - p1);
        const int s = z > epsilon ? 1 : (z < -epsilon ? -1 : 0);
        if (s == 0) continue;
        if (sign == 0) {
            sign = s;
        } else if (s != sign) {
            return false;
        }
    }

    // Same-signed turns alone do not rule out self-intersection (e.g. a
    // polygon winding twice), so check non-adjacent side pairs.
    for (std::size_t i = 0; i + 2 < k; ++i) {
        const Vec2 a = layout[face[i]];
        const Vec2 b = layout[face[i + 1]];
        for (std::size_t j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;  // shares vertex face[0]
            const Vec2 c = layout[face[j]];
            const Vec2 d = layout[face[(j + 1) % k]];
            if (segments_intersect(a, b, c, d, epsilon)) return false;
        }
    }
    return true;
}

}  // namespace

std::size_t count_crossings(const Graph& g, const Layout& layout, double epsilon) {
    check_positions(g, layout);
    const auto& edges = g.edges();
    std::size_t crossings = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        const Vec2 a = layout[e.u];
        const Vec2 b = layout[e.v];
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& f = edges[j];
            if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
            if (segments_intersect(a, b, layout[f.u], layout[f.v], epsilon)) ++crossings;
        }
    }
    return crossings;
}

double bounding_area(const Layout& layout) {
    if (layout.positions.empty()) {
        throw std::invalid_argument("bounding_area: empty layout");
    }
    double min_x = layout.positions[0].x, max_x = min_x;
    double min_y = layout.positions[0].y, max_y = min_y;
    for (const Vec2 p : layout.positions) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    return (max_x - min_x) * (max_y - min_y);
}

double average_edge_length(const Graph& g, const Layout& layout) {
    check_positions(g, layout);
    if (g.edge_count() == 0) {
        throw std::invalid_argument("average_edge_length: graph has no edges");
    }
    double total = 0.0;
    for (const Edge& e : g.edges()) {
        total += distance(layout[e.u], layout[e.v]);
    }
    return total / static_cast<double>(g.edge_count());
}

double convex_face_fraction(const FaceList& faces, const Layout& layout, double epsilon) {
    std::size_t inner = 0;
    std::size_t convex = 0;
    for (std::size_t i = 0; i < faces.faces.size(); ++i) {
        if (faces.outer_face_index && *faces.outer_face_index == i) continue;
        ++inner;
        if (face_is_convex(faces.faces[i], layout, epsilon)) ++convex;
    }
    if (inner == 0) return 1.0;
    return static_cast<double>(convex) / static_cast<double>(inner);
}

MetricsReport evaluate(const Graph& g, const Layout& layout) {
    MetricsReport report;
    report.crossings = count_crossings(g, layout);
    report.area = bounding_area(layout);
    report.avg_edge_length = average_edge_length(g, layout);
    return report;
}

MetricsReport evaluate(const Graph& g, const Layout& layout, const FaceList& faces) {
    MetricsReport report = evaluate(g, layout);
    report.convex_face_fraction = convex_face_fraction(faces, layout);
    return report;
}

}  // namespace somdraw
