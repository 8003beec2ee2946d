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

#include "somdraw/svg.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace somdraw {

namespace {

// Locale-independent shortest round-trip formatting, so the byte output is
// identical everywhere.
std::string fmt(double v) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

}  // namespace

std::string svg_document(const Graph& g, const Layout& layout, const SvgStyle& style) {
    if (layout.size() != g.node_count()) {
        throw std::invalid_argument("svg_document: layout does not cover the graph");
    }
    double min_x = layout.positions[0].x, max_x = min_x;
    double min_y = layout.positions[0].y, max_y = min_y;
    for (const Vec2 p : layout.positions) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    double extent = std::max(max_x - min_x, max_y - min_y);
    if (extent <= 0.0) extent = 1.0;  // coincident or single-node layouts
    const double margin = 0.05 * extent;

    const double view_w = (max_x - min_x) + 2.0 * margin;
    const double view_h = (max_y - min_y) + 2.0 * margin;
    const double node_r = style.node_radius_frac * extent;
    const double stroke_w = style.stroke_width_frac * extent;

    std::string out;
    out.reserve(128 + 96 * (g.edge_count() + g.node_count()));
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(style.size_px) +
           "\" height=\"" + fmt(style.size_px) + "\" viewBox=\"" + fmt(min_x - margin) + " " +
           fmt(min_y - margin) + " " + fmt(view_w) + " " + fmt(view_h) + "\">\n";
    for (const Edge& e : g.edges()) {
        const Vec2 a = layout[e.u];
        const Vec2 b = layout[e.v];
        out += "  <line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" + fmt(b.x) +
               "\" y2=\"" + fmt(b.y) + "\" stroke=\"" + style.edge_color + "\" stroke-width=\"" +
               fmt(stroke_w) + "\"/>\n";
    }
    for (const Vec2 p : layout.positions) {
        out += "  <circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) + "\" r=\"" + fmt(node_r) +
               "\" fill=\"" + style.node_color + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

void write_svg(const Graph& g, const Layout& layout, const std::filesystem::path& path,
               const SvgStyle& style) {
    const std::string doc = svg_document(g, layout, style);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error(path.string() + ": cannot open file for writing");
    }
    out << doc;
    if (!out) {
        throw std::runtime_error(path.string() + ": write failed");
    }
}

}  // namespace somdraw
