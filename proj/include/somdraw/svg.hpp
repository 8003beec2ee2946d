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

#ifndef SOMDRAW_SVG_HPP
#define SOMDRAW_SVG_HPP

#include <filesystem>
#include <string>

#include "somdraw/graph.hpp"
#include "somdraw/layout.hpp"

namespace somdraw {

struct SvgStyle {
    double size_px = 800.0;            // width and height attributes
    double node_radius_frac = 0.008;   // of the larger bounding-box extent
    double stroke_width_frac = 0.003;  // likewise
    std::string edge_color = "#555555";
    std::string node_color = "#1f6fb5";
};

/// SVG 1.1 document: one <line> per edge, one <circle> per node, viewBox
/// fitted to the layout bounding box with a 5% margin. Byte output is a pure
/// function of (g, layout, style).
std::string svg_document(const Graph& g, const Layout& layout, const SvgStyle& style = {});

void write_svg(const Graph& g, const Layout& layout, const std::filesystem::path& path,
               const SvgStyle& style = {});

}  // namespace somdraw

#endif  // SOMDRAW_SVG_HPP
