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

#include "somdraw/graph_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace somdraw {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& context, const std::string& message) {
    throw std::runtime_error(context.empty() ? message : context + ": " + message);
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(path.string(), "cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(path.string(), e.what());
    }
}

NodeId require_node_index(const json& value, const std::string& context,
                          const std::string& where) {
    if (!value.is_number_unsigned()) {
        fail(context, where + ": expected a non-negative integer");
    }
    return value.get<NodeId>();
}

}  // namespace

GraphDocument parse_graph_json(const json& doc, const std::string& context) {
    if (!doc.is_object()) fail(context, "top-level value must be an object");
    if (!doc.contains("nodes") || !doc["nodes"].is_number_unsigned()) {
        fail(context, "\"nodes\" must be a non-negative integer");
    }
    const auto node_count = doc["nodes"].get<std::uint64_t>();
    if (node_count == 0 || node_count > std::numeric_limits<NodeId>::max()) {
        fail(context, "\"nodes\" must be between 1 and " +
                          std::to_string(std::numeric_limits<NodeId>::max()));
    }

    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        const json& edge_array = doc["edges"];
        if (!edge_array.is_array()) fail(context, "\"edges\" must be an array");
        edges.reserve(edge_array.size());
        for (std::size_t i = 0; i < edge_array.size(); ++i) {
            const json& pair = edge_array[i];
            const std::string where = "edges[" + std::to_string(i) + "]";
            if (!pair.is_array() || pair.size() != 2) {
                fail(context, where + ": expected a [u, v] pair");
            }
            edges.push_back({require_node_index(pair[0], context, where),
                             require_node_index(pair[1], context, where)});
        }
    }

    std::optional<Graph> graph;
    try {
        graph.emplace(static_cast<NodeId>(node_count), std::move(edges));
    } catch (const std::invalid_argument& e) {
        fail(context, e.what());
    }

    GraphDocument result{std::move(*graph), std::nullopt};

    if (doc.contains("faces")) {
        const json& face_array = doc["faces"];
        if (!face_array.is_array()) fail(context, "\"faces\" must be an array");
        FaceList faces;
        faces.faces.reserve(face_array.size());
        for (std::size_t i = 0; i < face_array.size(); ++i) {
            const json& cycle = face_array[i];
            const std::string where = "faces[" + std::to_string(i) + "]";
            if (!cycle.is_array()) fail(context, where + ": expected an array of node indices");
            std::vector<NodeId> nodes;
            nodes.reserve(cycle.size());
            for (const json& v : cycle) {
                nodes.push_back(require_node_index(v, context, where));
            }
            faces.faces.push_back(std::move(nodes));
        }
        if (doc.contains("outer_face")) {
            const json& outer = doc["outer_face"];
            if (!outer.is_number_unsigned()) {
                fail(context, "\"outer_face\" must be a non-negative integer");
            }
            faces.outer_face_index = outer.get<std::size_t>();
        }
        try {
            validate_faces(result.graph, faces);
        } catch (const std::invalid_argument& e) {
            fail(context, e.what());
        }
        result.faces = std::move(faces);
    } else if (doc.contains("outer_face")) {
        fail(context, "\"outer_face\" given without \"faces\"");
    }

    return result;
}

GraphDocument parse_graph_file(const std::filesystem::path& path) {
    return parse_graph_json(load_json(path), path.string());
}

json graph_to_json(const Graph& g, const FaceList* faces) {
    json doc;
    doc["nodes"] = g.node_count();
    json edge_array = json::array();
    for (const Edge& e : g.edges()) {
        edge_array.push_back({e.u, e.v});
    }
    doc["edges"] = std::move(edge_array);
    if (faces) {
        json face_array = json::array();
        for (const auto& cycle : faces->faces) {
            face_array.push_back(cycle);
        }
        doc["faces"] = std::move(face_array);
        if (faces->outer_face_index) {
            doc["outer_face"] = *faces->outer_face_index;
        }
    }
    return doc;
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, const FaceList* faces) {
    std::ofstream out(path);
    if (!out) fail(path.string(), "cannot open file for writing");
    out << graph_to_json(g, faces).dump(2) << '\n';
    if (!out) fail(path.string(), "write failed");
}

Layout parse_layout_file(const std::filesystem::path& path, NodeId expected_nodes) {
    const json doc = load_json(path);
    const std::string context = path.string();
    if (!doc.is_object() || !doc.contains("positions") || !doc["positions"].is_array()) {
        fail(context, "expected an object with a \"positions\" array");
    }
    const json& positions = doc["positions"];
    if (positions.size() != expected_nodes) {
        fail(context, "expected " + std::to_string(expected_nodes) + " positions, got " +
                          std::to_string(positions.size()));
    }
    Layout layout;
    layout.positions.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const json& p = positions[i];
        const std::string where = "positions[" + std::to_string(i) + "]";
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
            fail(context, where + ": expected an [x, y] pair of numbers");
        }
        const Vec2 v{p[0].get<double>(), p[1].get<double>()};
        if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
            fail(context, where + ": coordinates must be finite");
        }
        layout.positions.push_back(v);
    }
    return layout;
}

json layout_to_json(const Layout& layout) {
    json positions = json::array();
    for (const Vec2 p : layout.positions) {
        positions.push_back({p.x, p.y});
    }
    json doc;
    doc["positions"] = std::move(positions);
    return doc;
}

void write_layout_file(const std::filesystem::path& path, const Layout& layout) {
    std::ofstream out(path);
    if (!out) fail(path.string(), "cannot open file for writing");
    out << layout_to_json(layout).dump(2) << '\n';
    if (!out) fail(path.string(), "write failed");
}

json metrics_to_json(const MetricsReport& report) {
    json doc;
    doc["crossings"] = report.crossings;
    doc["area"] = report.area;
    doc["avg_edge_length"] = report.avg_edge_length;
    if (report.convex_face_fraction) {
        doc["convex_face_fraction"] = *report.convex_face_fraction;
    }
    return doc;
}

}  // namespace somdraw
