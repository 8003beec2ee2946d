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

#ifndef SOMDRAW_GRAPH_IO_HPP
#define SOMDRAW_GRAPH_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "somdraw/graph.hpp"
#include "somdraw/layout.hpp"
#include "somdraw/metrics.hpp"

namespace somdraw {

struct GraphDocument {
    Graph graph;
    std::optional<FaceList> faces;
};

/// Graph JSON schema:
///   {"nodes": N, "edges": [[u,v], ...],
///    "faces": [[...], ...] (optional), "outer_face": i (optional)}
/// All Graph and FaceList invariants are validated; violations throw
/// std::runtime_error with the file and offending element named.
GraphDocument parse_graph_file(const std::filesystem::path& path);

/// Same validation on an already-parsed JSON value. `context` prefixes error
/// messages (typically the file name).
GraphDocument parse_graph_json(const nlohmann::json& doc, const std::string& context);

nlohmann::json graph_to_json(const Graph& g, const FaceList* faces = nullptr);
void write_graph_file(const std::filesystem::path& path, const Graph& g,
                      const FaceList* faces = nullptr);

/// Layout JSON schema: {"positions": [[x,y], ...]}, one pair per node.
Layout parse_layout_file(const std::filesystem::path& path, NodeId expected_nodes);
nlohmann::json layout_to_json(const Layout& layout);
void write_layout_file(const std::filesystem::path& path, const Layout& layout);

nlohmann::json metrics_to_json(const MetricsReport& report);

}  // namespace somdraw

#endif  // SOMDRAW_GRAPH_IO_HPP
