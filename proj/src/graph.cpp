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

#include "somdraw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace somdraw {

namespace {

std::string pair_text(NodeId u, NodeId v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(NodeId node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
    if (node_count_ == 0) {
        throw std::invalid_argument("graph: node count must be positive");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        Edge& e = edges_[i];
        if (e.u >= node_count_ || e.v >= node_count_) {
            throw std::invalid_argument("edge " + std::to_string(i) + ": node index out of range " +
                                        pair_text(e.u, e.v) + ", graph has " +
                                        std::to_string(node_count_) + " nodes");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("edge " + std::to_string(i) + ": self-loop " +
                                        pair_text(e.u, e.v));
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw std::invalid_argument("duplicate edge " + pair_text(dup->u, dup->v));
    }

    adj_offsets_.assign(static_cast<std::size_t>(node_count_) + 1, 0);
    for (const Edge& e : edges_) {
        ++adj_offsets_[e.u + 1];
        ++adj_offsets_[e.v + 1];
    }
    std::partial_sum(adj_offsets_.begin(), adj_offsets_.end(), adj_offsets_.begin());
    adj_.resize(2 * edges_.size());
    std::vector<std::size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (const Edge& e : edges_) {
        adj_[cursor[e.u]++] = e.v;
        adj_[cursor[e.v]++] = e.u;
    }
    for (NodeId v = 0; v < node_count_; ++v) {
        std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(adj_offsets_[v]),
                  adj_.begin() + static_cast<std::ptrdiff_t>(adj_offsets_[v + 1]));
    }
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    if (v >= node_count_) {
        throw std::out_of_range("node index " + std::to_string(v) + " out of range, graph has " +
                                std::to_string(node_count_) + " nodes");
    }
    return {adj_.data() + adj_offsets_[v], adj_offsets_[v + 1] - adj_offsets_[v]};
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
    if (u == v || u >= node_count_ || v >= node_count_) return false;
    const Edge probe{std::min(u, v), std::max(u, v)};
    return std::binary_search(edges_.begin(), edges_.end(), probe);
}

void validate_faces(const Graph& g, const FaceList& faces) {
    if (faces.outer_face_index && *faces.outer_face_index >= faces.faces.size()) {
        throw std::invalid_argument("outer_face index " + std::to_string(*faces.outer_face_index) +
                                    " out of range, " + std::to_string(faces.faces.size()) +
                                    " faces given");
    }
    for (std::size_t i = 0; i < faces.faces.size(); ++i) {
        const auto& cycle = faces.faces[i];
        const std::string where = "face " + std::to_string(i);
        if (cycle.size() < 3) {
            throw std::invalid_argument(where + ": a facial cycle needs at least 3 vertices");
        }
        for (const NodeId v : cycle) {
            if (v >= g.node_count()) {
                throw std::invalid_argument(where + ": node index " + std::to_string(v) +
                                            " out of range");
            }
        }
        std::vector<NodeId> sorted(cycle.begin(), cycle.end());
        std::sort(sorted.begin(), sorted.end());
        const auto repeat = std::adjacent_find(sorted.begin(), sorted.end());
        if (repeat != sorted.end()) {
            throw std::invalid_argument(where + ": node " + std::to_string(*repeat) +
                                        " repeats within the cycle");
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const NodeId a = cycle[k];
            const NodeId b = cycle[(k + 1) % cycle.size()];
            if (!g.has_edge(a, b)) {
                throw std::invalid_argument(where + ": consecutive pair " + std::to_string(a) +
                                            "," + std::to_string(b) + " is not an edge");
            }
        }
    }
}

GeneratedGraph grid_graph(std::uint32_t rows, std::uint32_t cols) {
    if (rows < 2 || cols < 2) {
        throw std::invalid_argument("grid_graph: rows and cols must both be at least 2, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    }
    const auto id = [cols](std::uint32_t r, std::uint32_t c) { return NodeId(r * cols + c); };

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(rows) * (cols - 1) +
                  static_cast<std::size_t>(cols) * (rows - 1));
    for (std::uint32_t r = 0; r < rows; ++r) {
        for (std::uint32_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
        }
    }

    FaceList faces;
    faces.faces.reserve(static_cast<std::size_t>(rows - 1) * (cols - 1) + 1);
    for (std::uint32_t r = 0; r + 1 < rows; ++r) {
        for (std::uint32_t c = 0; c + 1 < cols; ++c) {
            faces.faces.push_back({id(r, c), id(r, c + 1), id(r + 1, c + 1), id(r + 1, c)});
        }
    }
    // Boundary cycle, clockwise from the top-left corner.
    std::vector<NodeId> boundary;
    boundary.reserve(2 * (static_cast<std::size_t>(rows) + cols) - 4);
    for (std::uint32_t c = 0; c < cols; ++c) boundary.push_back(id(0, c));
    for (std::uint32_t r = 1; r < rows; ++r) boundary.push_back(id(r, cols - 1));
    for (std::uint32_t c = cols - 1; c-- > 0;) boundary.push_back(id(rows - 1, c));
    for (std::uint32_t r = rows - 1; r-- > 1;) boundary.push_back(id(r, 0));
    faces.faces.push_back(std::move(boundary));
    faces.outer_face_index = faces.faces.size() - 1;

    GeneratedGraph out{Graph(NodeId(rows) * cols, std::move(edges)), std::move(faces)};
    validate_faces(out.graph, out.faces);
    return out;
}

std::unordered_map<NodeId, std::uint32_t> graph_distance_within(const Graph& g, NodeId source,
                                                                std::uint32_t radius) {
    if (source >= g.node_count()) {
        throw std::out_of_range("graph_distance_within: source " + std::to_string(source) +
                                " out of range");
    }
    std::unordered_map<NodeId, std::uint32_t> result;
    BfsScratch scratch(g.node_count());
    scratch.for_each_within(g, source, radius,
                            [&](NodeId node, std::uint32_t d) { result.emplace(node, d); });
    return result;
}

}  // namespace somdraw
