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

#ifndef SOMDRAW_GRAPH_HPP
#define SOMDRAW_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace somdraw {

using NodeId = std::uint32_t;

/// Unordered node pair. Graph construction normalizes it to u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over dense node indices 0..node_count-1.
///
/// The edge set doubles as the neighborhood topology for the layout
/// algorithms, so adjacency lists are built once at construction and the
/// object is immutable afterwards. Construction rejects self-loops,
/// duplicate edges and out-of-range indices.
class Graph {
public:
    Graph(NodeId node_count, std::vector<Edge> edges);

    NodeId node_count() const noexcept { return node_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Normalized (u < v) and sorted ascending.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Neighbor indices of v, sorted ascending. Throws std::out_of_range for
    /// an invalid node.
    std::span<const NodeId> neighbors(NodeId v) const;

    bool has_edge(NodeId u, NodeId v) const noexcept;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    NodeId node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> adj_offsets_;
    std::vector<NodeId> adj_;
};

/// Facial cycles of a planar embedding of some Graph. Each face is a cyclic
/// vertex sequence (implicitly closed); outer_face_index marks the cycle of
/// the unbounded face when known.
struct FaceList {
    std::vector<std::vector<NodeId>> faces;
    std::optional<std::size_t> outer_face_index;

    friend bool operator==(const FaceList&, const FaceList&) = default;
};

/// Checks every FaceList invariant against g: cycles of >= 3 distinct
/// vertices, consecutive pairs (including the wrap-around) present in the
/// edge set, outer index in range. Throws std::invalid_argument naming the
/// offending face.
void validate_faces(const Graph& g, const FaceList& faces);

struct GeneratedGraph {
    Graph graph;
    FaceList faces;
};

/// rows x cols grid with 4-neighbor edges. The face list holds every unit
/// square plus the boundary cycle, which is appended last and marked as the
/// outer face. Requires rows >= 2 and cols >= 2.
GeneratedGraph grid_graph(std::uint32_t rows, std::uint32_t cols);

/// Nodes within `radius` hops of source, mapped to their exact hop distance
/// (source maps to 0). Throws std::out_of_range for an invalid source.
std::unordered_map<NodeId, std::uint32_t> graph_distance_within(const Graph& g, NodeId source,
                                                                std::uint32_t radius);

/// Reusable BFS workspace for the layout inner loops. A bounded-radius BFS
/// runs once per stimulus, so the queue and visit marks are kept allocated
/// between calls. Must be constructed for the node count of the graph it is
/// used with. Not thread-safe; use one per worker.
class BfsScratch {
public:
    explicit BfsScratch(NodeId node_count)
        : mark_(node_count, 0), dist_(node_count, 0) {
        queue_.reserve(node_count);
    }

    /// Calls visit(node, dist) for every node with hop distance <= radius
    /// from source, in BFS order (source first with dist 0).
    template <typename Visit>
    void for_each_within(const Graph& g, NodeId source, std::uint32_t radius, Visit&& visit) {
        advance_generation();
        queue_.clear();
        queue_.push_back(source);
        mark_[source] = generation_;
        dist_[source] = 0;
        std::size_t head = 0;
        while (head < queue_.size()) {
            const NodeId node = queue_[head++];
            const std::uint32_t d = dist_[node];
            visit(node, d);
            if (d == radius) continue;
            for (const NodeId next : g.neighbors(node)) {
                if (mark_[next] != generation_) {
                    mark_[next] = generation_;
                    dist_[next] = d + 1;
                    queue_.push_back(next);
                }
            }
        }
    }

private:
    void advance_generation() {
        if (generation_ == std::numeric_limits<std::uint32_t>::max()) {
            std::fill(mark_.begin(), mark_.end(), 0);
            generation_ = 0;
        }
        ++generation_;
    }

    std::vector<std::uint32_t> mark_;
    std::vector<std::uint32_t> dist_;
    std::vector<NodeId> queue_;
    std::uint32_t generation_ = 0;
};

}  // namespace somdraw

#endif  // SOMDRAW_GRAPH_HPP
