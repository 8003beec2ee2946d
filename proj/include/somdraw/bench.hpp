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

#ifndef SOMDRAW_BENCH_HPP
#define SOMDRAW_BENCH_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "somdraw/graph.hpp"
#include "somdraw/isom.hpp"
#include "somdraw/metrics.hpp"
#include "somdraw/region.hpp"
#include "somdraw/som.hpp"

namespace somdraw {

enum class Algorithm { som, isom };

std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);  // "som" | "isom"

struct GridSpec {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
};

/// "RxC", e.g. "10x10".
GridSpec parse_grid_spec(const std::string& text);

/// One graph entry of a benchmark: either a generated grid or a graph file.
struct GraphSource {
    std::string label;
    std::variant<GridSpec, std::filesystem::path> source;
};

/// Full description of a benchmark: the cross product
/// graphs x algorithms x seeds is run in exactly this nesting order.
struct RunConfig {
    std::vector<GraphSource> graphs;
    std::vector<Algorithm> algorithms = {Algorithm::som, Algorithm::isom};
    std::vector<std::uint64_t> seeds = {1};
    Region region = Region::unit_square();
    SomParams som;
    IsomParams isom;
    std::filesystem::path csv_path;  // empty: caller decides (CLI falls back to stdout)
    unsigned threads = 1;
};

/// One (graph, algorithm, seed) cell. A non-empty `error` marks a failed
/// run; its metrics are absent but the row is still reported.
struct RunRecord {
    Algorithm algorithm = Algorithm::som;
    std::string graph_label;
    NodeId node_count = 0;
    std::uint64_t seed = 0;
    double wall_time_s = 0.0;
    std::optional<MetricsReport> metrics;
    std::string error;
};

/// Runs every cell of the config (in parallel when threads > 1), returning
/// records in config order regardless of scheduling. Layout time is measured
/// per cell on a monotonic clock; failures are recorded, never dropped.
std::vector<RunRecord> run_benchmark(const RunConfig& config);

/// CSV with the header
/// algorithm,graph,nodes,seed,wall_time_s,crossings,area,avg_edge_length,convex_face_fraction
/// one row per record, then one mean row per (graph, algorithm) group (seed
/// column "mean", failed runs excluded from the averages). Deterministic
/// except for the wall_time_s column.
void write_csv(const std::vector<RunRecord>& records, std::ostream& out);
std::string csv_string(const std::vector<RunRecord>& records);

/// Flat key-value benchmark description; see the README for the grammar.
RunConfig parse_config_file(const std::filesystem::path& path);
RunConfig parse_config_text(const std::string& text, const std::string& context);

}  // namespace somdraw

#endif  // SOMDRAW_BENCH_HPP
