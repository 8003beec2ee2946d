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

#include "somdraw/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "somdraw/graph_io.hpp"

namespace somdraw {

namespace {

std::string fmt_double(double v) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

std::string fmt_wall_time(double seconds) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", seconds);
    return buf;
}

struct LoadedGraph {
    std::string label;
    std::optional<Graph> graph;
    std::optional<FaceList> faces;
    std::string error;
};

LoadedGraph load_source(const GraphSource& source) {
    LoadedGraph loaded;
    loaded.label = source.label;
    try {
        if (const auto* grid = std::get_if<GridSpec>(&source.source)) {
            GeneratedGraph generated = grid_graph(grid->rows, grid->cols);
            loaded.graph = std::move(generated.graph);
            loaded.faces = std::move(generated.faces);
        } else {
            GraphDocument doc = parse_graph_file(std::get<std::filesystem::path>(source.source));
            loaded.graph = std::move(doc.graph);
            loaded.faces = std::move(doc.faces);
        }
    } catch (const std::exception& e) {
        loaded.error = e.what();
    }
    return loaded;
}

struct Cell {
    const LoadedGraph* graph;
    Algorithm algorithm;
    std::uint64_t seed;
};

RunRecord run_cell(const Cell& cell, const RunConfig& config) {
    RunRecord record;
    record.algorithm = cell.algorithm;
    record.graph_label = cell.graph->label;
    record.seed = cell.seed;
    if (!cell.graph->error.empty()) {
        record.error = cell.graph->error;
        return record;
    }
    const Graph& g = *cell.graph->graph;
    record.node_count = g.node_count();
    try {
        const auto start = std::chrono::steady_clock::now();
        const Layout layout = cell.algorithm == Algorithm::som
                                  ? som_layout(g, config.region, config.som, cell.seed)
                                  : isom_layout(g, config.region, config.isom, cell.seed);
        const auto stop = std::chrono::steady_clock::now();
        record.wall_time_s = std::chrono::duration<double>(stop - start).count();
        record.metrics = cell.graph->faces ? evaluate(g, layout, *cell.graph->faces)
                                           : evaluate(g, layout);
    } catch (const std::exception& e) {
        record.error = e.what();
    }
    return record;
}

}  // namespace

std::string algorithm_name(Algorithm a) { return a == Algorithm::som ? "som" : "isom"; }

Algorithm parse_algorithm(const std::string& name) {
    if (name == "som") return Algorithm::som;
    if (name == "isom") return Algorithm::isom;
    throw std::invalid_argument("unknown algorithm \"" + name + "\" (expected som or isom)");
}

GridSpec parse_grid_spec(const std::string& text) {
    const auto sep = text.find('x');
    GridSpec spec;
    bool ok = sep != std::string::npos && sep > 0 && sep + 1 < text.size();
    if (ok) {
        const auto r1 = std::from_chars(text.data(), text.data() + sep, spec.rows);
        const auto r2 = std::from_chars(text.data() + sep + 1, text.data() + text.size(), spec.cols);
        ok = r1.ec == std::errc() && r1.ptr == text.data() + sep && r2.ec == std::errc() &&
             r2.ptr == text.data() + text.size();
    }
    if (!ok) {
        throw std::invalid_argument("invalid grid spec \"" + text + "\" (expected ROWSxCOLS)");
    }
    return spec;
}

std::vector<RunRecord> run_benchmark(const RunConfig& config) {
    if (config.graphs.empty()) throw std::invalid_argument("benchmark: no graphs configured");
    if (config.algorithms.empty()) {
        throw std::invalid_argument("benchmark: no algorithms configured");
    }
    if (config.seeds.empty()) throw std::invalid_argument("benchmark: at least one seed required");
    config.som.validate();
    config.isom.validate();

    std::vector<LoadedGraph> loaded;
    loaded.reserve(config.graphs.size());
    for (const GraphSource& source : config.graphs) {
        loaded.push_back(load_source(source));
    }

    std::vector<Cell> cells;
    cells.reserve(loaded.size() * config.algorithms.size() * config.seeds.size());
    for (const LoadedGraph& graph : loaded) {
        for (const Algorithm algorithm : config.algorithms) {
            for (const std::uint64_t seed : config.seeds) {
                cells.push_back({&graph, algorithm, seed});
            }
        }
    }

    std::vector<RunRecord> records(cells.size());
    const unsigned worker_count =
        std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(cells.size())));
    if (worker_count == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            records[i] = run_cell(cells[i], config);
        }
    } else {
        // Cells are independent; records land at their cell index, so the
        // output order never depends on scheduling.
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (unsigned w = 0; w < worker_count; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= cells.size()) return;
                    records[i] = run_cell(cells[i], config);
                }
            });
        }
        for (std::thread& worker : workers) worker.join();
    }
    return records;
}

void write_csv(const std::vector<RunRecord>& records, std::ostream& out) {
    out << "algorithm,graph,nodes,seed,wall_time_s,crossings,area,avg_edge_length,"
           "convex_face_fraction\n";
    for (const RunRecord& r : records) {
        out << algorithm_name(r.algorithm) << ',' << r.graph_label << ',' << r.node_count << ','
            << r.seed << ',' << fmt_wall_time(r.wall_time_s) << ',';
        if (r.metrics) {
            out << r.metrics->crossings << ',' << fmt_double(r.metrics->area) << ','
                << fmt_double(r.metrics->avg_edge_length) << ',';
            if (r.metrics->convex_face_fraction) {
                out << fmt_double(*r.metrics->convex_face_fraction);
            }
        } else {
            out << "error,error,error,error";
        }
        out << '\n';
    }

    // Mean rows per (graph, algorithm) in first-appearance order, for
    // side-by-side comparison of the two algorithms.
    struct Group {
        NodeId node_count = 0;
        std::size_t runs = 0;
        double wall = 0.0, crossings = 0.0, area = 0.0, length = 0.0;
        double convex = 0.0;
        std::size_t convex_count = 0;
    };
    std::vector<std::pair<std::pair<std::string, Algorithm>, Group>> groups;
    for (const RunRecord& r : records) {
        if (!r.metrics) continue;
        const std::pair<std::string, Algorithm> key{r.graph_label, r.algorithm};
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == key; });
        if (it == groups.end()) {
            groups.push_back({key, Group{}});
            it = std::prev(groups.end());
        }
        Group& group = it->second;
        group.node_count = r.node_count;
        ++group.runs;
        group.wall += r.wall_time_s;
        group.crossings += static_cast<double>(r.metrics->crossings);
        group.area += r.metrics->area;
        group.length += r.metrics->avg_edge_length;
        if (r.metrics->convex_face_fraction) {
            group.convex += *r.metrics->convex_face_fraction;
            ++group.convex_count;
        }
    }
    for (const auto& [key, group] : groups) {
        const double n = static_cast<double>(group.runs);
        out << algorithm_name(key.second) << ',' << key.first << ',' << group.node_count
            << ",mean," << fmt_wall_time(group.wall / n) << ',' << fmt_double(group.crossings / n)
            << ',' << fmt_double(group.area / n) << ',' << fmt_double(group.length / n) << ',';
        if (group.convex_count > 0) {
            out << fmt_double(group.convex / static_cast<double>(group.convex_count));
        }
        out << '\n';
    }
}

std::string csv_string(const std::vector<RunRecord>& records) {
    std::ostringstream out;
    write_csv(records, out);
    return out.str();
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> tokens;
    std::string token;
    std::istringstream in(value);
    while (in >> token) {
        if (!token.empty() && token.back() == ',') token.pop_back();
        if (!token.empty()) tokens.push_back(token);
    }
    return tokens;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& value) {
    std::vector<std::uint64_t> seeds;
    const auto range = value.find("..");
    if (range != std::string::npos) {
        const std::uint64_t first = std::stoull(trim(value.substr(0, range)));
        const std::uint64_t last = std::stoull(trim(value.substr(range + 2)));
        if (last < first) throw std::invalid_argument("empty seed range \"" + value + "\"");
        for (std::uint64_t s = first; s <= last; ++s) seeds.push_back(s);
        return seeds;
    }
    for (const std::string& token : split_list(value)) {
        seeds.push_back(std::stoull(token));
    }
    return seeds;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& context) {
    RunConfig config;
    config.algorithms.clear();
    config.seeds.clear();
    bool region_hexagon = false;

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(context + ":" + std::to_string(line_no) +
                                        ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "algorithms" || key == "algorithm") {
                for (const std::string& token : split_list(value)) {
                    if (token == "both") {
                        config.algorithms.push_back(Algorithm::som);
                        config.algorithms.push_back(Algorithm::isom);
                    } else {
                        config.algorithms.push_back(parse_algorithm(token));
                    }
                }
            } else if (key == "grids" || key == "grid") {
                for (const std::string& token : split_list(value)) {
                    const GridSpec spec = parse_grid_spec(token);
                    config.graphs.push_back({"grid-" + token, spec});
                }
            } else if (key == "graphs" || key == "graph") {
                // TODO: quoted values, so graph paths may contain spaces
                for (const std::string& token : split_list(value)) {
                    const std::filesystem::path path(token);
                    config.graphs.push_back({path.stem().string(), path});
                }
            } else if (key == "seeds" || key == "seed") {
                config.seeds = parse_seed_list(value);
            } else if (key == "region") {
                if (value == "square") {
                    region_hexagon = false;
                } else if (value == "hexagon") {
                    region_hexagon = true;
                } else {
                    throw std::invalid_argument("region must be square or hexagon");
                }
            } else if (key == "csv") {
                config.csv_path = value;
            } else if (key == "threads") {
                config.threads = static_cast<unsigned>(std::stoul(value));
            } else if (key == "som.t_max") {
                config.som.t_max = std::stoull(value);
            } else if (key == "som.alpha_max") {
                config.som.alpha_max = std::stod(value);
            } else if (key == "som.alpha_min") {
                config.som.alpha_min = std::stod(value);
            } else if (key == "som.radius") {
                config.som.r_max = static_cast<std::uint32_t>(std::stoul(value));
            } else if (key == "som.radius_min") {
                config.som.r_min = static_cast<std::uint32_t>(std::stoul(value));
            } else if (key == "som.sigma_scale") {
                config.som.sigma_scale = std::stod(value);
            } else if (key == "isom.t_max") {
                config.isom.t_max = std::stoull(value);
            } else if (key == "isom.cooling") {
                config.isom.cooling = std::stod(value);
            } else if (key == "isom.max_adaption") {
                config.isom.max_adaption = std::stod(value);
            } else if (key == "isom.min_adaption") {
                config.isom.min_adaption = std::stod(value);
            } else if (key == "isom.radius") {
                config.isom.r_max = static_cast<std::uint32_t>(std::stoul(value));
            } else if (key == "isom.radius_min") {
                config.isom.r_min = static_cast<std::uint32_t>(std::stoul(value));
            } else if (key == "isom.radius_stage_length") {
                config.isom.radius_stage_length = std::stoull(value);
            } else {
                throw std::invalid_argument("unknown key \"" + key + "\"");
            }
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(context + ":" + std::to_string(line_no) + ": " + e.what());
        } catch (const std::out_of_range&) {
            throw std::invalid_argument(context + ":" + std::to_string(line_no) +
                                        ": value out of range");
        }
    }

    if (config.algorithms.empty()) {
        config.algorithms = {Algorithm::som, Algorithm::isom};
    }
    if (config.seeds.empty()) config.seeds = {1};
    if (region_hexagon) {
        config.region = Region::hexagon({0.5, 0.5}, 0.5);
    }
    return config;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error(path.string() + ": cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path.string());
}

}  // namespace somdraw
