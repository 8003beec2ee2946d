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

// somdraw: competitive-learning straight-line graph layout.
//
// Subcommands:
//   gen      emit a generated grid graph as JSON
//   layout   run one layout (som or isom), write an SVG and print metrics
//   metrics  evaluate a stored layout against its graph
//   bench    run a benchmark config and write a CSV

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "somdraw/bench.hpp"
#include "somdraw/graph_io.hpp"
#include "somdraw/isom.hpp"
#include "somdraw/metrics.hpp"
#include "somdraw/som.hpp"
#include "somdraw/svg.hpp"

namespace {

using namespace somdraw;

struct GraphOptions {
    std::string grid;
    std::string input;
};

void add_graph_options(CLI::App* cmd, GraphOptions& opts) {
    auto* grid = cmd->add_option("--grid", opts.grid, "Generate a ROWSxCOLS grid graph");
    auto* input = cmd->add_option("--input", opts.input, "Read a graph JSON file");
    grid->excludes(input);
    input->excludes(grid);
}

GraphDocument resolve_graph(const GraphOptions& opts) {
    if (!opts.grid.empty()) {
        const GridSpec spec = parse_grid_spec(opts.grid);
        GeneratedGraph generated = grid_graph(spec.rows, spec.cols);
        return {std::move(generated.graph), std::move(generated.faces)};
    }
    if (!opts.input.empty()) {
        return parse_graph_file(opts.input);
    }
    throw CLI::ValidationError("one of --grid or --input is required");
}

Region resolve_region(const std::string& name) {
    if (name == "square") return Region::unit_square();
    if (name == "hexagon") return Region::hexagon({0.5, 0.5}, 0.5);
    throw CLI::ValidationError("--region must be square or hexagon");
}

int run_gen(const GraphOptions& graph_opts, const std::string& out_path) {
    const GraphDocument doc = resolve_graph(graph_opts);
    const nlohmann::json json = graph_to_json(doc.graph, doc.faces ? &*doc.faces : nullptr);
    if (out_path.empty()) {
        std::cout << json.dump(2) << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error(out_path + ": cannot open file for writing");
        out << json.dump(2) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Competitive-learning straight-line graph layout (SOM and inverted SOM)"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Emit a generated graph as JSON");
    GraphOptions gen_graph;
    std::string gen_out;
    gen->add_option("--grid", gen_graph.grid, "ROWSxCOLS grid to generate")->required();
    gen->add_option("--out", gen_out, "Output path (default: stdout)");

    // layout
    auto* layout_cmd = app.add_subcommand("layout", "Lay out one graph and write an SVG");
    GraphOptions layout_graph;
    add_graph_options(layout_cmd, layout_graph);
    std::string layout_algorithm = "isom";
    std::string layout_region = "square";
    std::string layout_svg = "layout.svg";
    std::string layout_positions_out;
    std::uint64_t layout_seed = 1;
    SomParams som_defaults;
    IsomParams isom_defaults;
    std::optional<std::uint64_t> opt_t_max;
    std::optional<std::uint32_t> opt_radius;
    layout_cmd->add_option("--algorithm", layout_algorithm, "som or isom")
        ->check(CLI::IsMember({"som", "isom"}));
    layout_cmd->add_option("--seed", layout_seed, "Random seed (default 1)");
    layout_cmd->add_option("--t-max", opt_t_max, "Iterations (som) or epochs (isom)");
    layout_cmd->add_option("--radius", opt_radius, "Initial neighborhood radius");
    auto* alpha_max_opt =
        layout_cmd->add_option("--alpha-max", som_defaults.alpha_max, "som: initial learning rate");
    auto* alpha_min_opt =
        layout_cmd->add_option("--alpha-min", som_defaults.alpha_min, "som: final learning rate");
    auto* cooling_opt =
        layout_cmd->add_option("--cooling", isom_defaults.cooling, "isom: cooling factor");
    auto* max_adaption_opt = layout_cmd->add_option("--max-adaption", isom_defaults.max_adaption,
                                                    "isom: initial adaption");
    auto* min_adaption_opt = layout_cmd->add_option("--min-adaption", isom_defaults.min_adaption,
                                                    "isom: adaption clamp");
    layout_cmd->add_option("--region", layout_region, "square or hexagon")
        ->check(CLI::IsMember({"square", "hexagon"}));
    layout_cmd->add_option("--out", layout_svg, "SVG output path (default layout.svg)");
    layout_cmd->add_option("--layout-out", layout_positions_out,
                           "Also write the node positions as JSON");

    // metrics
    auto* metrics_cmd = app.add_subcommand("metrics", "Evaluate a stored layout");
    std::string metrics_graph;
    std::string metrics_layout;
    metrics_cmd->add_option("--input", metrics_graph, "Graph JSON file")->required();
    metrics_cmd->add_option("--layout", metrics_layout, "Layout JSON file ({\"positions\": ...})")
        ->required();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark config, write CSV");
    std::string bench_config;
    std::string bench_csv;
    std::string bench_seeds;
    std::optional<unsigned> bench_threads;
    bench_cmd->add_option("--config", bench_config, "Benchmark config file")->required();
    bench_cmd->add_option("--csv", bench_csv, "Override the CSV output path");
    bench_cmd->add_option("--seeds", bench_seeds, "Override seeds (N..M or list)");
    bench_cmd->add_option("--threads", bench_threads, "Override worker thread count");

    try {
        app.parse(argc, argv);

        if (*gen) {
            return run_gen(gen_graph, gen_out);
        }

        if (*layout_cmd) {
            const GraphDocument doc = resolve_graph(layout_graph);
            const Region region = resolve_region(layout_region);
            const Algorithm algorithm = parse_algorithm(layout_algorithm);

            const bool som_selected = algorithm == Algorithm::som;
            for (const auto* opt : {alpha_max_opt, alpha_min_opt}) {
                if (!som_selected && opt->count() > 0) {
                    throw CLI::ValidationError(opt->get_name() + " only applies to --algorithm som");
                }
            }
            for (const auto* opt : {cooling_opt, max_adaption_opt, min_adaption_opt}) {
                if (som_selected && opt->count() > 0) {
                    throw CLI::ValidationError(opt->get_name() +
                                               " only applies to --algorithm isom");
                }
            }

            Layout layout;
            if (algorithm == Algorithm::som) {
                SomParams params = som_defaults;
                if (opt_t_max) params.t_max = *opt_t_max;
                if (opt_radius) params.r_max = *opt_radius;
                layout = som_layout(doc.graph, region, params, layout_seed);
            } else {
                IsomParams params = isom_defaults;
                if (opt_t_max) params.t_max = *opt_t_max;
                if (opt_radius) params.r_max = *opt_radius;
                layout = isom_layout(doc.graph, region, params, layout_seed);
            }

            write_svg(doc.graph, layout, layout_svg);
            if (!layout_positions_out.empty()) {
                write_layout_file(layout_positions_out, layout);
            }
            const MetricsReport report =
                doc.faces ? evaluate(doc.graph, layout, *doc.faces) : evaluate(doc.graph, layout);
            std::cout << metrics_to_json(report).dump(2) << '\n';
            return 0;
        }

        if (*metrics_cmd) {
            const GraphDocument doc = parse_graph_file(metrics_graph);
            const Layout layout = parse_layout_file(metrics_layout, doc.graph.node_count());
            const MetricsReport report =
                doc.faces ? evaluate(doc.graph, layout, *doc.faces) : evaluate(doc.graph, layout);
            std::cout << metrics_to_json(report).dump(2) << '\n';
            return 0;
        }

        if (*bench_cmd) {
            RunConfig config = parse_config_file(bench_config);
            if (!bench_csv.empty()) config.csv_path = bench_csv;
            if (!bench_seeds.empty()) {
                const RunConfig seed_override = parse_config_text("seeds = " + bench_seeds, "--seeds");
                config.seeds = seed_override.seeds;
            }
            if (bench_threads) config.threads = *bench_threads;

            const std::vector<RunRecord> records = run_benchmark(config);
            if (config.csv_path.empty()) {
                write_csv(records, std::cout);
            } else {
                std::ofstream out(config.csv_path);
                if (!out) {
                    throw std::runtime_error(config.csv_path.string() +
                                             ": cannot open file for writing");
                }
                write_csv(records, out);
                std::cerr << "wrote " << records.size() << " runs to " << config.csv_path.string()
                          << '\n';
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
