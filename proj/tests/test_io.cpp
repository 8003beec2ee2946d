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

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "somdraw/graph_io.hpp"
#include "somdraw/svg.hpp"

using namespace somdraw;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("somdraw_test_" + name);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

// Minimal XML well-formedness check: one root element, every open tag closed
// in order, attributes quoted. Enough to catch malformed output.
bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    std::size_t roots = 0;
    while (i < text.size()) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        const std::size_t end = text.find('>', i);
        if (end == std::string::npos) return false;
        std::string tag = text.substr(i + 1, end - i - 1);
        i = end + 1;
        if (tag.empty()) return false;
        if (tag.front() == '?') continue;  // declaration
        if (tag.front() == '/') {
            if (stack.empty() || stack.back() != tag.substr(1)) return false;
            stack.pop_back();
            continue;
        }
        const bool self_closing = tag.back() == '/';
        if (self_closing) tag.pop_back();
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
        const std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
        if (name.empty()) return false;
        if (stack.empty()) {
            if (++roots > 1 && !self_closing) return false;
        }
        if (!self_closing) stack.push_back(name);
    }
    return stack.empty() && roots >= 1;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parse_graph_file accepts the minimal document") {
    const auto path = temp_file("minimal.json");
    write_text(path, R"({"nodes": 2, "edges": [[0, 1]]})");
    const GraphDocument doc = parse_graph_file(path);
    CHECK(doc.graph.node_count() == 2);
    CHECK(doc.graph.edge_count() == 1);
    CHECK_FALSE(doc.faces.has_value());
    std::filesystem::remove(path);
}

TEST_CASE("parse_graph_file reports malformed input with its location") {
    struct Case {
        const char* name;
        const char* text;
        const char* expected;
    };
    const Case cases[] = {
        {"selfloop.json", R"({"nodes": 2, "edges": [[0, 0]]})", "self-loop"},
        {"dup.json", R"({"nodes": 3, "edges": [[0, 1], [1, 0]]})", "duplicate edge"},
        {"range.json", R"({"nodes": 2, "edges": [[0, 5]]})", "out of range"},
        {"badpair.json", R"({"nodes": 2, "edges": [[0, 1, 2]]})", "edges[0]"},
        {"negative.json", R"({"nodes": 2, "edges": [[0, -1]]})", "edges[0]"},
        {"zeronodes.json", R"({"nodes": 0, "edges": []})", "\"nodes\""},
        {"floatnodes.json", R"({"nodes": 2.5, "edges": []})", "\"nodes\""},
        {"notjson.json", "{nodes:", "parse"},
        {"badface.json", R"({"nodes": 3, "edges": [[0, 1], [1, 2]], "faces": [[0, 1, 2]]})",
         "not an edge"},
        {"orphanouter.json", R"({"nodes": 2, "edges": [[0, 1]], "outer_face": 0})",
         "without \"faces\""},
    };
    for (const Case& c : cases) {
        CAPTURE(c.name);
        const auto path = temp_file(c.name);
        write_text(path, c.text);
        CHECK_THROWS_WITH_AS(parse_graph_file(path), doctest::Contains(c.expected),
                             std::runtime_error);
        // Errors carry the file name so batch runs can point at the culprit.
        CHECK_THROWS_WITH_AS(parse_graph_file(path), doctest::Contains(c.name),
                             std::runtime_error);
        std::filesystem::remove(path);
    }
    CHECK_THROWS_AS(parse_graph_file(temp_file("missing.json")), std::runtime_error);
}

TEST_CASE("graph documents round-trip through write and parse") {
    const auto [g, faces] = grid_graph(4, 4);
    const auto path = temp_file("roundtrip.json");
    write_graph_file(path, g, &faces);
    const GraphDocument doc = parse_graph_file(path);
    CHECK(doc.graph == g);
    REQUIRE(doc.faces.has_value());
    CHECK(*doc.faces == faces);
    std::filesystem::remove(path);
}

TEST_CASE("layouts round-trip exactly through JSON") {
    Rng rng(64);
    const Layout layout = oracles::random_positions(25, rng);
    const auto path = temp_file("layout.json");
    write_layout_file(path, layout);
    const Layout parsed = parse_layout_file(path, 25);
    CHECK(parsed == layout);  // bit-exact via shortest round-trip formatting

    CHECK_THROWS_WITH_AS(parse_layout_file(path, 24), doctest::Contains("expected 24"),
                         std::runtime_error);
    std::filesystem::remove(path);
}

TEST_CASE("parse_layout_file rejects malformed positions") {
    const auto path = temp_file("badlayout.json");
    write_text(path, R"({"positions": [[0.1, 0.2], [0.3, "x"]]})");
    CHECK_THROWS_WITH_AS(parse_layout_file(path, 2), doctest::Contains("positions[1]"),
                         std::runtime_error);
    write_text(path, R"({"elsewhere": []})");
    CHECK_THROWS_AS(parse_layout_file(path, 0), std::runtime_error);
    std::filesystem::remove(path);
}

TEST_CASE("svg output contains one element per node and edge") {
    const auto [g, faces] = grid_graph(2, 2);
    (void)faces;
    Layout corners;
    corners.positions = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
    const std::string svg = svg_document(g, corners);

    const auto count = [&](const std::string& needle) {
        std::size_t n = 0;
        for (std::size_t pos = svg.find(needle); pos != std::string::npos;
             pos = svg.find(needle, pos + 1)) {
            ++n;
        }
        return n;
    };
    CHECK(count("<circle") == 4);
    CHECK(count("<line") == 4);
    CHECK(count("viewBox") == 1);
    CHECK(xml_well_formed(svg));
}

TEST_CASE("svg handles edgeless graphs and degenerate boxes") {
    const Graph isolated(3, {});
    Layout spread;
    spread.positions = {{0.0, 0.0}, {1.0, 0.5}, {0.2, 0.9}};
    const std::string svg = svg_document(isolated, spread);
    CHECK(svg.find("<line") == std::string::npos);
    CHECK(xml_well_formed(svg));

    Layout single;
    single.positions = {{0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5}};
    const std::string degenerate = svg_document(isolated, single);
    CHECK(xml_well_formed(degenerate));
    CHECK(degenerate.find("viewBox=\"") != std::string::npos);
}

TEST_CASE("svg bytes are deterministic") {
    const auto [g, faces] = grid_graph(3, 3);
    (void)faces;
    Rng rng(5);
    const Layout layout = oracles::random_positions(9, rng);
    CHECK(svg_document(g, layout) == svg_document(g, layout));

    const auto path = temp_file("out.svg");
    write_svg(g, layout, path);
    std::ifstream in(path);
    std::string from_file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(from_file == svg_document(g, layout));
    std::filesystem::remove(path);
}

TEST_CASE("metrics serialize with the face fraction only when present") {
    MetricsReport report;
    report.crossings = 3;
    report.area = 0.5;
    report.avg_edge_length = 0.25;
    nlohmann::json doc = metrics_to_json(report);
    CHECK(doc["crossings"] == 3);
    CHECK(doc["area"] == 0.5);
    CHECK(doc["avg_edge_length"] == 0.25);
    CHECK_FALSE(doc.contains("convex_face_fraction"));

    report.convex_face_fraction = 0.9;
    doc = metrics_to_json(report);
    CHECK(doc["convex_face_fraction"] == 0.9);
}

}  // TEST_SUITE
