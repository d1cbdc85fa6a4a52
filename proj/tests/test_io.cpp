// Copyright 2026 The twograph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "json.hpp"
#include "support/fixtures.hpp"
#include "twograph/errors.hpp"
#include "twograph/io.hpp"
#include "twograph/version.hpp"

namespace twograph {
namespace {

using nlohmann::json;

constexpr const char *kFiveVertex = R"(# generalised five-vertex example
twograph-state 1
n 5
edges 0-2 0-3 1-2 1-3 2-3 2-4 3-4 1-1 3-3
r 2 3 4
q 2 3
)";

TEST(StateText, ParsesCommentsAndLoops) {
    const StateDocument doc = parse_state_text(kFiveVertex);
    EXPECT_EQ(doc.n, 5);
    EXPECT_EQ(doc.edges.size(), 9U);
    EXPECT_TRUE(doc.to_state().same_representation(fixtures::five_vertex_state(true)));
}

TEST(StateText, RoundTripsRandomStates) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = fixtures::random_state(1 + static_cast<int>(rng() % 9), rng);
        const StateDocument doc = StateDocument::from_state(s);
        EXPECT_EQ(parse_state_text(to_text(doc)), doc);
        EXPECT_EQ(parse_state_json(to_json(doc)), doc);
        EXPECT_EQ(parse_state_document(to_json(doc)), doc);
        EXPECT_EQ(parse_state_document(to_text(doc)), doc);
        EXPECT_EQ(doc.to_state(), s);
    }
}

TEST(StateText, NormalisesEdgeOrientation) {
    const auto doc = parse_state_text("twograph-state 1\nn 3\nedges 2-0 1-0\nr 0 1 2\n");
    EXPECT_EQ(doc.edges, (std::vector<std::pair<int, int>>{{0, 2}, {0, 1}}));
}

TEST(StateText, RejectsMalformedInput) {
    const char *bad[] = {
        "",
        "n 3\n",
        "twograph-state 2\nn 1\nr 0\n",
        "twograph-state 1\nr 0\n",
        "twograph-state 1\nn 2\nedges 0-1 1-0\nr 0 1\n",
        "twograph-state 1\nn 2\nedges 0-1 0-1\nr 0 1\n",
        "twograph-state 1\nn 2\nedges 0-2\nr 0 1\n",
        "twograph-state 1\nn 2\nedges 01\nr 0 1\n",
        "twograph-state 1\nn 2\nr 0 0\n",
        "twograph-state 1\nn 2\nr 0\nq 1\n",
        "twograph-state 1\nn 2\nedges 0-1\nr\n",
        "twograph-state 1\nn 2\nn 2\n",
        "twograph-state 1\nn x\n",
        "twograph-state 1\nn 2\ncolour 1\n",
        "twograph-state 1\nn 65\n",
    };
    for (const char *text : bad) {
        EXPECT_THROW((void)parse_state_text(text), ParseError) << text;
    }
}

TEST(StateJson, RejectsMalformedInput) {
    const char *bad[] = {
        "{",
        R"({"format":"other","version":1,"n":1,"edges":[],"r":[0]})",
        R"({"format":"twograph-state","version":3,"n":1,"edges":[],"r":[0]})",
        R"({"format":"twograph-state","version":1,"edges":[],"r":[0]})",
        R"({"format":"twograph-state","version":1,"n":2,"edges":[[0,1,1]],"r":[0,1]})",
        R"({"format":"twograph-state","version":1,"n":2,"edges":[[0,1],[1,0]],"r":[0,1]})",
        R"({"format":"twograph-state","version":1,"n":2,"edges":[],"r":[0],"q":[1]})",
        R"({"format":"twograph-state","version":1,"n":2,"edges":"none","r":[0]})",
    };
    for (const char *text : bad) {
        EXPECT_THROW((void)parse_state_json(text), ParseError) << text;
    }
    EXPECT_THROW((void)parse_state_document("   \n"), ParseError);
}

TEST(StateFile, LoadsBothFormats) {
    const auto dir = std::filesystem::temp_directory_path() / "twograph_test_io";
    std::filesystem::create_directories(dir);
    const auto doc = parse_state_text(kFiveVertex);
    {
        std::ofstream(dir / "five.txt") << kFiveVertex;
        std::ofstream(dir / "five.json") << to_json(doc);
    }
    EXPECT_EQ(load_state_file(dir / "five.txt"), doc);
    EXPECT_EQ(load_state_file(dir / "five.json"), doc);
    EXPECT_THROW((void)load_state_file(dir / "missing.txt"), ParseError);
    std::filesystem::remove_all(dir);
}

TEST(JValues, ParseAndFormat) {
    EXPECT_EQ(parse_j_list("1,2,inf"), (std::vector<double>{1.0, 2.0, kInfinity}));
    EXPECT_DOUBLE_EQ(parse_j("2.5"), 2.5);
    EXPECT_EQ(format_j(kInfinity), "inf");
    EXPECT_EQ(format_j(4.0), "4");
    for (const char *bad : {"", "0", "-1", "x", "3x", "nan", "1,,2"}) {
        EXPECT_THROW((void)parse_j_list(bad), ParseError) << bad;
    }
}

TEST(Reports, SpectralReportCarriesProvenance) {
    const auto report = sweep(from_graph_state(Gf2Graph::from_edges(2, {{0, 1}})), {.js = {2.0, 4.0, kInfinity}});
    const json j = json::parse(spectral_report_json(report, {.workers = 3, .seed = 5, .prng = "mt19937_64"}));
    EXPECT_EQ(j["meta"]["version"], kVersion);
    EXPECT_EQ(j["meta"]["workers"], 3);
    EXPECT_EQ(j["meta"]["seed"], 5);
    EXPECT_EQ(j["transforms"], 9);
    EXPECT_NEAR(j["lj_norms"]["4"].get<double>(), 1.074570, 1e-6);
    EXPECT_NEAR(j["lj_norms"]["2"].get<double>(), 1.0, 1e-12);
    EXPECT_TRUE(j["lj_norms"].contains("inf"));
    EXPECT_NEAR(j["cmf"].get<double>(), 3.0, 1e-9);
    std::uint64_t total = 0;
    for (const auto &[l, count] : j["l_census"].items()) {
        total += count.get<std::uint64_t>();
    }
    EXPECT_EQ(total, 9U);
}

TEST(Reports, Table1CsvHasMetaHeaderRowsAndAverage) {
    const std::string csv = table1_csv(table1(4, 4.0), {.workers = 2});
    EXPECT_EQ(csv.rfind("# twograph " + std::string(kVersion) + " workers=2 seed=none", 0), 0U);
    EXPECT_NE(csv.find("n,j,norm,cmf,frequency\n"), std::string::npos);
    EXPECT_NE(csv.find("4,4,1.154701,1.285714,1\n"), std::string::npos);
    EXPECT_NE(csv.find("4,4,1.121195,1.723404,1\n"), std::string::npos);
    EXPECT_NE(csv.find("average"), std::string::npos);
}

TEST(Reports, ApplyReportRendersApf) {
    const auto s = fixtures::five_vertex_state(false);
    const auto ops = Operation::parse_list("H3");
    const auto out = apply_all(s, ops);
    const json j = json::parse(apply_report_json(out, ops));
    EXPECT_EQ(j["operations"], json::array({"H3"}));
    EXPECT_EQ(j["magnitude"], to_apf(out).magnitude_string());
    EXPECT_EQ(parse_state_json(j["state"].dump()).to_state(), out);
}

TEST(Reports, DensityTablesAgree) {
    const auto table = density_sweep({.n = 4, .densities = {0.5, 1.0}, .samples = 3, .seed = 21});
    const json j = json::parse(density_table_json(table));
    EXPECT_EQ(j["meta"]["seed"], 21);
    EXPECT_EQ(j["meta"]["prng"], "mt19937_64");
    ASSERT_EQ(j["rows"].size(), 2U);
    EXPECT_DOUBLE_EQ(j["rows"][1]["mean_par_ihn"].get<double>(), table.rows[1].mean_par_ihn);
    const std::string csv = density_table_csv(table);
    EXPECT_EQ(csv.rfind("# twograph", 0), 0U);
    EXPECT_NE(csv.find("seed=21"), std::string::npos);
}

TEST(Reports, ClassifyReportListsEveryClass) {
    const auto classes = enumerate_classes(5);
    const json j = json::parse(
        classify_report_json(classes, {table1(classes, 3.0), table1(classes, 4.0)}, {.workers = 1}));
    EXPECT_EQ(j["classes"].size(), 4U);
    EXPECT_EQ(j["tables"].size(), 2U);
}

}  // namespace
}  // namespace twograph
