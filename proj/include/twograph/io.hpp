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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twograph/orbit.hpp"
#include "twograph/spectral.hpp"
#include "twograph/two_graph_state.hpp"

namespace twograph {

/// On-disk form of a state. Edges are (i, j) with i <= j; i == j is a loop.
struct StateDocument {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> r;
    std::vector<int> q;

    /// Throws ParseError for anything the state constructor would reject.
    [[nodiscard]] GeneralisedTwoGraphState to_state() const;
    static StateDocument from_state(const GeneralisedTwoGraphState &s);
    bool operator==(const StateDocument &) const = default;
};

/// Line format:
///
///     twograph-state 1
///     n 5
///     edges 0-2 0-3 1-1
///     r 2 3 4
///     q 2 3
///
/// '#' starts a comment. Duplicate edges and Q ⊄ R are errors.
StateDocument parse_state_text(std::string_view text);
std::string to_text(const StateDocument &doc);

/// {"format": "twograph-state", "version": 1, "n": .., "edges": [[i, j], ..], "r": [..], "q": [..]}.
StateDocument parse_state_json(std::string_view text);
std::string to_json(const StateDocument &doc);

/// Dispatches on the first non-blank character ('{' means JSON).
StateDocument parse_state_document(std::string_view text);
StateDocument load_state_file(const std::filesystem::path &path);

/// Provenance stamped on every report.
struct ReportMeta {
    unsigned workers = 1;
    std::optional<std::uint64_t> seed;
    std::string prng;
};

/// "1", "2.5", "inf".
std::string format_j(double j);
/// Inverse of format_j; also accepts "infinity". Throws ParseError.
double parse_j(std::string_view text);
std::vector<double> parse_j_list(std::string_view text);

std::string apply_report_json(const GeneralisedTwoGraphState &s, const std::vector<Operation> &ops);
std::string spectral_report_json(const SpectralReport &report, const ReportMeta &meta);
std::string table1_csv(const Table1 &table, const ReportMeta &meta);
std::string classify_report_json(const std::vector<OrbitClass> &classes, const std::vector<Table1> &tables,
                                 const ReportMeta &meta);
std::string density_table_json(const DensityTable &table);
std::string density_table_csv(const DensityTable &table);

}  // namespace twograph
