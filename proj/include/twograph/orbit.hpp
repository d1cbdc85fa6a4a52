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
#include <optional>
#include <string>
#include <vector>

#include "twograph/gf2_graph.hpp"
#include "twograph/spectral.hpp"

namespace twograph {

inline constexpr int kMaxClassifyVertices = 7;
inline constexpr int kMaxOrbitSearchVertices = 12;

/// Upper triangle of a simple graph read row-major, pair (0,1) as the most
/// significant bit. Smaller code = lexicographically smaller adjacency string.
std::uint64_t adjacency_code(const Gf2Graph &g);
Gf2Graph graph_from_code(int n, std::uint64_t code);

/// Minimum adjacency_code over all vertex permutations (n ≤ 8).
std::uint64_t canonical_code(const Gf2Graph &g);
Gf2Graph canonical_form(const Gf2Graph &g);

/// One representative per isomorphism class of connected simple graphs.
std::vector<Gf2Graph> connected_graphs_up_to_isomorphism(int n);

/// Canonical forms of every graph reachable by classical LC, sorted by code.
std::vector<Gf2Graph> lc_orbit_up_to_isomorphism(const Gf2Graph &g);

struct OrbitClass {
    /// Smallest canonical form in the orbit.
    Gf2Graph representative;
    /// Isomorphism classes in the orbit.
    int members = 0;
    SpectralReport spectra;
};

/// LC classes of connected graphs on n vertices (1 ≤ n ≤ 7), sorted by
/// representative code.
std::vector<OrbitClass> enumerate_classes(int n, const std::vector<double> &js = default_js(),
                                          unsigned workers = 1);

struct Table1Row {
    double norm = 0.0;
    std::optional<double> cmf;
    int frequency = 0;
};

struct Table1 {
    int n = 0;
    double j = 0.0;
    /// Distinct norms, descending.
    std::vector<Table1Row> rows;
    /// Class-weighted mean of the norm.
    double average = 0.0;
    int classes = 0;
};

/// Groups class norms at j (equal within 1e-9). The CMF column is filled for j = 4.
Table1 table1(const std::vector<OrbitClass> &classes, double j, ExponentRule rule = ExponentRule::kExact);
Table1 table1(int n, double j, ExponentRule rule = ExponentRule::kExact);

/// Exhaustive search; simple graphs only.
int max_independent_set(const Gf2Graph &g);
/// Largest independent set over every labelled graph in the LC orbit of g
/// (connected, simple, n ≤ 12).
int max_independent_set_over_orbit(const Gf2Graph &g);

}  // namespace twograph
