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
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "twograph/gf2_graph.hpp"
#include "twograph/two_graph_state.hpp"

namespace twograph {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// One tensor factor of a transform in {I, H, N}^{⊗n}.
enum class Digit : std::uint8_t { kI, kH, kN };
using TernaryWord = std::vector<Digit>;

/// The traversal works in the alphabet (I, N, N²). N² equals H up to a
/// diagonal Clifford factor, which leaves |L| untouched, so power 2 reports as H.
Digit digit_of_power(std::uint8_t power);
std::string to_string(const TernaryWord &word);

/// How the per-transform weight 2^{(j-2)|L|/2} is formed.
enum class ExponentRule {
    kExact,
    /// 2^{⌊(j-2)|L|/2⌋}: integer-truncated exponent, only used to compare
    /// against tables that were produced that way.
    kTruncated,
};

using LCensus = std::map<int, std::uint64_t>;

struct SpectralReport {
    int n = 0;
    /// |L_U| → number of transforms U with that |L_U|.
    LCensus l_census;
    /// j → ‖ψ‖_{C_n, j}; j = +inf holds the L∞ norm.
    std::map<double, double> lj_norms;
    double cmf = 0.0;
    double par_ihn = 1.0;
    int sup_l = 0;
    unsigned workers = 1;

    [[nodiscard]] std::uint64_t transforms() const;
};

std::vector<double> default_js();

/// ‖ψ_U‖_j = 2^{(j-2)|L_U|/(2j)} for a state with |L_U| = l_size. Throws for j ≤ 0.
double state_lj_norm(int l_size, double j);

/// (3^{-n} Σ_L count_L · 2^{(j-2)L/2})^{1/j}; j = inf gives 2^{sup L / 2}.
double census_lj_norm(int n, const LCensus &census, double j, ExponentRule rule = ExponentRule::kExact);

SpectralReport report_from_census(int n, const LCensus &census, const std::vector<double> &js,
                                  unsigned workers = 1);

struct SweepOptions {
    std::vector<double> js = default_js();
    unsigned workers = 1;
};

/// |L_U| census over all 3ⁿ transforms, walked in reflected ternary Gray order
/// with one apply_n / apply_n_inv per step.
SpectralReport sweep(const GeneralisedTwoGraphState &s, const SweepOptions &options = {});

/// 1 / (‖ψ‖⁴_{C_n,4} − 1). Needs j = 4 in the report.
double cmf(const SpectralReport &report);
/// 2^{sup |L_U|}.
double par_ihn(const SpectralReport &report);

/// Receives the current word as powers of N (0, 1, 2) and the current state.
using GrayVisitor = std::function<void(std::span<const std::uint8_t>, const GeneralisedTwoGraphState &)>;

/// Visits every word of positions [first, n) in reflected ternary Gray order,
/// starting from `s` with those positions at power 0. Each step changes one
/// digit by ±1 and applies exactly one rewrite.
void gray_walk(const GeneralisedTwoGraphState &s, const GrayVisitor &visit, int first = 0);

/// From-scratch application: apply_n powers[k] times at each k, left to right.
GeneralisedTwoGraphState apply_word(GeneralisedTwoGraphState s, std::span<const std::uint8_t> powers);

/// Number of leading digits handed out as independent subtrees for `workers`.
int split_depth(int n, unsigned workers);

struct DensitySweepOptions {
    int n = 6;
    std::vector<double> densities;
    int samples = 100;
    std::uint64_t seed = 1;
    std::vector<double> js = default_js();
    unsigned workers = 1;
    /// Rejection-sampling attempts allowed per sample before giving up.
    int resample_cap = 1'000'000;
};

struct DensityRow {
    double density = 0.0;
    int samples = 0;
    double mean_par_ihn = 0.0;
    double var_par_ihn = 0.0;
    std::map<double, double> mean_lj_norms;
};

struct DensityTable {
    int n = 0;
    std::uint64_t seed = 0;
    std::string prng = "mt19937_64";
    unsigned workers = 1;
    std::vector<DensityRow> rows;
};

/// G(n, d) conditioned on connectivity, by rejection. Each pair (i < j) in
/// row-major order draws one 53-bit uniform from the engine. Throws
/// PreconditionError naming the density when `cap` attempts all fail.
Gf2Graph random_connected_graph(int n, double density, std::mt19937_64 &rng, int cap);

/// Mean PAR_IHN and mean L_j norms of random connected graph states per
/// density. Density k draws from an engine seeded with seed + k.
DensityTable density_sweep(const DensitySweepOptions &options);

}  // namespace twograph
