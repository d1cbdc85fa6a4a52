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

#include "twograph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace twograph {

Digit digit_of_power(std::uint8_t power) {
    switch (power) {
    case 0:
        return Digit::kI;
    case 1:
        return Digit::kN;
    case 2:
        return Digit::kH;
    default:
        throw PreconditionError("N power " + std::to_string(power) + " outside {0,1,2}");
    }
}

std::string to_string(const TernaryWord &word) {
    std::string out;
    for (Digit d : word) {
        out += d == Digit::kI ? 'I' : d == Digit::kH ? 'H' : 'N';
    }
    return out;
}

std::uint64_t SpectralReport::transforms() const {
    std::uint64_t total = 0;
    for (const auto &[l, count] : l_census) {
        total += count;
    }
    return total;
}

std::vector<double> default_js() { return {1.0, 2.0, 3.0, 4.0, 6.0, 8.0, kInfinity}; }

double state_lj_norm(int l_size, double j) {
    if (!(j > 0.0)) {
        throw PreconditionError("L_j norm needs j > 0, got " + std::to_string(j));
    }
    if (std::isinf(j)) {
        return std::pow(2.0, l_size / 2.0);
    }
    return std::pow(2.0, (j - 2.0) * l_size / (2.0 * j));
}

double census_lj_norm(int n, const LCensus &census, double j, ExponentRule rule) {
    if (!(j > 0.0)) {
        throw PreconditionError("L_j norm needs j > 0, got " + std::to_string(j));
    }
    if (census.empty()) {
        throw PreconditionError("empty census");
    }
    if (std::isinf(j)) {
        return std::pow(2.0, census.rbegin()->first / 2.0);
    }
    double total = 0.0;
    for (const auto &[l, count] : census) {
        double exponent = (j - 2.0) * l / 2.0;
        if (rule == ExponentRule::kTruncated) {
            exponent = std::floor(exponent);
        }
        total += static_cast<double>(count) * std::pow(2.0, exponent);
    }
    return std::pow(total / std::pow(3.0, n), 1.0 / j);
}

SpectralReport report_from_census(int n, const LCensus &census, const std::vector<double> &js, unsigned workers) {
    SpectralReport report;
    report.n = n;
    report.l_census = census;
    report.workers = workers;
    for (double j : js) {
        report.lj_norms[j] = census_lj_norm(n, census, j);
    }
    report.sup_l = census.empty() ? 0 : census.rbegin()->first;
    report.par_ihn = std::pow(2.0, report.sup_l);
    const double norm4 = census_lj_norm(n, census, 4.0);
    const double excess = std::pow(norm4, 4.0) - 1.0;
    report.cmf = excess > 0.0 ? 1.0 / excess : kInfinity;
    return report;
}

double cmf(const SpectralReport &report) {
    auto it = report.lj_norms.find(4.0);
    if (it == report.lj_norms.end()) {
        throw PreconditionError("CMF needs the j=4 norm in the report");
    }
    const double excess = std::pow(it->second, 4.0) - 1.0;
    if (!(excess > 0.0)) {
        throw InvariantError("CMF undefined: L_4 norm is " + std::to_string(it->second));
    }
    return 1.0 / excess;
}

double par_ihn(const SpectralReport &report) {
    if (report.l_census.empty()) {
        throw PreconditionError("PAR_IHN needs a nonempty census");
    }
    return std::pow(2.0, report.l_census.rbegin()->first);
}

namespace {

struct Walker {
    const GrayVisitor &visit;
    std::vector<std::uint8_t> word;
    std::vector<int> direction;
    GeneralisedTwoGraphState state;

    void walk(int k) {
        const int n = static_cast<int>(word.size());
        if (k == n) {
            visit(word, state);
            return;
        }
        for (int step = 0; step < 3; ++step) {
            walk(k + 1);
            if (step == 2) {
                break;
            }
            if (direction[k] > 0) {
                state = apply_n(state, k);
                ++word[k];
            } else {
                state = apply_n_inv(state, k);
                --word[k];
            }
        }
        direction[k] = -direction[k];
    }
};

}  // namespace

void gray_walk(const GeneralisedTwoGraphState &s, const GrayVisitor &visit, int first) {
    const int n = s.size();
    if (first < 0 || first > n) {
        throw PreconditionError("gray_walk start " + std::to_string(first) + " outside [0, n]");
    }
    Walker w{visit, std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0),
             std::vector<int>(static_cast<std::size_t>(n), 1), s};
    w.walk(first);
}

GeneralisedTwoGraphState apply_word(GeneralisedTwoGraphState s, std::span<const std::uint8_t> powers) {
    if (static_cast<int>(powers.size()) > s.size()) {
        throw PreconditionError("word longer than the state");
    }
    for (std::size_t k = 0; k < powers.size(); ++k) {
        if (powers[k] > 2) {
            throw PreconditionError("N power " + std::to_string(powers[k]) + " outside {0,1,2}");
        }
        for (int t = 0; t < powers[k]; ++t) {
            s = apply_n(s, static_cast<int>(k));
        }
    }
    return s;
}

int split_depth(int n, unsigned workers) {
    int depth = 0;
    std::uint64_t subtrees = 1;
    while (subtrees < workers && depth < n) {
        subtrees *= 3;
        ++depth;
    }
    return depth;
}

SpectralReport sweep(const GeneralisedTwoGraphState &s, const SweepOptions &options) {
    const int n = s.size();
    if (n == 0) {
        throw PreconditionError("sweep needs at least one qubit");
    }
    const unsigned workers = std::max(1U, options.workers);
    const int depth = split_depth(n, workers);
    std::uint64_t prefixes = 1;
    for (int k = 0; k < depth; ++k) {
        prefixes *= 3;
    }

    std::vector<LCensus> partial(workers);
    auto run = [&](unsigned id) {
        LCensus &census = partial[id];
        const GrayVisitor count = [&census](std::span<const std::uint8_t>, const GeneralisedTwoGraphState &leaf) {
            ++census[leaf.l().size()];
        };
        for (std::uint64_t p = id; p < prefixes; p += workers) {
            std::vector<std::uint8_t> powers(static_cast<std::size_t>(depth));
            std::uint64_t rest = p;
            for (int k = depth - 1; k >= 0; --k) {
                powers[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(rest % 3);
                rest /= 3;
            }
            gray_walk(apply_word(s, powers), count, depth);
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned id = 0; id < workers; ++id) {
            pool.emplace_back(run, id);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    LCensus census;
    for (const auto &c : partial) {
        for (const auto &[l, count] : c) {
            census[l] += count;
        }
    }
    return report_from_census(n, census, options.js, workers);
}

Gf2Graph random_connected_graph(int n, double density, std::mt19937_64 &rng, int cap) {
    if (!(density > 0.0 && density <= 1.0)) {
        throw PreconditionError("density " + std::to_string(density) + " outside (0, 1]");
    }
    if (n < 1 || n > kMaxVertices) {
        throw PreconditionError("random graph size " + std::to_string(n) + " outside [1, 64]");
    }
    for (int attempt = 0; attempt < cap; ++attempt) {
        Gf2Graph g(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (u < density) {
                    g.toggle_edge(i, j);
                }
            }
        }
        if (g.is_connected()) {
            return g;
        }
    }
    throw PreconditionError("density " + std::to_string(density) + " gave no connected graph on " +
                            std::to_string(n) + " vertices in " + std::to_string(cap) + " attempts");
}

DensityTable density_sweep(const DensitySweepOptions &options) {
    if (options.samples < 1) {
        throw PreconditionError("density sweep needs at least one sample");
    }
    DensityTable table;
    table.n = options.n;
    table.seed = options.seed;
    table.workers = std::max(1U, options.workers);
    SweepOptions sweep_options{options.js, table.workers};
    for (std::size_t k = 0; k < options.densities.size(); ++k) {
        const double d = options.densities[k];
        std::mt19937_64 rng(options.seed + k);
        DensityRow row;
        row.density = d;
        row.samples = options.samples;
        std::vector<double> pars;
        pars.reserve(static_cast<std::size_t>(options.samples));
        for (int t = 0; t < options.samples; ++t) {
            const Gf2Graph g = random_connected_graph(options.n, d, rng, options.resample_cap);
            const SpectralReport report = sweep(from_graph_state(g), sweep_options);
            pars.push_back(report.par_ihn);
            for (const auto &[j, value] : report.lj_norms) {
                row.mean_lj_norms[j] += value / options.samples;
            }
        }
        double mean = 0.0;
        for (double p : pars) {
            mean += p;
        }
        mean /= static_cast<double>(pars.size());
        double var = 0.0;
        for (double p : pars) {
            var += (p - mean) * (p - mean);
        }
        row.mean_par_ihn = mean;
        row.var_par_ihn = pars.size() > 1 ? var / static_cast<double>(pars.size() - 1) : 0.0;
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace twograph
