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

#include "twograph/orbit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace twograph {

namespace {

constexpr int kMaxCanonicalVertices = 8;
constexpr std::size_t kMaxLabelledOrbit = std::size_t{1} << 22;

void require_simple(const Gf2Graph &g, const char *what) {
    if (!g.is_simple()) {
        throw PreconditionError(std::string(what) + " needs a simple graph");
    }
}

int pair_count(int n) { return n * (n - 1) / 2; }

/// Permutations of {0..n-1}, computed once per n.
const std::vector<std::vector<int>> &permutations(int n) {
    static std::vector<std::vector<std::vector<int>>> cache(kMaxCanonicalVertices + 1);
    static std::once_flag flags[kMaxCanonicalVertices + 1];
    std::call_once(flags[n], [n] {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        do {
            cache[static_cast<std::size_t>(n)].push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    });
    return cache[static_cast<std::size_t>(n)];
}

}  // namespace

std::uint64_t adjacency_code(const Gf2Graph &g) {
    require_simple(g, "adjacency_code");
    const int n = g.size();
    if (pair_count(n) > 64) {
        throw PreconditionError("adjacency code needs n <= 11");
    }
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            code = (code << 1) | static_cast<std::uint64_t>(g.has_edge(i, j));
        }
    }
    return code;
}

Gf2Graph graph_from_code(int n, std::uint64_t code) {
    if (n < 0 || pair_count(n) > 64) {
        throw PreconditionError("graph_from_code needs 0 <= n <= 11");
    }
    Gf2Graph g(n);
    int bit = pair_count(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            --bit;
            if ((code >> bit) & 1U) {
                g.toggle_edge(i, j);
            }
        }
    }
    return g;
}

std::uint64_t canonical_code(const Gf2Graph &g) {
    require_simple(g, "canonical_code");
    const int n = g.size();
    if (n > kMaxCanonicalVertices) {
        throw PreconditionError("canonical_code supports n <= " + std::to_string(kMaxCanonicalVertices));
    }
    std::array<std::uint64_t, kMaxCanonicalVertices> rows{};
    for (int v = 0; v < n; ++v) {
        rows[static_cast<std::size_t>(v)] = g.row(v).mask();
    }
    const int total = pair_count(n);
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto &p : permutations(n)) {
        // Position i of the relabelled graph holds original vertex p[i].
        std::uint64_t code = 0;
        int emitted = 0;
        bool pruned = false;
        for (int i = 0; i < n && !pruned; ++i) {
            const std::uint64_t row = rows[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
            for (int j = i + 1; j < n; ++j) {
                code = (code << 1) | ((row >> p[static_cast<std::size_t>(j)]) & 1U);
                ++emitted;
            }
            pruned = emitted < total && code > (best >> (total - emitted));
        }
        if (!pruned) {
            best = std::min(best, code);
        }
    }
    return best;
}

Gf2Graph canonical_form(const Gf2Graph &g) { return graph_from_code(g.size(), canonical_code(g)); }

std::vector<Gf2Graph> connected_graphs_up_to_isomorphism(int n) {
    if (n < 1 || n > kMaxCanonicalVertices) {
        throw PreconditionError("graph enumeration supports 1 <= n <= " + std::to_string(kMaxCanonicalVertices));
    }
    // Every connected graph has a vertex whose removal leaves it connected.
    std::set<std::uint64_t> level{0};
    for (int size = 2; size <= n; ++size) {
        std::set<std::uint64_t> next;
        for (std::uint64_t code : level) {
            const Gf2Graph base = graph_from_code(size - 1, code);
            for (std::uint64_t nbrs = 1; nbrs < (std::uint64_t{1} << (size - 1)); ++nbrs) {
                Gf2Graph g(size);
                for (auto [i, j] : base.edges()) {
                    g.toggle_edge(i, j);
                }
                g.toggle_row(size - 1, VertexSet(nbrs));
                next.insert(canonical_code(g));
            }
        }
        level = std::move(next);
    }
    std::vector<Gf2Graph> out;
    out.reserve(level.size());
    for (std::uint64_t code : level) {
        out.push_back(graph_from_code(n, code));
    }
    return out;
}

namespace {

std::set<std::uint64_t> orbit_codes(const Gf2Graph &g) {
    const int n = g.size();
    std::set<std::uint64_t> seen{canonical_code(g)};
    std::deque<std::uint64_t> queue{*seen.begin()};
    while (!queue.empty()) {
        const Gf2Graph cur = graph_from_code(n, queue.front());
        queue.pop_front();
        for (int v = 0; v < n; ++v) {
            const std::uint64_t code = canonical_code(lc(cur, v));
            if (seen.insert(code).second) {
                queue.push_back(code);
            }
        }
    }
    return seen;
}

}  // namespace

std::vector<Gf2Graph> lc_orbit_up_to_isomorphism(const Gf2Graph &g) {
    require_simple(g, "lc orbit");
    std::vector<Gf2Graph> out;
    for (std::uint64_t code : orbit_codes(g)) {
        out.push_back(graph_from_code(g.size(), code));
    }
    return out;
}

std::vector<OrbitClass> enumerate_classes(int n, const std::vector<double> &js, unsigned workers) {
    if (n < 1 || n > kMaxClassifyVertices) {
        throw PreconditionError("classification supports 1 <= n <= " + std::to_string(kMaxClassifyVertices) +
                                ", got " + std::to_string(n));
    }
    std::set<std::uint64_t> assigned;
    std::vector<OrbitClass> classes;
    for (const Gf2Graph &g : connected_graphs_up_to_isomorphism(n)) {
        const std::uint64_t code = canonical_code(g);
        if (assigned.count(code)) {
            continue;
        }
        const std::set<std::uint64_t> orbit = orbit_codes(g);
        assigned.insert(orbit.begin(), orbit.end());
        OrbitClass c;
        c.representative = graph_from_code(n, *orbit.begin());
        c.members = static_cast<int>(orbit.size());
        classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(), [](const OrbitClass &a, const OrbitClass &b) {
        return adjacency_code(a.representative) < adjacency_code(b.representative);
    });

    workers = std::max(1U, workers);
    auto run = [&](unsigned id) {
        for (std::size_t k = id; k < classes.size(); k += workers) {
            classes[k].spectra = sweep(from_graph_state(classes[k].representative), {js, 1});
            classes[k].spectra.workers = workers;
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < workers; ++id) {
            pool.emplace_back(run, id);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    return classes;
}

Table1 table1(const std::vector<OrbitClass> &classes, double j, ExponentRule rule) {
    Table1 t;
    t.j = j;
    t.classes = static_cast<int>(classes.size());
    std::vector<double> norms;
    for (const auto &c : classes) {
        t.n = c.spectra.n;
        norms.push_back(census_lj_norm(c.spectra.n, c.spectra.l_census, j, rule));
    }
    std::sort(norms.begin(), norms.end(), std::greater<>());
    double total = 0.0;
    for (double v : norms) {
        total += v;
        if (!t.rows.empty() && std::abs(t.rows.back().norm - v) <= 1e-9) {
            ++t.rows.back().frequency;
            continue;
        }
        Table1Row row;
        row.norm = v;
        row.frequency = 1;
        if (j == 4.0) {
            row.cmf = 1.0 / (std::pow(v, 4.0) - 1.0);
        }
        t.rows.push_back(row);
    }
    t.average = norms.empty() ? 0.0 : total / static_cast<double>(norms.size());
    return t;
}

Table1 table1(int n, double j, ExponentRule rule) { return table1(enumerate_classes(n, {j}), j, rule); }

int max_independent_set(const Gf2Graph &g) {
    require_simple(g, "max_independent_set");
    // Branch on the smallest candidate: drop it, or take it and drop its ball.
    auto best = [&](auto &&self, VertexSet cands) -> int {
        if (cands.empty()) {
            return 0;
        }
        const int v = cands.min();
        const VertexSet rest = cands - VertexSet::single(v);
        const VertexSet nv = open_neighborhood(g, v) & rest;
        if (nv.empty()) {
            return 1 + self(self, rest);
        }
        return std::max(self(self, rest), 1 + self(self, rest - nv));
    };
    return best(best, VertexSet::range(g.size()));
}

int max_independent_set_over_orbit(const Gf2Graph &g) {
    require_simple(g, "max_independent_set_over_orbit");
    if (g.size() > kMaxOrbitSearchVertices) {
        throw PreconditionError("orbit search supports n <= " + std::to_string(kMaxOrbitSearchVertices));
    }
    if (!g.is_connected()) {
        throw PreconditionError("orbit search needs a connected graph");
    }
    const int n = g.size();
    // Labelled orbit, keyed by the upper-triangle rows.
    auto key = [n](const Gf2Graph &h) {
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            rows[static_cast<std::size_t>(v)] = h.row(v).mask();
        }
        return rows;
    };
    std::set<std::vector<std::uint64_t>> seen{key(g)};
    std::deque<Gf2Graph> queue{g};
    int best = 0;
    while (!queue.empty()) {
        const Gf2Graph cur = queue.front();
        queue.pop_front();
        best = std::max(best, max_independent_set(cur));
        for (int v = 0; v < n; ++v) {
            Gf2Graph next = lc(cur, v);
            if (seen.insert(key(next)).second) {
                if (seen.size() > kMaxLabelledOrbit) {
                    throw PreconditionError("LC orbit exceeds " + std::to_string(kMaxLabelledOrbit) + " graphs");
                }
                queue.push_back(std::move(next));
            }
        }
    }
    return best;
}

}  // namespace twograph
