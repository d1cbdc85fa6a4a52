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

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "twograph/two_graph_state.hpp"

namespace twograph::fixtures {

/// Uniformly random valid triple: random R, random edges except inside L,
/// random loops, random Q ⊆ R.
inline GeneralisedTwoGraphState random_state(int n, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(0.5);
    VertexSet r;
    for (int v = 0; v < n; ++v) {
        if (coin(rng)) {
            r.insert(v);
        }
    }
    Gf2Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const bool both_left = i != j && !r.contains(i) && !r.contains(j);
            if (!both_left && coin(rng)) {
                g.toggle_edge(i, j);
            }
        }
    }
    VertexSet q;
    for (int v : r) {
        if (coin(rng)) {
            q.insert(v);
        }
    }
    return {g, r, q};
}

inline Gf2Graph random_simple_graph(int n, std::mt19937_64 &rng, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    Gf2Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                g.toggle_edge(i, j);
            }
        }
    }
    return g;
}

/// Amplitudes straight from the defining formula, unnormalised, big-endian.
/// Independent of to_apf and of the dense module.
inline std::vector<std::complex<double>> formula_amplitudes(const GeneralisedTwoGraphState &s) {
    const int n = s.size();
    const Gf2Graph &g = s.graph();
    std::vector<std::complex<double>> out(std::size_t{1} << n);
    const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (std::size_t index = 0; index < out.size(); ++index) {
        auto x = [&](int j) { return static_cast<int>((index >> (n - 1 - j)) & 1U); };
        int m = 1;
        for (int v = 0; v < n; ++v) {
            if (s.r().contains(v)) {
                continue;
            }
            int f = g.has_edge(v, v) + 1 + x(v);
            for (int j = 0; j < n; ++j) {
                if (j != v && g.has_edge(v, j)) {
                    f += x(j);
                }
            }
            m *= f % 2;
        }
        int p = s.phase();
        for (int i = 0; i < n; ++i) {
            if (!s.r().contains(i)) {
                continue;
            }
            for (int j = i + 1; j < n; ++j) {
                if (s.r().contains(j) && g.has_edge(i, j)) {
                    p += 2 * x(i) * x(j);
                }
            }
            p += (2 * g.has_edge(i, i) + s.q().contains(i)) * x(i);
        }
        out[index] = static_cast<double>(m) * ipow[p & 3];
    }
    return out;
}

/// 2×2 matrix applied at tensor position v (x_v is bit n-1-v of the index).
inline std::vector<std::complex<double>> apply_matrix(const std::vector<std::complex<double>> &psi, int n, int v,
                                                      const std::complex<double> (&u)[2][2]) {
    std::vector<std::complex<double>> out(psi.size());
    const std::size_t bit = std::size_t{1} << (n - 1 - v);
    for (std::size_t k = 0; k < psi.size(); ++k) {
        const int b = (k & bit) ? 1 : 0;
        const std::size_t k0 = k & ~bit;
        out[k] = u[b][0] * psi[k0] + u[b][1] * psi[k0 | bit];
    }
    return out;
}

/// a = c·b for one c ≠ 0, chosen at the largest |b| entry.
inline bool proportional(const std::vector<std::complex<double>> &a, const std::vector<std::complex<double>> &b,
                         double tol = 1e-9) {
    std::size_t k = 0;
    for (std::size_t t = 0; t < b.size(); ++t) {
        if (std::abs(b[t]) > std::abs(b[k])) {
            k = t;
        }
    }
    if (std::abs(b[k]) < tol) {
        return false;
    }
    const auto c = a[k] / b[k];
    if (std::abs(c) < tol) {
        return false;
    }
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (std::abs(a[t] - c * b[t]) > tol * (1.0 + std::abs(c))) {
            return false;
        }
    }
    return true;
}

inline bool identical(const std::vector<std::complex<double>> &a, const std::vector<std::complex<double>> &b,
                      double tol = 1e-9) {
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (std::abs(a[t] - b[t]) > tol) {
            return false;
        }
    }
    return a.size() == b.size();
}

/// The n=5 state used throughout the fixtures.
inline GeneralisedTwoGraphState five_vertex_state(bool with_q) {
    Gf2Graph g = Gf2Graph::from_edges(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {1, 1}, {3, 3}});
    return {g, VertexSet{2, 3, 4}, with_q ? VertexSet{2, 3} : VertexSet{}};
}

}  // namespace twograph::fixtures
