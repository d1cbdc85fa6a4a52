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

#include "twograph/gf2_graph.hpp"

#include <sstream>

namespace twograph {

namespace {

void require_same_size(const Gf2Graph &a, const Gf2Graph &b) {
    if (a.size() != b.size()) {
        throw PreconditionError("graph size mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
    }
}

void require_count(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw PreconditionError("vertex count " + std::to_string(n) + " outside [0, 64]");
    }
}

void require_within(int n, VertexSet s, const char *what) {
    if (!s.within(n)) {
        throw PreconditionError(std::string(what) + " " + s.to_string() + " not contained in {0.." +
                                std::to_string(n - 1) + "}");
    }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> members) {
    for (int v : members) {
        if (v < 0 || v >= kMaxVertices) {
            throw PreconditionError("vertex " + std::to_string(v) + " cannot be stored in a VertexSet");
        }
        insert(v);
    }
}

std::vector<int> VertexSet::to_vector() const { return {begin(), end()}; }

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : *this) {
        if (!first) {
            out += ',';
        }
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

Gf2Graph::Gf2Graph(int n) : n_(n) { require_count(n); }

Gf2Graph Gf2Graph::from_edges(int n, const std::vector<std::pair<int, int>> &edges) {
    Gf2Graph g(n);
    for (auto [i, j] : edges) {
        g.toggle_edge(i, j);
    }
    return g;
}

VertexSet Gf2Graph::loops() const {
    VertexSet out;
    for (int v = 0; v < n_; ++v) {
        if ((rows_[v] >> v) & 1U) {
            out.insert(v);
        }
    }
    return out;
}

void Gf2Graph::toggle_edge(int i, int j) {
    check(i);
    check(j);
    rows_[i] ^= std::uint64_t{1} << j;
    if (i != j) {
        rows_[j] ^= std::uint64_t{1} << i;
    }
}

void Gf2Graph::set_edge(int i, int j, bool present) {
    if (has_edge(i, j) != present) {
        toggle_edge(i, j);
    }
}

void Gf2Graph::toggle_row(int v, VertexSet bits) {
    check(v);
    if (!bits.within(n_)) {
        throw PreconditionError("row update " + bits.to_string() + " out of range");
    }
    rows_[v] ^= bits.mask();
    for (int u : bits - VertexSet::single(v)) {
        rows_[u] ^= std::uint64_t{1} << v;
    }
}

Gf2Graph Gf2Graph::strip_loops() const {
    Gf2Graph out = *this;
    for (int v = 0; v < n_; ++v) {
        out.rows_[v] &= ~(std::uint64_t{1} << v);
    }
    return out;
}

Gf2Graph Gf2Graph::induced(VertexSet s) const {
    Gf2Graph out(n_);
    for (int v : s & VertexSet::range(n_)) {
        out.rows_[v] = rows_[v] & s.mask();
    }
    return out;
}

bool Gf2Graph::is_connected() const {
    if (n_ <= 1) {
        return true;
    }
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (int v : VertexSet(frontier)) {
            next |= rows_[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == VertexSet::range(n_).mask();
}

int Gf2Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) {
        total += std::popcount(rows_[v] >> v);
    }
    return total;
}

std::vector<std::pair<int, int>> Gf2Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i) {
        for (int j = i; j < n_; ++j) {
            if ((rows_[i] >> j) & 1U) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

std::string Gf2Graph::to_string() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    auto emit = [&](int i, int j) {
        if (!first) {
            out << ',';
        }
        out << i << j;
        first = false;
    };
    for (auto [i, j] : edges()) {
        if (i != j) {
            emit(i, j);
        }
    }
    for (int v : loops()) {
        emit(v, v);
    }
    out << '}';
    return out.str();
}

Gf2Graph &Gf2Graph::operator+=(const Gf2Graph &other) {
    require_same_size(*this, other);
    for (int v = 0; v < n_; ++v) {
        rows_[v] ^= other.rows_[v];
    }
    return *this;
}

bool Gf2Graph::operator==(const Gf2Graph &other) const {
    if (n_ != other.n_) {
        return false;
    }
    for (int v = 0; v < n_; ++v) {
        if (rows_[v] != other.rows_[v]) {
            return false;
        }
    }
    return true;
}

Gf2Graph graph_add(const Gf2Graph &a, const Gf2Graph &b) {
    require_same_size(a, b);
    return a + b;
}

VertexSet open_neighborhood(const Gf2Graph &g, int v) { return g.row(v) - VertexSet::single(v); }

VertexSet closed_ball(const Gf2Graph &g, int v) { return g.row(v) | VertexSet::single(v); }

Gf2Graph bipartite_k(int n, VertexSet a, VertexSet b) {
    Gf2Graph out(n);
    require_within(n, a, "set");
    require_within(n, b, "set");
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            bool hit;
            if (i == j) {
                hit = a.contains(i) && b.contains(i);
            } else {
                hit = (a.contains(i) && !b.contains(i) && b.contains(j)) ||
                      (a.contains(j) && !b.contains(j) && b.contains(i));
            }
            if (hit) {
                out.toggle_edge(i, j);
            }
        }
    }
    return out;
}

Gf2Graph pairing_k(int n, VertexSet a, VertexSet b) {
    Gf2Graph out(n);
    require_within(n, a, "set");
    require_within(n, b, "set");
    for (int i = 0; i < n; ++i) {
        // Row i of a b^T + b a^T; its diagonal bit is always 0.
        std::uint64_t r = 0;
        if (a.contains(i)) {
            r ^= b.mask();
        }
        if (b.contains(i)) {
            r ^= a.mask();
        }
        if (a.contains(i) && b.contains(i)) {
            r |= std::uint64_t{1} << i;
        }
        out.toggle_row(i, VertexSet(r) - VertexSet::range(i));
    }
    return out;
}

Gf2Graph delta(int n, VertexSet s) {
    Gf2Graph out(n);
    require_within(n, s, "set");
    for (int v : s) {
        out.toggle_loop(v);
    }
    return out;
}

Gf2Graph complete_graph(int n, VertexSet s) {
    Gf2Graph out(n);
    require_within(n, s, "set");
    for (int v : s) {
        out.toggle_row(v, s - VertexSet::range(v + 1));
    }
    return out;
}

Gf2Graph lc(const Gf2Graph &g, int v) {
    if (!g.is_simple()) {
        throw PreconditionError("lc requires a simple graph; loops at " + g.loops().to_string());
    }
    return g + complete_graph(g.size(), open_neighborhood(g, v));
}

Gf2Graph elc_loop(const Gf2Graph &g, int v, int w) {
    if (v == w) {
        throw PreconditionError("elc_loop needs two distinct vertices, got " + std::to_string(v) + " twice");
    }
    if (!g.has_edge(v, w)) {
        throw PreconditionError("elc_loop: " + std::to_string(v) + std::to_string(w) + " is not an edge");
    }
    const int n = g.size();
    const VertexSet bv = closed_ball(g, v);
    const VertexSet bw = closed_ball(g, w);
    Gf2Graph out = g + pairing_k(n, bv, bw) + delta(n, VertexSet::single(v) | VertexSet::single(w));
    if (g.has_loop(v)) {
        out += delta(n, bw);
    }
    if (g.has_loop(w)) {
        out += delta(n, bv);
    }
    return out;
}

}  // namespace twograph
