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

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "twograph/errors.hpp"

namespace twograph {

/// Largest vertex count supported by the one-word-per-row representation.
inline constexpr int kMaxVertices = 64;

/// A subset of {0..63} stored as a bit mask; bit v set means v is a member.
class VertexSet {
  public:
    class iterator {
      public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int *;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator &operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator &) const = default;

      private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}
    VertexSet(std::initializer_list<int> members);

    /// {0, ..., n-1}.
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    [[nodiscard]] constexpr std::uint64_t mask() const { return mask_; }
    [[nodiscard]] constexpr bool contains(int v) const { return v >= 0 && v < 64 && ((mask_ >> v) & 1U); }
    [[nodiscard]] constexpr int size() const { return std::popcount(mask_); }
    [[nodiscard]] constexpr bool empty() const { return mask_ == 0; }
    /// Smallest member, or -1 when empty.
    [[nodiscard]] constexpr int min() const { return mask_ == 0 ? -1 : std::countr_zero(mask_); }
    [[nodiscard]] constexpr bool subset_of(VertexSet other) const { return (mask_ & ~other.mask_) == 0; }
    /// True iff every member is below n.
    [[nodiscard]] constexpr bool within(int n) const { return subset_of(range(n)); }

    constexpr void insert(int v) { mask_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { mask_ &= ~(std::uint64_t{1} << v); }
    constexpr void toggle(int v) { mask_ ^= std::uint64_t{1} << v; }

    [[nodiscard]] constexpr iterator begin() const { return iterator(mask_); }
    [[nodiscard]] constexpr iterator end() const { return iterator(0); }

    [[nodiscard]] std::vector<int> to_vector() const;
    /// "{0,2,3}".
    [[nodiscard]] std::string to_string() const;

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(mask_ | o.mask_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(mask_ & o.mask_); }
    /// Symmetric difference.
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(mask_ ^ o.mask_); }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(mask_ & ~o.mask_); }
    constexpr VertexSet &operator|=(VertexSet o) {
        mask_ |= o.mask_;
        return *this;
    }
    constexpr VertexSet &operator&=(VertexSet o) {
        mask_ &= o.mask_;
        return *this;
    }
    constexpr VertexSet &operator^=(VertexSet o) {
        mask_ ^= o.mask_;
        return *this;
    }
    constexpr VertexSet &operator-=(VertexSet o) {
        mask_ &= ~o.mask_;
        return *this;
    }
    constexpr bool operator==(const VertexSet &) const = default;

  private:
    std::uint64_t mask_ = 0;
};

/// Undirected graph over GF(2) on at most 64 vertices; the diagonal of the
/// adjacency matrix holds loops. Row v is a bit mask of the neighbours of v,
/// including v itself when v carries a loop. The matrix is kept symmetric.
class Gf2Graph {
  public:
    Gf2Graph() = default;
    explicit Gf2Graph(int n);

    /// Builds a graph from (i, j) pairs; i == j adds a loop. Pairs are toggled,
    /// so a repeated pair cancels.
    static Gf2Graph from_edges(int n, const std::vector<std::pair<int, int>> &edges);

    [[nodiscard]] int size() const { return n_; }

    [[nodiscard]] bool has_edge(int i, int j) const { return (rows_[check(i)] >> check(j)) & 1U; }
    [[nodiscard]] bool has_loop(int v) const { return has_edge(v, v); }

    /// Adjacency row of v, loop bit included.
    [[nodiscard]] VertexSet row(int v) const { return VertexSet(rows_[check(v)]); }
    [[nodiscard]] VertexSet loops() const;

    void toggle_edge(int i, int j);
    void set_edge(int i, int j, bool present);
    void toggle_loop(int v) { toggle_edge(v, v); }
    /// XORs `bits` into row v and the matching column entries.
    void toggle_row(int v, VertexSet bits);

    [[nodiscard]] bool is_simple() const { return loops().empty(); }
    [[nodiscard]] Gf2Graph strip_loops() const;
    /// Induced subgraph on s, loops included; other vertices become isolated.
    [[nodiscard]] Gf2Graph induced(VertexSet s) const;
    [[nodiscard]] bool is_connected() const;
    [[nodiscard]] int edge_count() const;

    /// All (i, j) with i <= j and adj[i][j] = 1, sorted.
    [[nodiscard]] std::vector<std::pair<int, int>> edges() const;
    /// "{01,12,11}" style listing, loops last.
    [[nodiscard]] std::string to_string() const;

    Gf2Graph &operator+=(const Gf2Graph &other);
    friend Gf2Graph operator+(Gf2Graph a, const Gf2Graph &b) { return a += b; }
    bool operator==(const Gf2Graph &other) const;

  private:
    int check(int v) const {
        if (v < 0 || v >= n_) {
            throw PreconditionError("vertex " + std::to_string(v) + " out of range for graph on " +
                                    std::to_string(n_) + " vertices");
        }
        return v;
    }

    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> rows_{};
};

/// Entrywise XOR of adjacency matrices. Throws on size mismatch.
Gf2Graph graph_add(const Gf2Graph &a, const Gf2Graph &b);

/// Neighbours of v other than v itself.
VertexSet open_neighborhood(const Gf2Graph &g, int v);
/// Open neighbourhood plus v, whether or not v has a loop.
VertexSet closed_ball(const Gf2Graph &g, int v);

/// adj[i][j] = 1 iff (i in a\b and j in b) or (j in a\b and i in b), plus a loop
/// at each vertex of a n b.
Gf2Graph bipartite_k(int n, VertexSet a, VertexSet b);

/// Symmetric pairing graph: off-diagonal adj[i][j] = a_i b_j + a_j b_i (mod 2),
/// loops on a n b. Agrees with bipartite_k whenever a and b are disjoint; unlike
/// it, also joins b\a to a n b. This is the term that makes the loop-aware pivot
/// exchange the neighbourhoods of the pivot pair.
Gf2Graph pairing_k(int n, VertexSet a, VertexSet b);

/// Loops exactly on s.
Gf2Graph delta(int n, VertexSet s);

/// All edges vw with v < w in s; no loops.
Gf2Graph complete_graph(int n, VertexSet s);

/// Classical local complementation at v. Requires a simple graph.
Gf2Graph lc(const Gf2Graph &g, int v);

/// Loop-aware edge local complementation (pivot) on the edge vw:
/// G + K(B_v, B_w) + D{v,w} + [v loop] D(B_w) + [w loop] D(B_v),
/// with K the pairing graph. Requires v != w and vw an edge.
Gf2Graph elc_loop(const Gf2Graph &g, int v, int w);

}  // namespace twograph
