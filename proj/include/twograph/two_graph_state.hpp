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
#include <string_view>
#include <utility>
#include <vector>

#include "twograph/gf2_graph.hpp"

namespace twograph {

/// Stabilizer state encoded by a graph with loops G, a vertex set R and a set
/// Q ⊆ R. With L = V \ R, the amplitude at x is
///
///     i^phase · Π_{v∈L} [loop_v + 1 + x_v + Σ_{j∈N_v} x_j]
///             · i^{Σ_{i<j∈R} 2 G_ij x_i x_j + Σ_{j∈R} (2 loop_j + Q_j) x_j}
///
/// so edges inside R and loops on R form the phase graph, edges between L and
/// R and loops on L form the magnitude graph. L carries no edges among
/// itself. `phase` is a global ℤ₄ constant, kept exact by swp and canon only.
class GeneralisedTwoGraphState {
  public:
    GeneralisedTwoGraphState() = default;
    /// Validates the representation invariants; throws InvariantError.
    GeneralisedTwoGraphState(Gf2Graph g, VertexSet r, VertexSet q, int phase = 0);

    [[nodiscard]] int size() const { return g_.size(); }
    [[nodiscard]] const Gf2Graph &graph() const { return g_; }
    [[nodiscard]] VertexSet r() const { return r_; }
    [[nodiscard]] VertexSet q() const { return q_; }
    [[nodiscard]] VertexSet l() const { return VertexSet::range(size()) - r_; }
    [[nodiscard]] int phase() const { return phase_; }

    /// Edges between L and R plus loops on L.
    [[nodiscard]] Gf2Graph magnitude_graph() const;
    /// Induced subgraph on R, loops included.
    [[nodiscard]] Gf2Graph phase_graph() const;

    /// m = 1, i.e. L is empty.
    [[nodiscard]] bool is_flat() const { return r_ == VertexSet::range(size()); }

    void validate() const;
    [[nodiscard]] bool is_valid() const;

    /// Same (G, R, Q), ignoring the global phase constant.
    [[nodiscard]] bool same_representation(const GeneralisedTwoGraphState &other) const {
        return g_ == other.g_ && r_ == other.r_ && q_ == other.q_;
    }
    bool operator==(const GeneralisedTwoGraphState &other) const {
        return same_representation(other) && phase_ == other.phase_;
    }

    /// "G={02,03,..} R={2,3,4} Q={2,3}".
    [[nodiscard]] std::string to_string() const;

  private:
    friend struct StateEditor;

    Gf2Graph g_;
    VertexSet r_;
    VertexSet q_;
    int phase_ = 0;
};

/// One affine GF(2) factor: constant + Σ_{j∈support} x_j.
struct AffineFactor {
    int pivot = 0;
    VertexSet support;
    bool constant = false;

    /// Bit j of `assignment` is x_j.
    [[nodiscard]] bool evaluate(std::uint64_t assignment) const;
};

/// Magnitude times ℤ₄ phase: amplitude(x) = m(x) · i^{p(x)}.
struct AlgebraicPolarForm {
    int n = 0;
    /// One factor per L-vertex, in increasing pivot order.
    std::vector<AffineFactor> factors;
    /// Upper-triangular n×n table; (i, j) with i < j is the coefficient of
    /// x_i x_j (0 or 2), (i, i) the coefficient of x_i (0..3).
    std::vector<std::uint8_t> phase_quad;
    int phase_const = 0;

    [[nodiscard]] std::uint8_t coefficient(int i, int j) const;
    [[nodiscard]] bool magnitude(std::uint64_t assignment) const;
    /// p(x) mod 4, constant included.
    [[nodiscard]] int phase(std::uint64_t assignment) const;
    /// Off-diagonal coefficients all in {0, 2}.
    [[nodiscard]] bool is_special_form() const;

    /// "m=(x0+x2+x3+1)(x1+x2+x3)" or "m=1".
    [[nodiscard]] std::string magnitude_string() const;
    /// "p=2x2x3+2x2x4+x2+3x3" or "p=0". The constant is not printed.
    [[nodiscard]] std::string phase_string() const;
    /// When every coefficient is even, the exponent of (-1): p/2 over GF(2).
    [[nodiscard]] std::optional<std::string> boolean_phase_string() const;
    /// "m=...; p=...".
    [[nodiscard]] std::string to_string() const;
};

/// Systematic parity-check matrix of the coset code selected by m.
struct ParityCheckMatrix {
    int n = 0;
    std::vector<VertexSet> rows;
    VertexSet coset_leader;

    /// Rows as "111000" strings, column j at position j.
    [[nodiscard]] std::vector<std::string> row_strings() const;
    [[nodiscard]] std::string coset_leader_string() const;
};

/// Graph state of a simple graph: R = V, Q = ∅.
GeneralisedTwoGraphState from_graph_state(const Gf2Graph &p_graph);

AlgebraicPolarForm to_apf(const GeneralisedTwoGraphState &s);
ParityCheckMatrix to_parity_check(const GeneralisedTwoGraphState &s);

/// Loop-aware local complementation of the pair (G, Q) at v:
/// G + C(N_v) + [loop_v] D(N_v) + D(Q ∩ N_v), Q ⊖ B_v.
std::pair<Gf2Graph, VertexSet> lc_loop(const Gf2Graph &g, VertexSet q, int v);

/// Exchanges the roles of v ∈ L and w ∈ N_v. The amplitude vector is unchanged,
/// global phase included.
GeneralisedTwoGraphState swp(const GeneralisedTwoGraphState &s, int v, int w);

/// Which branch of the H/N rewrite rules applies at v.
enum class RewriteCase {
    kInL,       ///< v ∈ L
    kBallInR,   ///< B_v ⊆ R
    kNeedsSwap  ///< v ∈ R, some neighbour of v in L
};
RewriteCase rewrite_case(const GeneralisedTwoGraphState &s, int v);

/// H at qubit v. In the swap branch `w` picks the L-neighbour to exchange with
/// (default: the smallest one). The result equals H_v|ψ⟩ up to a global scalar.
GeneralisedTwoGraphState apply_h(const GeneralisedTwoGraphState &s, int v, std::optional<int> w = std::nullopt);
/// Negahadamard N = (1/√2)[[1, i], [1, -i]] at qubit v.
GeneralisedTwoGraphState apply_n(const GeneralisedTwoGraphState &s, int v, std::optional<int> w = std::nullopt);
/// N⁻¹ at qubit v, realised as H followed by a diagonal correction.
GeneralisedTwoGraphState apply_n_inv(const GeneralisedTwoGraphState &s, int v,
                                     std::optional<int> w = std::nullopt);
/// λ = ω⁵N acts as N up to the ignored global scalar.
GeneralisedTwoGraphState apply_lambda(const GeneralisedTwoGraphState &s, int v);
GeneralisedTwoGraphState apply_lambda_sq(const GeneralisedTwoGraphState &s, int v);

/// Repeated swp until every L-vertex precedes all of its neighbours. The
/// result represents the same amplitude vector exactly.
GeneralisedTwoGraphState canon(const GeneralisedTwoGraphState &s);
[[nodiscard]] bool is_canonised(const GeneralisedTwoGraphState &s);

/// A single step of a rewrite script: H3, N0, Ninv2, L1, L22, swap(1,3), canon.
struct Operation {
    enum class Kind { kH, kN, kNInv, kLambda, kLambdaSq, kSwap, kCanon };
    Kind kind = Kind::kH;
    int v = -1;
    int w = -1;

    /// Throws ParseError.
    static Operation parse(std::string_view text);
    /// Whitespace-separated list of operations.
    static std::vector<Operation> parse_list(std::string_view text);
    [[nodiscard]] std::string to_string() const;
    bool operator==(const Operation &) const = default;
};

GeneralisedTwoGraphState apply(const GeneralisedTwoGraphState &s, const Operation &op);
GeneralisedTwoGraphState apply_all(GeneralisedTwoGraphState s, const std::vector<Operation> &ops);

struct GraphReduction {
    GeneralisedTwoGraphState state;
    std::vector<Operation> transcript;
};

/// Applies H at the smallest L-vertex until L is empty. Loops and Q may remain.
GraphReduction to_graph_state(const GeneralisedTwoGraphState &s);

}  // namespace twograph
