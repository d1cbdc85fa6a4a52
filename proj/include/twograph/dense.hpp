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
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twograph/gf2_graph.hpp"
#include "twograph/two_graph_state.hpp"

namespace twograph {

using Amplitude = std::complex<double>;

/// Largest qubit count the dense oracle accepts.
inline constexpr int kMaxDenseQubits = 14;

/// 2ⁿ amplitudes, big-endian: x_0 is the most significant bit of the index.
class DenseState {
  public:
    DenseState() = default;
    explicit DenseState(int n);
    DenseState(int n, std::vector<Amplitude> amps);

    [[nodiscard]] int qubits() const { return n_; }
    [[nodiscard]] std::size_t dimension() const { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const { return amps_; }
    [[nodiscard]] Amplitude operator[](std::size_t index) const { return amps_[index]; }
    Amplitude &operator[](std::size_t index) { return amps_[index]; }

    [[nodiscard]] double norm() const;
    [[nodiscard]] DenseState normalized() const;
    [[nodiscard]] std::size_t nonzero_count(double tol = 1e-9) const;

    /// Index of the assignment whose bit j is x_j.
    [[nodiscard]] static std::size_t index_of(std::uint64_t assignment, int n);
    [[nodiscard]] static std::uint64_t assignment_of(std::size_t index, int n);

  private:
    int n_ = 0;
    std::vector<Amplitude> amps_;
};

enum class Gate { kI, kH, kN, kNInv, kS, kX, kZ, kLambda, kLambdaSq };

/// Row-major 2×2 matrix.
struct LocalUnitary {
    Gate kind = Gate::kI;
    std::array<Amplitude, 4> entries{};

    static LocalUnitary of(Gate kind);
    [[nodiscard]] LocalUnitary operator*(const LocalUnitary &rhs) const;
    [[nodiscard]] LocalUnitary scaled(Amplitude c) const;
    [[nodiscard]] bool is_unitary(double tol = 1e-12) const;
    [[nodiscard]] bool approx_equal(const LocalUnitary &other, double tol = 1e-12) const;
};

std::string gate_name(Gate g);

/// amps[x] = m(x) · i^{p(x)}, normalised.
DenseState evaluate(const AlgebraicPolarForm &apf);
DenseState evaluate(const GeneralisedTwoGraphState &s);

/// Normalised vector m(x) · i^{p(x)} from truth tables indexed like DenseState.
/// `magnitude` entries are 0/1, `phase` entries are taken mod 4.
DenseState evaluate_tables(int n, std::span<const std::uint8_t> magnitude, std::span<const std::uint8_t> phase);

/// U applied at tensor position v.
DenseState apply_local(const DenseState &st, const LocalUnitary &u, int v);

/// ∃ c ≠ 0 with a = c·b entrywise within tol. The scalar is fixed at the first
/// index where |b| > tol. Two zero vectors compare equal.
bool equal_up_to_global(const DenseState &a, const DenseState &b, double tol = 1e-9);
/// Entrywise equality within tol.
bool approx_equal(const DenseState &a, const DenseState &b, double tol = 1e-9);

/// X_j Π_k Z_k^{P_jk} applied to st.
DenseState apply_stabilizer_generator(const Gf2Graph &p_graph, const DenseState &st, int j);
/// K_{P_j} st = st for every j.
bool stabilizer_check(const Gf2Graph &p_graph, const DenseState &st, double tol = 1e-9);

/// Half-length vector with x_v fixed to bit (unnormalised).
DenseState cofactor(const DenseState &st, int v, int bit);
/// Inverse of the two cofactors at v.
DenseState merge_cofactors(const DenseState &zero, const DenseState &one, int v);

/// 2^{n(1/2 - 1/j)} (Σ |ψ_x|^j)^{1/j}.
double dense_lj_norm(const DenseState &st, double j);
/// log₂(2ⁿ / #nonzero). Throws InvariantError unless the support size is a power of two.
int dense_l_size(const DenseState &st, double tol = 1e-9);

struct OracleMismatch {
    /// Operation text in the rewrite-script grammar, e.g. "H3" or "swap(1,2)".
    std::string operation;
    std::string state;
};

/// Every rewrite at every vertex against the dense oracle: H, N, N⁻¹, λ, λ²
/// up to one global scalar; each applicable swap and canon exactly.
std::vector<OracleMismatch> oracle_check(const GeneralisedTwoGraphState &s, double tol = 1e-9);

}  // namespace twograph
