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

#include "twograph/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <utility>

namespace twograph {

namespace {

void require_qubits(int n) {
    if (n < 0 || n > kMaxDenseQubits) {
        throw PreconditionError("dense oracle supports 0.." + std::to_string(kMaxDenseQubits) + " qubits, got " +
                                std::to_string(n));
    }
}

void require_same(const DenseState &a, const DenseState &b) {
    if (a.qubits() != b.qubits()) {
        throw PreconditionError("qubit count mismatch: " + std::to_string(a.qubits()) + " vs " +
                                std::to_string(b.qubits()));
    }
}

void require_position(const DenseState &st, int v) {
    if (v < 0 || v >= st.qubits()) {
        throw PreconditionError("qubit " + std::to_string(v) + " out of range for n=" + std::to_string(st.qubits()));
    }
}

/// Index bit holding x_v.
std::size_t bit_of(int v, int n) { return std::size_t{1} << (n - 1 - v); }

const Amplitude kI{0.0, 1.0};

Amplitude i_pow(int k) {
    static const Amplitude table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k & 3];
}

}  // namespace

DenseState::DenseState(int n) : n_(n) {
    require_qubits(n);
    amps_.assign(std::size_t{1} << n, 0.0);
}

DenseState::DenseState(int n, std::vector<Amplitude> amps) : n_(n), amps_(std::move(amps)) {
    require_qubits(n);
    if (amps_.size() != (std::size_t{1} << n)) {
        throw PreconditionError("expected " + std::to_string(std::size_t{1} << n) + " amplitudes, got " +
                                std::to_string(amps_.size()));
    }
}

double DenseState::norm() const {
    double total = 0.0;
    for (auto a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

DenseState DenseState::normalized() const {
    const double nrm = norm();
    if (nrm == 0.0) {
        throw InvariantError("cannot normalise the zero vector");
    }
    DenseState out = *this;
    for (auto &a : out.amps_) {
        a /= nrm;
    }
    return out;
}

std::size_t DenseState::nonzero_count(double tol) const {
    std::size_t count = 0;
    for (auto a : amps_) {
        count += std::abs(a) > tol;
    }
    return count;
}

std::size_t DenseState::index_of(std::uint64_t assignment, int n) {
    std::size_t index = 0;
    for (int j = 0; j < n; ++j) {
        if ((assignment >> j) & 1U) {
            index |= bit_of(j, n);
        }
    }
    return index;
}

std::uint64_t DenseState::assignment_of(std::size_t index, int n) {
    std::uint64_t x = 0;
    for (int j = 0; j < n; ++j) {
        if (index & bit_of(j, n)) {
            x |= std::uint64_t{1} << j;
        }
    }
    return x;
}

LocalUnitary LocalUnitary::of(Gate kind) {
    const double h = std::numbers::sqrt2 / 2.0;
    const Amplitude omega = std::polar(1.0, std::numbers::pi / 4.0);
    LocalUnitary u;
    u.kind = kind;
    switch (kind) {
    case Gate::kI:
        u.entries = {1.0, 0.0, 0.0, 1.0};
        break;
    case Gate::kH:
        u.entries = {h, h, h, -h};
        break;
    case Gate::kN:
        u.entries = {h, h * kI, h, -h * kI};
        break;
    case Gate::kNInv:
        // N†.
        u.entries = {h, h, -h * kI, h * kI};
        break;
    case Gate::kS:
        u.entries = {1.0, 0.0, 0.0, kI};
        break;
    case Gate::kX:
        u.entries = {0.0, 1.0, 1.0, 0.0};
        break;
    case Gate::kZ:
        u.entries = {1.0, 0.0, 0.0, -1.0};
        break;
    case Gate::kLambda:
        u = of(Gate::kN).scaled(std::pow(omega, 5));
        break;
    case Gate::kLambdaSq: {
        const LocalUnitary l = of(Gate::kLambda);
        u = l * l;
        break;
    }
    }
    u.kind = kind;
    return u;
}

LocalUnitary LocalUnitary::operator*(const LocalUnitary &rhs) const {
    const auto &a = entries;
    const auto &b = rhs.entries;
    LocalUnitary out;
    out.kind = kind;
    out.entries = {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                   a[2] * b[1] + a[3] * b[3]};
    return out;
}

LocalUnitary LocalUnitary::scaled(Amplitude c) const {
    LocalUnitary out = *this;
    for (auto &e : out.entries) {
        e *= c;
    }
    return out;
}

bool LocalUnitary::is_unitary(double tol) const {
    LocalUnitary dagger;
    dagger.entries = {std::conj(entries[0]), std::conj(entries[2]), std::conj(entries[1]), std::conj(entries[3])};
    return (*this * dagger).approx_equal(of(Gate::kI), tol);
}

bool LocalUnitary::approx_equal(const LocalUnitary &other, double tol) const {
    for (std::size_t k = 0; k < 4; ++k) {
        if (std::abs(entries[k] - other.entries[k]) > tol) {
            return false;
        }
    }
    return true;
}

std::string gate_name(Gate g) {
    switch (g) {
    case Gate::kI:
        return "I";
    case Gate::kH:
        return "H";
    case Gate::kN:
        return "N";
    case Gate::kNInv:
        return "Ninv";
    case Gate::kS:
        return "S";
    case Gate::kX:
        return "X";
    case Gate::kZ:
        return "Z";
    case Gate::kLambda:
        return "lambda";
    case Gate::kLambdaSq:
        return "lambda_sq";
    }
    return "?";
}

DenseState evaluate(const AlgebraicPolarForm &apf) {
    require_qubits(apf.n);
    DenseState out(apf.n);
    for (std::size_t index = 0; index < out.dimension(); ++index) {
        const std::uint64_t x = DenseState::assignment_of(index, apf.n);
        if (apf.magnitude(x)) {
            out[index] = i_pow(apf.phase(x));
        }
    }
    if (out.nonzero_count() == 0) {
        throw InvariantError("magnitude vanishes everywhere: " + apf.magnitude_string());
    }
    return out.normalized();
}

DenseState evaluate(const GeneralisedTwoGraphState &s) { return evaluate(to_apf(s)); }

DenseState evaluate_tables(int n, std::span<const std::uint8_t> magnitude, std::span<const std::uint8_t> phase) {
    DenseState out(n);
    if (magnitude.size() != out.dimension() || phase.size() != out.dimension()) {
        throw PreconditionError("truth tables must have 2^n entries");
    }
    for (std::size_t k = 0; k < out.dimension(); ++k) {
        out[k] = magnitude[k] ? i_pow(phase[k]) : Amplitude{};
    }
    return out.normalized();
}

DenseState apply_local(const DenseState &st, const LocalUnitary &u, int v) {
    require_position(st, v);
    const std::size_t bit = bit_of(v, st.qubits());
    DenseState out = st;
    for (std::size_t k = 0; k < st.dimension(); ++k) {
        if (k & bit) {
            continue;
        }
        const Amplitude a0 = st[k];
        const Amplitude a1 = st[k | bit];
        out[k] = u.entries[0] * a0 + u.entries[1] * a1;
        out[k | bit] = u.entries[2] * a0 + u.entries[3] * a1;
    }
    return out;
}

bool equal_up_to_global(const DenseState &a, const DenseState &b, double tol) {
    require_same(a, b);
    std::size_t pivot = b.dimension();
    for (std::size_t k = 0; k < b.dimension(); ++k) {
        if (std::abs(b[k]) > tol) {
            pivot = k;
            break;
        }
    }
    if (pivot == b.dimension()) {
        return a.nonzero_count(tol) == 0;
    }
    const Amplitude c = a[pivot] / b[pivot];
    if (std::abs(c) <= tol) {
        return false;
    }
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        if (std::abs(a[k] - c * b[k]) > tol) {
            return false;
        }
    }
    return true;
}

bool approx_equal(const DenseState &a, const DenseState &b, double tol) {
    require_same(a, b);
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        if (std::abs(a[k] - b[k]) > tol) {
            return false;
        }
    }
    return true;
}

DenseState apply_stabilizer_generator(const Gf2Graph &p_graph, const DenseState &st, int j) {
    if (p_graph.size() != st.qubits()) {
        throw PreconditionError("graph and state sizes differ");
    }
    if (!p_graph.is_simple()) {
        throw PreconditionError("stabilizer generators need a simple graph");
    }
    require_position(st, j);
    const int n = st.qubits();
    const std::uint64_t z_mask = p_graph.row(j).mask();
    DenseState out(n);
    for (std::size_t k = 0; k < st.dimension(); ++k) {
        const std::uint64_t x = DenseState::assignment_of(k, n);
        const double sign = (std::popcount(x & z_mask) & 1) ? -1.0 : 1.0;
        out[k ^ bit_of(j, n)] = sign * st[k];
    }
    return out;
}

bool stabilizer_check(const Gf2Graph &p_graph, const DenseState &st, double tol) {
    for (int j = 0; j < st.qubits(); ++j) {
        if (!approx_equal(apply_stabilizer_generator(p_graph, st, j), st, tol)) {
            return false;
        }
    }
    return true;
}

DenseState cofactor(const DenseState &st, int v, int bit) {
    require_position(st, v);
    if (bit != 0 && bit != 1) {
        throw PreconditionError("cofactor bit must be 0 or 1");
    }
    const int n = st.qubits();
    const std::size_t high = bit_of(v, n);
    DenseState out(n - 1);
    for (std::size_t k = 0; k < out.dimension(); ++k) {
        // Insert `bit` at the position of x_v.
        const std::size_t upper = (k & ~(high - 1)) << 1;
        const std::size_t lower = k & (high - 1);
        out[k] = st[upper | lower | (bit ? high : 0)];
    }
    return out;
}

DenseState merge_cofactors(const DenseState &zero, const DenseState &one, int v) {
    require_same(zero, one);
    const int n = zero.qubits() + 1;
    if (v < 0 || v >= n) {
        throw PreconditionError("merge position " + std::to_string(v) + " out of range");
    }
    const std::size_t high = bit_of(v, n);
    DenseState out(n);
    for (std::size_t k = 0; k < zero.dimension(); ++k) {
        const std::size_t base = ((k & ~(high - 1)) << 1) | (k & (high - 1));
        out[base] = zero[k];
        out[base | high] = one[k];
    }
    return out;
}

double dense_lj_norm(const DenseState &st, double j) {
    if (!(j > 0.0)) {
        throw PreconditionError("L_j norm needs j > 0");
    }
    const int n = st.qubits();
    if (std::isinf(j)) {
        double peak = 0.0;
        for (auto a : st.amplitudes()) {
            peak = std::max(peak, std::abs(a));
        }
        return std::pow(2.0, n / 2.0) * peak;
    }
    double total = 0.0;
    for (auto a : st.amplitudes()) {
        total += std::pow(std::abs(a), j);
    }
    return std::pow(2.0, n * (0.5 - 1.0 / j)) * std::pow(total, 1.0 / j);
}

int dense_l_size(const DenseState &st, double tol) {
    const std::size_t support = st.nonzero_count(tol);
    if (support == 0 || !std::has_single_bit(support)) {
        throw InvariantError("support size " + std::to_string(support) + " is not a power of two");
    }
    return st.qubits() - std::countr_zero(support);
}

std::vector<OracleMismatch> oracle_check(const GeneralisedTwoGraphState &s, double tol) {
    require_qubits(s.size());
    std::vector<OracleMismatch> out;
    const DenseState psi = evaluate(s);
    auto fail = [&](const Operation &op) { out.push_back({op.to_string(), s.to_string()}); };
    using Kind = Operation::Kind;
    constexpr std::pair<Kind, Gate> kLocal[] = {{Kind::kH, Gate::kH},
                                               {Kind::kN, Gate::kN},
                                               {Kind::kNInv, Gate::kNInv},
                                               {Kind::kLambda, Gate::kLambda},
                                               {Kind::kLambdaSq, Gate::kLambdaSq}};
    for (int v = 0; v < s.size(); ++v) {
        for (auto [kind, gate] : kLocal) {
            const Operation op{kind, v, -1};
            const DenseState expected = apply_local(psi, LocalUnitary::of(gate), v);
            if (!equal_up_to_global(evaluate(apply(s, op)), expected, tol)) {
                fail(op);
            }
        }
    }
    for (int v : s.l()) {
        for (int w : open_neighborhood(s.graph(), v) & s.r()) {
            const Operation op{Kind::kSwap, v, w};
            if (!approx_equal(evaluate(apply(s, op)), psi, tol)) {
                fail(op);
            }
        }
    }
    const Operation canon_op{Kind::kCanon, -1, -1};
    if (!approx_equal(evaluate(apply(s, canon_op)), psi, tol)) {
        fail(canon_op);
    }
    return out;
}

}  // namespace twograph
