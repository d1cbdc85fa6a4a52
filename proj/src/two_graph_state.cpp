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

#include "twograph/two_graph_state.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace twograph {

/// Unchecked access for rewrites that establish the invariants themselves.
struct StateEditor {
    static GeneralisedTwoGraphState make(Gf2Graph g, VertexSet r, VertexSet q, int phase) {
        GeneralisedTwoGraphState s;
        s.g_ = std::move(g);
        s.r_ = r;
        s.q_ = q;
        s.phase_ = ((phase % 4) + 4) % 4;
#ifndef NDEBUG
        s.validate();
#endif
        return s;
    }
};

namespace {

std::string vname(int v) { return std::to_string(v); }

void require_vertex(const GeneralisedTwoGraphState &s, int v, const char *op) {
    if (s.size() == 0) {
        throw PreconditionError(std::string(op) + ": the 0-qubit state admits no rewrites");
    }
    if (v < 0 || v >= s.size()) {
        throw PreconditionError(std::string(op) + ": vertex " + vname(v) + " out of range for n=" +
                                std::to_string(s.size()));
    }
}

int pick_swap_partner(const GeneralisedTwoGraphState &s, int v, std::optional<int> w, const char *op) {
    const VertexSet candidates = open_neighborhood(s.graph(), v) & s.l();
    if (!w.has_value()) {
        return candidates.min();
    }
    if (!candidates.contains(*w)) {
        throw PreconditionError(std::string(op) + " at " + vname(v) + ": w=" + vname(*w) +
                                " is not an L-neighbour; candidates " + candidates.to_string());
    }
    return *w;
}

}  // namespace

GeneralisedTwoGraphState::GeneralisedTwoGraphState(Gf2Graph g, VertexSet r, VertexSet q, int phase)
    : g_(std::move(g)), r_(r), q_(q), phase_(((phase % 4) + 4) % 4) {
    validate();
}

Gf2Graph GeneralisedTwoGraphState::magnitude_graph() const {
    Gf2Graph m(size());
    const VertexSet left = l();
    for (int v : left) {
        m.toggle_row(v, g_.row(v));
    }
    return m;
}

Gf2Graph GeneralisedTwoGraphState::phase_graph() const { return g_.induced(r_); }

void GeneralisedTwoGraphState::validate() const {
    const int n = size();
    if (!r_.within(n) || !q_.within(n)) {
        throw InvariantError("R=" + r_.to_string() + " or Q=" + q_.to_string() + " exceeds n=" + std::to_string(n));
    }
    if (!q_.subset_of(r_)) {
        throw InvariantError("Q=" + q_.to_string() + " is not contained in R=" + r_.to_string());
    }
    const VertexSet left = l();
    for (int v : left) {
        const VertexSet bad = open_neighborhood(g_, v) & left;
        if (!bad.empty()) {
            throw InvariantError("L-vertex " + vname(v) + " is adjacent to L-vertices " + bad.to_string());
        }
    }
    if (phase_ < 0 || phase_ > 3) {
        throw InvariantError("phase constant " + std::to_string(phase_) + " outside Z4");
    }
}

bool GeneralisedTwoGraphState::is_valid() const {
    try {
        validate();
        return true;
    } catch (const InvariantError &) {
        return false;
    }
}

std::string GeneralisedTwoGraphState::to_string() const {
    std::string out = "G=" + g_.to_string() + " R=" + r_.to_string() + " Q=" + q_.to_string();
    if (phase_ != 0) {
        out += " phase=" + std::to_string(phase_);
    }
    return out;
}

bool AffineFactor::evaluate(std::uint64_t assignment) const {
    return constant ^ static_cast<bool>(std::popcount(assignment & support.mask()) & 1);
}

std::uint8_t AlgebraicPolarForm::coefficient(int i, int j) const {
    if (i > j) {
        std::swap(i, j);
    }
    return phase_quad[static_cast<std::size_t>(i) * n + j];
}

bool AlgebraicPolarForm::magnitude(std::uint64_t assignment) const {
    for (const auto &f : factors) {
        if (!f.evaluate(assignment)) {
            return false;
        }
    }
    return true;
}

int AlgebraicPolarForm::phase(std::uint64_t assignment) const {
    int p = phase_const;
    for (int i = 0; i < n; ++i) {
        if (!((assignment >> i) & 1U)) {
            continue;
        }
        for (int j = i; j < n; ++j) {
            if ((assignment >> j) & 1U) {
                p += coefficient(i, j);
            }
        }
    }
    return p & 3;
}

bool AlgebraicPolarForm::is_special_form() const {
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coefficient(i, j) % 2 != 0) {
                return false;
            }
        }
    }
    return true;
}

std::string AlgebraicPolarForm::magnitude_string() const {
    if (factors.empty()) {
        return "m=1";
    }
    std::string out = "m=";
    for (const auto &f : factors) {
        out += '(';
        bool first = true;
        for (int j : f.support) {
            if (!first) {
                out += '+';
            }
            out += 'x' + std::to_string(j);
            first = false;
        }
        if (f.constant) {
            out += first ? "1" : "+1";
        }
        out += ')';
    }
    return out;
}

namespace {

std::string render_phase(const AlgebraicPolarForm &apf, int divisor) {
    std::string out;
    auto emit = [&](int c, const std::string &mono) {
        c /= divisor;
        if (c == 0) {
            return;
        }
        if (!out.empty()) {
            out += '+';
        }
        if (c != 1) {
            out += std::to_string(c);
        }
        out += mono;
    };
    for (int i = 0; i < apf.n; ++i) {
        for (int j = i + 1; j < apf.n; ++j) {
            emit(apf.coefficient(i, j), "x" + std::to_string(i) + "x" + std::to_string(j));
        }
    }
    for (int i = 0; i < apf.n; ++i) {
        emit(apf.coefficient(i, i), "x" + std::to_string(i));
    }
    return "p=" + (out.empty() ? std::string("0") : out);
}

}  // namespace

std::string AlgebraicPolarForm::phase_string() const { return render_phase(*this, 1); }

std::optional<std::string> AlgebraicPolarForm::boolean_phase_string() const {
    for (auto c : phase_quad) {
        if (c % 2 != 0) {
            return std::nullopt;
        }
    }
    return render_phase(*this, 2);
}

std::string AlgebraicPolarForm::to_string() const { return magnitude_string() + "; " + phase_string(); }

std::vector<std::string> ParityCheckMatrix::row_strings() const {
    std::vector<std::string> out;
    out.reserve(rows.size());
    for (VertexSet row : rows) {
        std::string bits(static_cast<std::size_t>(n), '0');
        for (int j : row) {
            bits[static_cast<std::size_t>(j)] = '1';
        }
        out.push_back(std::move(bits));
    }
    return out;
}

std::string ParityCheckMatrix::coset_leader_string() const {
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int j : coset_leader) {
        bits[static_cast<std::size_t>(j)] = '1';
    }
    return bits;
}

GeneralisedTwoGraphState from_graph_state(const Gf2Graph &p_graph) {
    if (!p_graph.is_simple()) {
        throw PreconditionError("graph state needs a simple graph; loops at " + p_graph.loops().to_string());
    }
    return {p_graph, VertexSet::range(p_graph.size()), VertexSet()};
}

AlgebraicPolarForm to_apf(const GeneralisedTwoGraphState &s) {
    const int n = s.size();
    const Gf2Graph &g = s.graph();
    AlgebraicPolarForm apf;
    apf.n = n;
    apf.phase_quad.assign(static_cast<std::size_t>(n) * n, 0);
    apf.phase_const = s.phase();
    for (int v : s.l()) {
        apf.factors.push_back({v, closed_ball(g, v), !g.has_loop(v)});
    }
    const VertexSet r = s.r();
    for (int i : r) {
        for (int j : open_neighborhood(g, i) & r) {
            if (i < j) {
                apf.phase_quad[static_cast<std::size_t>(i) * n + j] = 2;
            }
        }
        apf.phase_quad[static_cast<std::size_t>(i) * n + i] =
            static_cast<std::uint8_t>(2 * g.has_loop(i) + s.q().contains(i));
    }
    return apf;
}

ParityCheckMatrix to_parity_check(const GeneralisedTwoGraphState &s) {
    ParityCheckMatrix h;
    h.n = s.size();
    for (int v : s.l()) {
        h.rows.push_back(closed_ball(s.graph(), v));
        if (s.graph().has_loop(v)) {
            h.coset_leader.insert(v);
        }
    }
    return h;
}

std::pair<Gf2Graph, VertexSet> lc_loop(const Gf2Graph &g, VertexSet q, int v) {
    const int n = g.size();
    const VertexSet nv = open_neighborhood(g, v);
    Gf2Graph out = g + complete_graph(n, nv) + delta(n, q & nv);
    if (g.has_loop(v)) {
        out += delta(n, nv);
    }
    return {std::move(out), q ^ closed_ball(g, v)};
}

GeneralisedTwoGraphState swp(const GeneralisedTwoGraphState &s, int v, int w) {
    require_vertex(s, v, "swp");
    require_vertex(s, w, "swp");
    if (s.r().contains(v)) {
        throw PreconditionError("swp: v=" + vname(v) + " is not in L");
    }
    const Gf2Graph &g = s.graph();
    if (!open_neighborhood(g, v).contains(w)) {
        throw PreconditionError("swp: w=" + vname(w) + " is not a neighbour of v=" + vname(v));
    }
    const VertexSet r = (s.r() | VertexSet::single(v)) - VertexSet::single(w);
    // Rewriting the factor of v around w shifts the amplitude by i^k.
    const int k = g.has_loop(v) ? 2 * g.has_loop(w) + s.q().contains(w) : 0;
    Gf2Graph pivoted = elc_loop(g, v, w);
    if (!s.q().contains(w)) {
        return StateEditor::make(std::move(pivoted), r, s.q(), s.phase() + k);
    }
    auto [g2, q2] = lc_loop(pivoted, s.q(), w);
    return StateEditor::make(std::move(g2), r, q2, s.phase() + k);
}

RewriteCase rewrite_case(const GeneralisedTwoGraphState &s, int v) {
    require_vertex(s, v, "rewrite_case");
    const bool in_l = !s.r().contains(v);
    const bool ball_in_r = closed_ball(s.graph(), v).subset_of(s.r());
    if (in_l && ball_in_r) {
        throw InvariantError("vertex " + vname(v) + " is both in L and has B_v inside R");
    }
    if (in_l) {
        return RewriteCase::kInL;
    }
    return ball_in_r ? RewriteCase::kBallInR : RewriteCase::kNeedsSwap;
}

GeneralisedTwoGraphState apply_h(const GeneralisedTwoGraphState &s, int v, std::optional<int> w) {
    require_vertex(s, v, "H");
    const Gf2Graph &g = s.graph();
    const VertexSet vs = VertexSet::single(v);
    switch (rewrite_case(s, v)) {
    case RewriteCase::kInL:
        return StateEditor::make(g, s.r() | vs, s.q(), 0);
    case RewriteCase::kBallInR: {
        if (!s.q().contains(v)) {
            return StateEditor::make(g, s.r() - vs, s.q(), 0);
        }
        auto [g2, q2] = lc_loop(g, s.q(), v);
        g2 += delta(s.size(), closed_ball(g, v));
        return StateEditor::make(std::move(g2), s.r(), q2 | vs, 0);
    }
    case RewriteCase::kNeedsSwap: {
        const int u = pick_swap_partner(s, v, w, "H");
        GeneralisedTwoGraphState t = swp(s, u, v);
        return StateEditor::make(t.graph(), t.r() | vs, t.q(), 0);
    }
    }
    throw InvariantError("unreachable rewrite case");
}

GeneralisedTwoGraphState apply_n(const GeneralisedTwoGraphState &s, int v, std::optional<int> w) {
    require_vertex(s, v, "N");
    const Gf2Graph &g = s.graph();
    const VertexSet vs = VertexSet::single(v);
    switch (rewrite_case(s, v)) {
    case RewriteCase::kInL: {
        auto [g2, q2] = lc_loop(g, s.q(), v);
        return StateEditor::make(std::move(g2), s.r() | vs, q2 - vs, 0);
    }
    case RewriteCase::kBallInR: {
        if (s.q().contains(v)) {
            return StateEditor::make(g + delta(s.size(), vs), s.r() - vs, s.q() - vs, 0);
        }
        auto [g2, q2] = lc_loop(g, s.q(), v);
        g2 += delta(s.size(), closed_ball(g, v));
        return StateEditor::make(std::move(g2), s.r(), q2, 0);
    }
    case RewriteCase::kNeedsSwap: {
        const int u = pick_swap_partner(s, v, w, "N");
        GeneralisedTwoGraphState t = swp(s, u, v);
        auto [g2, q2] = lc_loop(t.graph(), t.q(), v);
        return StateEditor::make(std::move(g2), t.r() | vs, q2 - vs, 0);
    }
    }
    throw InvariantError("unreachable rewrite case");
}

GeneralisedTwoGraphState apply_n_inv(const GeneralisedTwoGraphState &s, int v, std::optional<int> w) {
    const GeneralisedTwoGraphState h = apply_h(s, v, w);
    const Gf2Graph &g = h.graph();
    const int n = h.size();
    const VertexSet vs = VertexSet::single(v);
    if (!h.r().contains(v)) {
        const VertexSet nv = open_neighborhood(g, v);
        Gf2Graph g2 = g + complete_graph(n, nv) + delta(n, h.q() & nv);
        if (!g.has_loop(v)) {
            g2 += delta(n, nv);
        }
        return StateEditor::make(std::move(g2), h.r(), h.q() ^ nv, 0);
    }
    if (!h.q().contains(v)) {
        return StateEditor::make(g + delta(n, vs), h.r(), h.q() | vs, 0);
    }
    return StateEditor::make(g, h.r(), h.q() - vs, 0);
}

GeneralisedTwoGraphState apply_lambda(const GeneralisedTwoGraphState &s, int v) { return apply_n(s, v); }

GeneralisedTwoGraphState apply_lambda_sq(const GeneralisedTwoGraphState &s, int v) {
    return apply_n(apply_n(s, v), v);
}

namespace {

/// Smallest L-vertex with a smaller-index neighbour, or -1.
int first_uncanonised(const GeneralisedTwoGraphState &s) {
    for (int v : s.l()) {
        const int u = open_neighborhood(s.graph(), v).min();
        if (u >= 0 && u < v) {
            return v;
        }
    }
    return -1;
}

}  // namespace

GeneralisedTwoGraphState canon(const GeneralisedTwoGraphState &s) {
    GeneralisedTwoGraphState cur = s;
    const int n = s.size();
    const long budget = 4L * n * n + 16;
    for (long step = 0; step < budget; ++step) {
        const int v = first_uncanonised(cur);
        if (v < 0) {
            return cur;
        }
        cur = swp(cur, v, open_neighborhood(cur.graph(), v).min());
    }
    throw InvariantError("canon did not terminate within " + std::to_string(budget) + " swaps on " +
                         s.to_string());
}

bool is_canonised(const GeneralisedTwoGraphState &s) { return first_uncanonised(s) < 0; }

namespace {

int parse_index(std::string_view text, std::string_view whole) {
    int value = 0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last || value < 0) {
        throw ParseError("bad vertex '" + std::string(text) + "' in operation '" + std::string(whole) + "'");
    }
    return value;
}

/// "3" or "(3)".
int parse_argument(std::string_view rest, std::string_view whole) {
    if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
        rest = rest.substr(1, rest.size() - 2);
    }
    return parse_index(rest, whole);
}

std::string trim(std::string_view s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
        ++a;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
        --b;
    }
    return std::string(s.substr(a, b - a));
}

}  // namespace

Operation Operation::parse(std::string_view text) {
    const std::string t = trim(text);
    std::string_view sv = t;
    Operation op;
    if (sv == "canon") {
        op.kind = Kind::kCanon;
        return op;
    }
    if (sv.starts_with("swap(") && sv.ends_with(")")) {
        const std::string_view inner = sv.substr(5, sv.size() - 6);
        const auto comma = inner.find(',');
        if (comma == std::string_view::npos) {
            throw ParseError("swap needs two vertices: '" + t + "'");
        }
        op.kind = Kind::kSwap;
        op.v = parse_index(trim(inner.substr(0, comma)), sv);
        op.w = parse_index(trim(inner.substr(comma + 1)), sv);
        return op;
    }
    struct Prefix {
        std::string_view name;
        Kind kind;
    };
    // Longer prefixes first; "L2" followed by a vertex means λ².
    static constexpr Prefix kPrefixes[] = {
        {"Ninv", Kind::kNInv}, {"L2", Kind::kLambdaSq}, {"H", Kind::kH}, {"N", Kind::kN}, {"L", Kind::kLambda},
    };
    for (const auto &p : kPrefixes) {
        if (sv.starts_with(p.name) && sv.size() > p.name.size()) {
            op.kind = p.kind;
            op.v = parse_argument(sv.substr(p.name.size()), sv);
            return op;
        }
    }
    throw ParseError("unknown operation '" + t + "'");
}

std::vector<Operation> Operation::parse_list(std::string_view text) {
    std::vector<Operation> out;
    std::string token;
    int depth = 0;
    auto flush = [&] {
        if (!token.empty()) {
            out.push_back(parse(token));
            token.clear();
        }
    };
    for (char c : text) {
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
        }
        if ((std::isspace(static_cast<unsigned char>(c)) || c == ',' ) && depth == 0) {
            flush();
            continue;
        }
        token += c;
    }
    if (depth != 0) {
        throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
    }
    flush();
    return out;
}

std::string Operation::to_string() const {
    const std::string idx = std::to_string(v);
    switch (kind) {
    case Kind::kH:
        return "H" + idx;
    case Kind::kN:
        return "N" + idx;
    case Kind::kNInv:
        return "Ninv" + idx;
    case Kind::kLambda:
        // "L23" would read as λ² at 3.
        return idx.size() > 1 && idx.front() == '2' ? "L(" + idx + ")" : "L" + idx;
    case Kind::kLambdaSq:
        return "L2" + idx;
    case Kind::kSwap:
        return "swap(" + idx + "," + std::to_string(w) + ")";
    case Kind::kCanon:
        return "canon";
    }
    return "?";
}

namespace {

GeneralisedTwoGraphState dispatch(const GeneralisedTwoGraphState &s, const Operation &op) {
    switch (op.kind) {
    case Operation::Kind::kH:
        return apply_h(s, op.v);
    case Operation::Kind::kN:
        return apply_n(s, op.v);
    case Operation::Kind::kNInv:
        return apply_n_inv(s, op.v);
    case Operation::Kind::kLambda:
        return apply_lambda(s, op.v);
    case Operation::Kind::kLambdaSq:
        return apply_lambda_sq(s, op.v);
    case Operation::Kind::kSwap:
        return swp(s, op.v, op.w);
    case Operation::Kind::kCanon:
        return canon(s);
    }
    throw InvariantError("unknown operation kind");
}

}  // namespace

GeneralisedTwoGraphState apply(const GeneralisedTwoGraphState &s, const Operation &op) {
    try {
        return dispatch(s, op);
    } catch (const PreconditionError &e) {
        throw PreconditionError(op.to_string() + ": " + e.what());
    }
}

GeneralisedTwoGraphState apply_all(GeneralisedTwoGraphState s, const std::vector<Operation> &ops) {
    for (const auto &op : ops) {
        s = apply(s, op);
    }
    return s;
}

GraphReduction to_graph_state(const GeneralisedTwoGraphState &s) {
    GraphReduction out{s, {}};
    while (!out.state.is_flat()) {
        const int v = out.state.l().min();
        out.state = apply_h(out.state, v);
        out.transcript.push_back({Operation::Kind::kH, v, -1});
        if (static_cast<int>(out.transcript.size()) > s.size()) {
            throw InvariantError("graph-state reduction exceeded |L| steps on " + s.to_string());
        }
    }
    return out;
}

}  // namespace twograph
