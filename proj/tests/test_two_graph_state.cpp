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

#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "twograph/two_graph_state.hpp"

using namespace twograph;
using fixtures::five_vertex_state;

TEST(StateInvariants, RejectsBadTriples) {
    Gf2Graph g = Gf2Graph::from_edges(3, {{0, 1}});
    EXPECT_THROW(GeneralisedTwoGraphState(g, VertexSet{2}, VertexSet{}), InvariantError);
    EXPECT_THROW(GeneralisedTwoGraphState(g, VertexSet{0, 1}, VertexSet{2}), InvariantError);
    EXPECT_THROW(GeneralisedTwoGraphState(g, VertexSet{0, 5}, VertexSet{}), InvariantError);
    Gf2Graph looped = Gf2Graph::from_edges(3, {{0, 0}, {1, 2}});
    EXPECT_NO_THROW(GeneralisedTwoGraphState(looped, VertexSet{1}, VertexSet{1}));
    EXPECT_NO_THROW(GeneralisedTwoGraphState(g, VertexSet{0, 1, 2}, VertexSet{0, 1, 2}));
}

TEST(StateInvariants, DerivedGraphs) {
    const auto s = five_vertex_state(true);
    EXPECT_EQ(s.l(), (VertexSet{0, 1}));
    EXPECT_EQ(s.magnitude_graph(), Gf2Graph::from_edges(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 1}}));
    EXPECT_EQ(s.phase_graph(), Gf2Graph::from_edges(5, {{2, 3}, {2, 4}, {3, 4}, {3, 3}}));
    EXPECT_EQ(s.magnitude_graph() + s.phase_graph(), s.graph());
}

TEST(GraphState, FromSimpleGraph) {
    const auto path = Gf2Graph::from_edges(3, {{0, 1}, {1, 2}});
    const auto s = from_graph_state(path);
    EXPECT_EQ(s.r(), VertexSet::range(3));
    EXPECT_TRUE(s.q().empty());
    EXPECT_EQ(to_apf(s).to_string(), "m=1; p=2x0x1+2x1x2");
    EXPECT_EQ(*to_apf(s).boolean_phase_string(), "p=x0x1+x1x2");
    EXPECT_EQ(to_apf(from_graph_state(Gf2Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}))).phase_string(),
              "p=2x0x1+2x0x2+2x1x2");
    EXPECT_TRUE(from_graph_state(Gf2Graph(1)).is_flat());
    EXPECT_THROW(from_graph_state(Gf2Graph::from_edges(2, {{1, 1}})), PreconditionError);
}

TEST(AlgebraicPolarForm, FiveVertexStates) {
    const auto apf = to_apf(five_vertex_state(true));
    EXPECT_EQ(apf.magnitude_string(), "m=(x0+x2+x3+1)(x1+x2+x3)");
    EXPECT_EQ(apf.phase_string(), "p=2x2x3+2x2x4+2x3x4+x2+3x3");
    EXPECT_TRUE(apf.is_special_form());
    EXPECT_FALSE(apf.boolean_phase_string().has_value());
    const auto boolean = to_apf(five_vertex_state(false));
    EXPECT_EQ(boolean.phase_string(), "p=2x2x3+2x2x4+2x3x4+2x3");
    EXPECT_EQ(*boolean.boolean_phase_string(), "p=x2x3+x2x4+x3x4+x3");
    const auto empty = to_apf(GeneralisedTwoGraphState(Gf2Graph(2), VertexSet{0, 1}, VertexSet{}));
    EXPECT_EQ(empty.to_string(), "m=1; p=0");
}

TEST(AlgebraicPolarForm, MatchesFormulaPointwise) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const auto s = fixtures::random_state(n, rng);
        const auto apf = to_apf(s);
        const auto amps = fixtures::formula_amplitudes(s);
        ASSERT_EQ(apf.factors.size(), static_cast<std::size_t>(s.l().size()));
        for (const auto &f : apf.factors) {
            ASSERT_EQ((f.support & s.l()), VertexSet::single(f.pivot));
        }
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            std::size_t index = 0;
            for (int j = 0; j < n; ++j) {
                if ((x >> j) & 1U) {
                    index |= std::size_t{1} << (n - 1 - j);
                }
            }
            const bool m = apf.magnitude(x);
            ASSERT_EQ(m, std::abs(amps[index]) > 0.5);
            if (m) {
                const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
                ASSERT_LT(std::abs(ipow[apf.phase(x)] - amps[index]), 1e-12);
            }
        }
    }
}

TEST(ParityCheck, SystematicRows) {
    // m=(x2+x0+x1+1)(x3+x1+x4)(x5+x0+x4+1) with R={0,1,4}.
    const Gf2Graph g = Gf2Graph::from_edges(6, {{2, 0}, {2, 1}, {3, 1}, {3, 4}, {3, 3}, {5, 0}, {5, 4}});
    const GeneralisedTwoGraphState s(g, VertexSet{0, 1, 4}, VertexSet{});
    EXPECT_EQ(to_apf(s).magnitude_string(), "m=(x0+x1+x2+1)(x1+x3+x4)(x0+x4+x5+1)");
    const auto h = to_parity_check(s);
    EXPECT_EQ(h.row_strings(), (std::vector<std::string>{"111000", "010110", "100011"}));
    EXPECT_EQ(h.coset_leader_string(), "000100");
    EXPECT_TRUE(to_parity_check(from_graph_state(Gf2Graph(3))).rows.empty());
    const GeneralisedTwoGraphState one(Gf2Graph::from_edges(2, {{0, 1}}), VertexSet{1}, VertexSet{});
    EXPECT_EQ(to_apf(one).magnitude_string(), "m=(x0+x1+1)");
    EXPECT_EQ(to_parity_check(one).row_strings(), std::vector<std::string>{"11"});
    EXPECT_EQ(to_parity_check(one).coset_leader_string(), "00");
}

TEST(LcLoop, FormulaTerms) {
    Gf2Graph g(3);
    auto [g1, q1] = lc_loop(g, VertexSet{}, 1);
    EXPECT_EQ(g1, g);
    EXPECT_EQ(q1, VertexSet{1});
    const Gf2Graph star = Gf2Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    auto [g2, q2] = lc_loop(star, VertexSet{}, 0);
    EXPECT_EQ(g2.strip_loops(), lc(star, 0));
    EXPECT_TRUE(g2.is_simple());
    // Loop at v adds loops on N_v; Q ∩ N_v adds loops there too.
    Gf2Graph looped = star;
    looped.toggle_loop(0);
    auto [g3, q3] = lc_loop(looped, VertexSet{2, 3}, 0);
    EXPECT_EQ(g3, lc(star, 0) + delta(4, VertexSet{0, 1}));
    EXPECT_EQ(q3, (VertexSet{0, 1}));
}

TEST(Swap, BooleanFiveVertexExample) {
    const auto s = swp(five_vertex_state(false), 1, 3);
    EXPECT_EQ(s.graph().to_string(), "{01,12,13,14,23,00,11,22,33,44}");
    EXPECT_EQ(s.r(), (VertexSet{1, 2, 4}));
    EXPECT_TRUE(fixtures::identical(fixtures::formula_amplitudes(s),
                                    fixtures::formula_amplitudes(five_vertex_state(false))));
}

TEST(Swap, Preconditions) {
    const auto s = five_vertex_state(true);
    EXPECT_THROW(swp(s, 2, 3), PreconditionError);
    EXPECT_THROW(swp(s, 0, 4), PreconditionError);
    EXPECT_THROW(swp(s, 0, 9), PreconditionError);
}

TEST(Swap, PreservesAmplitudesExactly) {
    std::mt19937_64 rng(3);
    int q_branch = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto s = fixtures::random_state(n, rng);
        const auto before = fixtures::formula_amplitudes(s);
        for (int v : s.l()) {
            for (int w : open_neighborhood(s.graph(), v)) {
                q_branch += s.q().contains(w);
                const auto t = swp(s, v, w);
                ASSERT_TRUE(t.is_valid());
                ASSERT_EQ(t.r(), (s.r() | VertexSet::single(v)) - VertexSet::single(w));
                ASSERT_TRUE(fixtures::identical(fixtures::formula_amplitudes(t), before))
                    << s.to_string() << " swp " << v << w;
                ASSERT_TRUE(fixtures::identical(fixtures::formula_amplitudes(swp(t, w, v)), before));
            }
        }
    }
    EXPECT_GT(q_branch, 100);
}

TEST(RewriteCases, Classification) {
    const auto s = five_vertex_state(true);
    EXPECT_EQ(rewrite_case(s, 0), RewriteCase::kInL);
    EXPECT_EQ(rewrite_case(s, 4), RewriteCase::kBallInR);
    EXPECT_EQ(rewrite_case(s, 3), RewriteCase::kNeedsSwap);
    EXPECT_THROW(rewrite_case(s, 5), PreconditionError);
    EXPECT_THROW(apply_h(GeneralisedTwoGraphState(), 0), PreconditionError);
}

TEST(Hadamard, BooleanFiveVertexExample) {
    const auto s = apply_h(five_vertex_state(false), 3, 1);
    EXPECT_EQ(s.r(), (VertexSet{1, 2, 3, 4}));
    const auto apf = to_apf(s);
    EXPECT_EQ(apf.magnitude_string(), "m=(x0+x1)");
    EXPECT_EQ(*apf.boolean_phase_string(), "p=x1x2+x1x3+x1x4+x2x3+x1+x2+x3+x4");
    // Smallest L-neighbour of 3 is 0; the choice is reconciled by canon.
    const auto other = apply_h(five_vertex_state(false), 3);
    EXPECT_EQ(canon(other).graph(), canon(s).graph());
}

TEST(Hadamard, GeneralisedFiveVertexExampleAgreesWithFormulaOracle) {
    const auto input = five_vertex_state(true);
    const auto s = apply_h(input, 3, 1);
    EXPECT_EQ(s.r(), (VertexSet{1, 2, 3, 4}));
    EXPECT_EQ(to_apf(s).magnitude_string(), "m=(x0+x1)");
    const double h = std::sqrt(0.5);
    const std::complex<double> hm[2][2] = {{h, h}, {h, -h}};
    EXPECT_TRUE(fixtures::proportional(fixtures::formula_amplitudes(s),
                                       fixtures::apply_matrix(fixtures::formula_amplitudes(input), 5, 3, hm)));
    EXPECT_EQ(to_apf(s).phase_string(), "p=2x1x3+2x1x4+2x2x3+x1+2x2+2x3+2x4");
    EXPECT_EQ(s.q(), VertexSet{1});
}

TEST(Hadamard, CaseTwoWithLoopSet) {
    // |+> → |0>.
    const GeneralisedTwoGraphState plus(Gf2Graph(1), VertexSet{0}, VertexSet{});
    const auto zero = apply_h(plus, 0);
    EXPECT_TRUE(zero.r().empty());
    EXPECT_EQ(to_apf(zero).magnitude_string(), "m=(x0+1)");
    // B_v ⊆ R and Q_v = 1.
    const GeneralisedTwoGraphState s(Gf2Graph::from_edges(2, {{0, 1}}), VertexSet{0, 1}, VertexSet{0});
    const auto t = apply_h(s, 0);
    auto [g2, q2] = lc_loop(s.graph(), s.q(), 0);
    EXPECT_EQ(t.graph(), g2 + delta(2, VertexSet{0, 1}));
    EXPECT_EQ(t.q(), q2 | VertexSet{0});
    EXPECT_EQ(t.r(), s.r());
}

TEST(Hadamard, ExplicitPartnerMustBeLNeighbour) {
    EXPECT_THROW(apply_h(five_vertex_state(true), 3, 2), PreconditionError);
    EXPECT_THROW(apply_n(five_vertex_state(true), 3, 4), PreconditionError);
    EXPECT_NO_THROW(apply_n(five_vertex_state(true), 3, 1));
}

TEST(Negahadamard, OneQubit) {
    const GeneralisedTwoGraphState plus(Gf2Graph(1), VertexSet{0}, VertexSet{});
    const auto s = apply_n(plus, 0);
    EXPECT_EQ(s.graph(), Gf2Graph::from_edges(1, {{0, 0}}));
    EXPECT_EQ(s.q(), VertexSet{0});
    EXPECT_EQ(to_apf(s).phase_string(), "p=3x0");
    const auto back = apply_n_inv(s, 0);
    EXPECT_EQ(back.graph(), Gf2Graph(1));
    EXPECT_TRUE(back.q().empty());
    EXPECT_EQ(back.r(), VertexSet{0});
}

TEST(Negahadamard, CaseTwoWithQv) {
    const GeneralisedTwoGraphState s(Gf2Graph::from_edges(2, {{0, 1}}), VertexSet{0, 1}, VertexSet{0, 1});
    const auto t = apply_n(s, 1);
    EXPECT_EQ(t.r(), VertexSet{0});
    EXPECT_EQ(t.q(), VertexSet{0});
    EXPECT_EQ(t.graph(), Gf2Graph::from_edges(2, {{0, 1}, {1, 1}}));
}

namespace {

struct Sample {
    GeneralisedTwoGraphState s;
    std::vector<std::complex<double>> amps;
};

std::vector<Sample> samples(int count, std::uint64_t seed, int max_n) {
    std::mt19937_64 rng(seed);
    std::vector<Sample> out;
    for (int t = 0; t < count; ++t) {
        const int n = 1 + static_cast<int>(rng() % max_n);
        auto s = fixtures::random_state(n, rng);
        out.push_back({s, fixtures::formula_amplitudes(s)});
    }
    return out;
}

}  // namespace

TEST(RewriteOracle, MatchesLocalUnitaries) {
    const double h = std::sqrt(0.5);
    const std::complex<double> i(0, 1);
    const std::complex<double> hm[2][2] = {{h, h}, {h, -h}};
    const std::complex<double> nm[2][2] = {{h, h * i}, {h, -h * i}};
    const std::complex<double> ninv[2][2] = {{h, h}, {-h * i, h * i}};
    for (const auto &[s, amps] : samples(600, 5, 6)) {
        for (int v = 0; v < s.size(); ++v) {
            const auto th = apply_h(s, v);
            const auto tn = apply_n(s, v);
            const auto ti = apply_n_inv(s, v);
            ASSERT_TRUE(th.is_valid() && tn.is_valid() && ti.is_valid());
            const int n = s.size();
            ASSERT_TRUE(fixtures::proportional(fixtures::formula_amplitudes(th), fixtures::apply_matrix(amps, n, v, hm)))
                << "H" << v << " on " << s.to_string();
            ASSERT_TRUE(fixtures::proportional(fixtures::formula_amplitudes(tn), fixtures::apply_matrix(amps, n, v, nm)))
                << "N" << v << " on " << s.to_string();
            ASSERT_TRUE(
                fixtures::proportional(fixtures::formula_amplitudes(ti), fixtures::apply_matrix(amps, n, v, ninv)))
                << "Ninv" << v << " on " << s.to_string();
        }
    }
}

TEST(RewriteIdentities, ExactOutsideSwapCase) {
    for (const auto &[s, amps] : samples(500, 8, 6)) {
        for (int v = 0; v < s.size(); ++v) {
            const auto c = rewrite_case(s, v);
            const auto hh = apply_h(apply_h(s, v), v);
            const auto n3 = apply_n(apply_n(apply_n(s, v), v), v);
            const auto ni = apply_n_inv(apply_n(s, v), v);
            const auto in = apply_n(apply_n_inv(s, v), v);
            ASSERT_TRUE(apply_n(apply_n(s, v), v).same_representation(apply_n_inv(s, v)));
            ASSERT_TRUE(apply_lambda_sq(s, v).same_representation(apply_n_inv(s, v)));
            ASSERT_TRUE(apply_lambda(s, v).same_representation(apply_n(s, v)));
            if (c != RewriteCase::kNeedsSwap) {
                ASSERT_TRUE(hh.same_representation(s)) << s.to_string() << " H" << v;
                ASSERT_TRUE(n3.same_representation(s)) << s.to_string() << " N" << v;
                ASSERT_TRUE(ni.same_representation(s)) << s.to_string() << " N" << v;
            }
            const auto cs = canon(s);
            ASSERT_TRUE(canon(hh).same_representation(cs)) << s.to_string() << " H" << v;
            ASSERT_TRUE(canon(n3).same_representation(cs));
            ASSERT_TRUE(canon(ni).same_representation(cs));
            ASSERT_TRUE(canon(in).same_representation(cs));
        }
    }
}

TEST(RewriteIdentities, ExhaustiveSmallStates) {
    // Every valid triple for n ≤ 3 with every loop and Q pattern.
    for (int n = 1; n <= 3; ++n) {
        for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r) {
            const int pairs = n * (n + 1) / 2;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
                Gf2Graph g(n);
                int k = 0;
                bool ok = true;
                for (int i = 0; i < n; ++i) {
                    for (int j = i; j < n; ++j, ++k) {
                        if ((bits >> k) & 1U) {
                            ok = ok && (i == j || ((r >> i) & 1U) || ((r >> j) & 1U));
                            g.toggle_edge(i, j);
                        }
                    }
                }
                if (!ok) {
                    continue;
                }
                for (std::uint64_t q = r;; q = (q - 1) & r) {
                    const GeneralisedTwoGraphState s(g, VertexSet(r), VertexSet(q));
                    const auto cs = canon(s);
                    for (int v = 0; v < n; ++v) {
                        ASSERT_TRUE(canon(apply_h(apply_h(s, v), v)).same_representation(cs));
                        ASSERT_TRUE(canon(apply_n(apply_n(apply_n(s, v), v), v)).same_representation(cs));
                        ASSERT_TRUE(canon(apply_n_inv(apply_n(s, v), v)).same_representation(cs));
                    }
                    if (q == 0) {
                        break;
                    }
                }
            }
        }
    }
}

TEST(Canon, IdempotentAndExact) {
    for (const auto &[s, amps] : samples(400, 13, 8)) {
        const auto c = canon(s);
        ASSERT_TRUE(is_canonised(c));
        ASSERT_EQ(canon(c), c);
        ASSERT_TRUE(fixtures::identical(fixtures::formula_amplitudes(c), amps)) << s.to_string();
        if (is_canonised(s)) {
            ASSERT_EQ(c, s);
        }
    }
}

TEST(Canon, UniqueOverSwapOrbit) {
    std::mt19937_64 rng(17);
    for (const auto &[s, amps] : samples(300, 19, 7)) {
        auto t = s;
        for (int step = 0; step < 6; ++step) {
            std::vector<std::pair<int, int>> moves;
            for (int v : t.l()) {
                for (int w : open_neighborhood(t.graph(), v)) {
                    moves.emplace_back(v, w);
                }
            }
            if (moves.empty()) {
                break;
            }
            const auto [v, w] = moves[rng() % moves.size()];
            t = swp(t, v, w);
        }
        ASSERT_EQ(canon(t), canon(s)) << s.to_string();
    }
}

TEST(GraphReduction, ReachesFlatState) {
    const auto empty = to_graph_state(from_graph_state(Gf2Graph::from_edges(3, {{0, 1}})));
    EXPECT_TRUE(empty.transcript.empty());
    const auto red = to_graph_state(five_vertex_state(false));
    EXPECT_EQ(red.transcript.size(), 2U);
    EXPECT_TRUE(red.state.is_flat());
    EXPECT_EQ(red.transcript.front().to_string(), "H0");
    for (const auto &[s, amps] : samples(100, 23, 6)) {
        const auto r = to_graph_state(s);
        ASSERT_TRUE(r.state.is_flat());
        ASSERT_LE(r.transcript.size(), static_cast<std::size_t>(s.l().size()));
        ASSERT_EQ(apply_all(s, r.transcript), r.state);
    }
}

TEST(Operations, ParseAndPrint) {
    const auto ops = Operation::parse_list("H3 N0 Ninv2 L1 L22 swap(1, 3) canon L(23)");
    ASSERT_EQ(ops.size(), 8U);
    EXPECT_EQ(ops[0].kind, Operation::Kind::kH);
    EXPECT_EQ(ops[2].kind, Operation::Kind::kNInv);
    EXPECT_EQ(ops[4].kind, Operation::Kind::kLambdaSq);
    EXPECT_EQ(ops[4].v, 2);
    EXPECT_EQ(ops[5].w, 3);
    EXPECT_EQ(ops[7].kind, Operation::Kind::kLambda);
    EXPECT_EQ(ops[7].v, 23);
    for (const auto &op : ops) {
        EXPECT_EQ(Operation::parse(op.to_string()), op);
    }
    EXPECT_THROW(Operation::parse("X3"), ParseError);
    EXPECT_THROW(Operation::parse("H"), ParseError);
    EXPECT_THROW(Operation::parse("swap(1)"), ParseError);
    EXPECT_THROW(Operation::parse_list("swap(1,"), ParseError);
}

TEST(Operations, ScriptsRoundTrip) {
    const auto s = five_vertex_state(false);
    EXPECT_TRUE(apply_all(s, Operation::parse_list("H4 H4")).same_representation(s));
    EXPECT_TRUE(apply_all(s, Operation::parse_list("N0 N0 N0")).same_representation(s));
    EXPECT_EQ(apply_all(s, Operation::parse_list("canon")), canon(s));
    EXPECT_THROW(apply_all(s, Operation::parse_list("H7")), PreconditionError);
}
