/*
 * Copyright 2026 The mppg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "doctest.h"

#include <random>

#include "mppg/graph_algos.hpp"
#include "mppg/mpp_solver.hpp"
#include "mppg/oracle.hpp"
#include "mppg/penalty_solver.hpp"

#include "support.hpp"

using namespace mppg;
using namespace mppg::testing;

namespace {

ValueFunction negated_prefix(const ValueFunction& v, std::size_t n)
{
    return negate(ValueFunction(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)));
}

} // namespace

TEST_CASE("penalty of a prefix")
{
    Game g = fixture("fig4.mppg");
    const StateId q1 = g.id("q1");
    const StateId q2 = g.id("q2");
    CHECK(penalty_of_prefix(g, permissive_multi_strategy(g), {q1, q1, q1, q2, q1}) == Rat(0));

    MultiStrategy block_loop{{{q2}, {}}};
    CHECK(blocked_weight(g, block_loop, q1) == 2);
    CHECK(penalty_of_prefix(g, block_loop, {q1}) == Rat(2));
    CHECK(penalty_of_prefix(g, block_loop, {q1, q2, q1}) == Rat(4));
    CHECK_THROWS_AS(penalty_of_prefix(g, block_loop, {q1, q1}), InconsistentPrefix);
    CHECK_THROWS_AS(penalty_of_prefix(g, block_loop, {q2, q2}), InconsistentPrefix);
}

TEST_CASE("penalty of random prefixes equals a direct re-summation")
{
    std::mt19937_64 rng(31);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Game g = random_penalty(9000 + seed, 6);
        MultiStrategy s = permissive_multi_strategy(g);
        for (StateId q = 0; q < g.size(); ++q) {
            if (g.owner(q) != Owner::P1) continue;
            std::vector<StateId> keep;
            for (const auto& e : g.successors(q)) {
                if (rng() & 1) keep.push_back(e.dst);
            }
            if (keep.empty()) keep.push_back(g.successors(q).back().dst);
            s.allowed[q] = keep;
        }
        std::vector<StateId> path{static_cast<StateId>(rng() % g.size())};
        for (int i = 0; i < 12; ++i) {
            StateId q = path.back();
            if (g.owner(q) == Owner::P1) {
                path.push_back(s.allowed[q][rng() % s.allowed[q].size()]);
            } else {
                path.push_back(g.successors(q)[rng() % g.successors(q).size()].dst);
            }
        }
        std::int64_t total = 0;
        for (auto q : path) {
            if (g.owner(q) != Owner::P1) continue;
            for (const auto& e : g.successors(q)) {
                if (std::find(s.allowed[q].begin(), s.allowed[q].end(), e.dst) == s.allowed[q].end()) {
                    total += e.weight;
                }
            }
        }
        CHECK(penalty_of_prefix(g, s, path) == Rat(total));
    }
}

TEST_CASE("Fig. 4 can be won with mean penalty 0")
{
    Game g = fixture("fig4.mppg");
    CHECK(solve_penalty(g) == ValueFunction{Value(0), Value(0)});
    CHECK(oracle_penalty_value(g) == ValueFunction{Value(0), Value(0)});
    // Memoryless: either the loop is always blocked (penalty 2 every other step)...
    CHECK(eval_multi_strategy(g, MultiStrategy{{{g.id("q2")}, {}}})[g.id("q1")] == Value(1));
    // ...or the resolver loops forever on the odd state.
    CHECK(eval_multi_strategy(g, permissive_multi_strategy(g))[g.id("q1")].is_pos_inf());
}

TEST_CASE("games without choices: penalty 0 or +inf by parity")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GenParams p;
        p.seed = 9500 + seed;
        p.states = 1 + seed % 5;
        p.max_degree = 1;
        p.kind = GameKind::MeanPenaltyParity;
        Game g = gen_game(p);
        ValueFunction v = solve_penalty(g);
        ValueFunction parity = solve_mpp(map_weights(g, [](Weight) { return Weight{0}; }));
        for (StateId q = 0; q < g.size(); ++q) {
            CHECK((v[q] == Value(0) || v[q].is_pos_inf()));
            CHECK(v[q].is_pos_inf() == parity[q].is_neg_inf());
        }
        CHECK(eval_multi_strategy(g, permissive_multi_strategy(g)) == v);
    }
}

TEST_CASE("exponential reduction shape")
{
    Game g = fixture("fig4.mppg");
    ExpReduction red = reduce_exponential(g);
    // q1 has two successors: three bar states; q2 has one.
    CHECK(red.base_states == 2);
    CHECK(red.game.size() == 2 + 3 + 1);
    const StateId full = red.game.id("[q1:q1,q2]");
    CHECK(red.game.weight(g.id("q1"), full) == 0);
    CHECK(red.game.weight(g.id("q1"), red.game.id("[q1:q2]")) == -4);
    CHECK(red.game.owner(full) == Owner::P2);
    CHECK(red.game.priority(full) == g.max_priority());
    CHECK(red.base[full] == g.id("q1"));
    CHECK(red.allowed[full] == std::vector<StateId>{g.id("q1"), g.id("q2")});
    CHECK(negated_prefix(solve_mpp(red.game), 2) == solve_penalty(g));

    CHECK_THROWS_AS(reduce_exponential(g, 1), DegreeTooLarge);
}

TEST_CASE("polynomial reduction shape on Fig. 4")
{
    Game g = fixture("fig4.mppg");
    Game r = reduce_polynomial(g);
    // q1 (Pl1, two successors): select 1.0, 2.0, 2.1, 3.1, 3.2; allow 1.0, 2.0, 2.1; block 1.0, 2.1.
    // q2 (Pl2, one successor padded to two): select 1.0, 2.1, 3.1, 3.2; allow 1.0, 2.1.
    CHECK(r.size() == 2 + 10 + 6);
    CHECK(r.edge_count() == 2 + 13 + 7);
    CHECK(r.owner(g.id("q2")) == Owner::P1);
    CHECK(r.weight(r.id("q1.b.1.0"), r.id("q1.s.2.0")) == -12);
    CHECK(r.weight(r.id("q1.b.2.1"), r.id("q1.s.3.1")) == -6);
    CHECK(r.owner(r.id("q1.a.2.1")) == Owner::P2);
    CHECK(r.owner(r.id("q1.s.2.1")) == Owner::P1);
    CHECK_FALSE(r.has_state("q2.b.1.0"));
    CHECK(negated_prefix(solve_mpp(r), 2) == solve_penalty(g));
}

TEST_CASE("mean-penalty without parity")
{
    Game loop = parse_game("mppg v1\nkind mean-penalty-parity\nstate a owner=1 priority=0\nedge a a weight=4\n");
    CHECK(ssolve_mp(loop) == ValueFunction{Value(0)});

    Game escape = parse_game("mppg v1\nkind mean-penalty-parity\nstate a owner=1 priority=0\n"
                             "state b owner=2 priority=0\nedge a a weight=3\nedge a b weight=1\nedge b a weight=0\n");
    ValueFunction v = ssolve_mp(escape);
    CHECK(v == negated_prefix(solve_mp(reduce_exponential(escape).game), 2));
    CHECK(v == ValueFunction{Value(0), Value(0)});

    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Game g = with_zero_priorities(random_penalty(9800 + seed));
        CHECK(ssolve_mp(g) == oracle_penalty_value(g));
    }
}

TEST_CASE("solver, both reductions and the oracle agree")
{
    int compared = 0;
    for (std::uint64_t seed = 0; seed < 90; ++seed) {
        Game g = random_penalty(10000 + seed);
        ValueFunction v = solve_penalty(g);
        CHECK(v == negated_prefix(solve_mpp(reduce_exponential(g).game), g.size()));
        CHECK(v == negated_prefix(solve_mpp(reduce_polynomial(g)), g.size()));
        try {
            CHECK(v == oracle_penalty_value(g));
            ++compared;
        } catch (const SpaceTooLarge&) {
        }
    }
    CHECK(compared >= 60);
}

TEST_CASE("memoryless multi-strategies bound the value from above")
{
    std::mt19937_64 rng(77);
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Game g = random_penalty(10500 + seed);
        ValueFunction v = solve_penalty(g);
        for (int rep = 0; rep < 4; ++rep) {
            MultiStrategy s = permissive_multi_strategy(g);
            for (StateId q = 0; q < g.size(); ++q) {
                if (g.owner(q) != Owner::P1) continue;
                std::vector<StateId> keep;
                for (const auto& e : g.successors(q)) {
                    if (rng() % 3) keep.push_back(e.dst);
                }
                if (!keep.empty()) s.allowed[q] = keep;
            }
            ValueFunction ev = eval_multi_strategy(g, s);
            for (StateId q = 0; q < g.size(); ++q) CHECK(ev[q] >= v[q]);
        }
    }
}

TEST_CASE("bar sets")
{
    Game g = fixture("fig4.mppg");
    ExpReduction red = reduce_exponential(g);
    CHECK(bar_sets(g, red, StateSet(2), BarMode::Rebar).empty());
    StateSet just_q2 = bar_sets(g, red, StateSet(2, {g.id("q2")}), BarMode::Rebar);
    CHECK(just_q2.size() == 2);
    CHECK(just_q2.contains(red.game.id("[q1:q2]")));
    CHECK(bar_sets(g, red, StateSet(2, {g.id("q2")}), BarMode::Drebar).size() == 3);
    Game other = parse_game("mppg v1\nkind mean-penalty-parity\nstate a owner=1 priority=0\nedge a a weight=1\n");
    CHECK_THROWS_AS(bar_sets(other, red, StateSet(1), BarMode::Rebar), MismatchedGames);

    std::mt19937_64 rng(41);
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Game h = random_penalty(11000 + seed);
        ExpReduction r = reduce_exponential(h);
        StateSet a = random_set(rng, h.size());
        auto rebar = [&](const StateSet& s) { return bar_sets(h, r, s, BarMode::Rebar); };
        auto drebar = [&](const StateSet& s) { return bar_sets(h, r, s, BarMode::Drebar); };
        CHECK(rebar(a.complement()) == drebar(a).complement());
        CHECK(drebar(a.complement()) == rebar(a).complement());
        StateSet up(r.game.size());
        for (auto q : a.members()) up.insert(q);
        CHECK(rebar(attractor(h, Owner::P1, a).set) == attractor(r.game, Owner::P1, up).set);
        CHECK(drebar(attractor(h, Owner::P2, a).set) == attractor(r.game, Owner::P2, up).set);
    }
}

TEST_CASE("multi-strategy checks")
{
    Game g = fixture("fig4.mppg");
    CHECK_THROWS_AS(check_multi_strategy(g, MultiStrategy{{{}, {}}}), StrategyDomainMismatch);
    CHECK_THROWS_AS(check_multi_strategy(g, MultiStrategy{{{0}, {0}}}), StrategyDomainMismatch);
    CHECK_NOTHROW(check_multi_strategy(g, permissive_multi_strategy(g)));
}
