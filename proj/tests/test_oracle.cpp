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

#include <cstdlib>

#include "mppg/graph_algos.hpp"
#include "mppg/mpp_solver.hpp"
#include "mppg/oracle.hpp"

#include "support.hpp"

using namespace mppg;
using namespace mppg::testing;

TEST_CASE("oracle values on tiny games")
{
    Game five = parse_game("mppg v1\nkind mean-payoff-parity\nstate a owner=2 priority=0\nedge a a weight=5\n");
    CHECK(oracle_mp_value(five) == ValueFunction{Value(5)});
    Game two = parse_game("mppg v1\nkind mean-payoff-parity\nstate a owner=2 priority=0\nstate b owner=1 priority=0\n"
                          "edge a b weight=1\nedge b a weight=3\n");
    CHECK(oracle_mp_value(two) == ValueFunction{Value(2), Value(2)});
    CHECK(oracle_mpp_value(fixture("fig1.mppg"))[0] == Value(1));
    CHECK(oracle_penalty_value(fixture("fig4.mppg"))[0] == Value(0));
}

TEST_CASE("brute-force cycle means")
{
    Game loop = parse_game("mppg v1\nkind mean-payoff-parity\nstate a owner=1 priority=0\nedge a a weight=-3\n");
    CHECK(brute_cycle_max_mean(loop, Scc{{0}, true}) == Rat(-3));
    Game two = parse_game("mppg v1\nkind mean-payoff-parity\nstate a owner=1 priority=0\nstate b owner=1 priority=0\n"
                          "edge a b weight=1\nedge b a weight=3\n");
    CHECK(brute_cycle_max_mean(two, Scc{{0, 1}, true}) == Rat(2));
    GameBuilder b;
    for (int i = 0; i < 9; ++i) b.add_state("s" + std::to_string(i), Owner::P1, 0);
    for (StateId i = 0; i < 9; ++i) b.add_edge(i, (i + 1) % 9, 0);
    Game big = std::move(b).build();
    CHECK_THROWS_AS(brute_cycle_max_mean(big, scc_decompose(big, big.all_states())[0]), SccTooLarge);
}

TEST_CASE("strategy space enumerates every combination once")
{
    Game g = random_mpp(8, 6, 3);
    for (Owner pl : {Owner::P1, Owner::P2}) {
        StrategySpace space(g, pl);
        std::uint64_t expected = 1;
        for (StateId q = 0; q < g.size(); ++q) {
            if (g.owner(q) == pl) expected *= g.successors(q).size();
        }
        CHECK(space.size() == expected);
        std::vector<MemorylessStrategy> seen;
        for (std::uint64_t i = 0; i < space.size(); ++i) {
            MemorylessStrategy s = space.at(i);
            check_strategy(g, s);
            CHECK(std::find(seen.begin(), seen.end(), s) == seen.end());
            seen.push_back(s);
        }
    }
}

TEST_CASE("the oracle equals one_player_value when Pl2 has no choices")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GenParams p;
        p.seed = 12000 + seed;
        p.states = 1 + seed % 6;
        Game g0 = gen_game(p);
        GameBuilder b;
        for (StateId q = 0; q < g0.size(); ++q) b.add_state(g0.name(q), Owner::P1, g0.priority(q));
        for (StateId q = 0; q < g0.size(); ++q) {
            for (const auto& e : g0.successors(q)) b.add_edge(q, e.dst, e.weight);
        }
        Game g = std::move(b).build();
        CHECK(oracle_mpp_value(g) == one_player_value(g, Owner::P1));
    }
}

TEST_CASE("enumeration bound")
{
    Game g = random_mpp(5, 6, 3);
    OracleOptions tight;
    tight.max_strategies = 0;
    CHECK_THROWS_AS(oracle_mpp_value(g, tight), SpaceTooLarge);

    setenv("GAMESOLVE_MAX_ENUM", "17", 1);
    CHECK(default_enumeration_bound() == 17);
    unsetenv("GAMESOLVE_MAX_ENUM");
    CHECK(default_enumeration_bound() == 1000000);
}

TEST_CASE("parallel enumeration gives the same answer")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Game g = random_mpp(13000 + seed);
        OracleOptions par;
        par.threads = 3;
        CHECK(oracle_mpp_value(g, par) == oracle_mpp_value(g));
    }
}
