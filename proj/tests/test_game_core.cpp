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

#include "mppg/game.hpp"
#include "mppg/game_io.hpp"
#include "mppg/rational.hpp"

#include "support.hpp"

using namespace mppg;
using namespace mppg::testing;

TEST_CASE("rationals stay in lowest terms with positive denominators")
{
    CHECK(Rat(6, -4).num() == -3);
    CHECK(Rat(6, -4).den() == 2);
    CHECK(Rat(5).str() == "5/1");
    CHECK(Rat::parse("-10/4") == Rat(-5, 2));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(-1, 3));
    CHECK_THROWS(Rat(1, 0));
    CHECK_THROWS(Rat::parse("1/x"));
}

TEST_CASE("values order the infinities around the rationals")
{
    CHECK(Value::neg_inf() < Value(Rat(-1000000)));
    CHECK(Value(Rat(1000000)) < Value::pos_inf());
    CHECK((-Value::neg_inf()).is_pos_inf());
    CHECK(Value::parse("-inf").is_neg_inf());
    CHECK(Value::parse("inf").is_pos_inf());
    CHECK(Value::parse("3/6") == Value(Rat(1, 2)));
    CHECK(Value::neg_inf().str() == "-inf");
}

TEST_CASE("the Fig. 1 file parses to two states and three edges")
{
    Game g = fixture("fig1.mppg");
    CHECK(g.size() == 2);
    CHECK(g.edge_count() == 3);
    CHECK(g.kind() == GameKind::MeanPayoffParity);
    StateId q1 = g.id("q1");
    CHECK(g.owner(q1) == Owner::P1);
    CHECK(g.priority(q1) == 1);
    CHECK(g.weight(q1, q1) == 1);
    GameStats st = game_stats(g);
    CHECK(st.max_abs_weight == 1);
    CHECK(st.max_degree == 2);
    CHECK(st.priorities == 2);
}

TEST_CASE("parser rejects malformed files with the line number")
{
    const std::string head = "mppg v1\nkind mean-payoff-parity\n";
    CHECK_THROWS_AS(parse_game(head + "state a owner=1 priority=0\n"), ParseError);
    try {
        parse_game(head + "state a owner=1 priority=0\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("state without successor") != std::string::npos);
    }
    try {
        parse_game("mppg v1\nkind mean-penalty-parity\nstate a owner=1 priority=0\nedge a a weight=-1\n");
        FAIL("negative penalty weight accepted");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("negative weight") != std::string::npos);
        CHECK(e.line == 4);
    }
    CHECK_THROWS_AS(parse_game("mppg v2\n"), ParseError);
    CHECK_THROWS_AS(parse_game(head + "state a owner=3 priority=0\nedge a a weight=0\n"), ParseError);
    CHECK_THROWS_AS(parse_game(head + "state a owner=1 priority=0\nedge a b weight=0\n"), ParseError);
    CHECK_THROWS_AS(parse_game(head + "state a owner=1 priority=0\nedge a a weight=0\nedge a a weight=1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_game(head + "state a owner=1 priority=0\nstate a owner=1 priority=0\n"), ParseError);
}

TEST_CASE("restrict keeps subarenas and refuses the rest")
{
    Game g = fixture("fig1.mppg");
    Game same = restrict(g, g.all_states());
    CHECK(serialize_game(same) == serialize_game(g));

    Game only_q1 = restrict(g, StateSet(2, {g.id("q1")}));
    CHECK(only_q1.size() == 1);
    CHECK(only_q1.successors(0).size() == 1);
    CHECK(only_q1.successors(0)[0].dst == 0);

    CHECK_THROWS_AS(restrict(g, StateSet(2, {g.id("q2")})), NotASubarena);
}

TEST_CASE("game_stats follows the size formula")
{
    Game zero = parse_game("mppg v1\nkind mean-payoff-parity\nstate a owner=1 priority=0\nedge a a weight=0\n");
    CHECK(game_stats(zero).max_abs_weight == 1);
    Game neg = parse_game("mppg v1\nkind mean-payoff-parity\nstate a owner=2 priority=4\nedge a a weight=-8\n");
    GameStats st = game_stats(neg);
    CHECK(st.max_abs_weight == 8);
    CHECK(st.size == 4);
}

TEST_CASE("parse and serialize are inverse on random games")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Game g = random_mpp(seed, 8);
        CHECK(serialize_game(parse_game(serialize_game(g))) == serialize_game(g));
        Game p = random_penalty(seed, 8);
        CHECK(serialize_game(parse_game(serialize_game(p))) == serialize_game(p));
    }
}

TEST_CASE("restrict preserves owners, priorities and weights on random subarenas")
{
    std::mt19937_64 rng(3);
    int tried = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Game g = random_mpp(seed, 7);
        StateSet s = random_set(rng, g.size());
        bool sub = true;
        for (auto q : s.members()) {
            bool keeps = false;
            for (const auto& e : g.successors(q)) keeps = keeps || s.contains(e.dst);
            sub = sub && keeps;
        }
        if (!sub || s.empty()) continue;
        ++tried;
        Subgame r = restrict_mapped(g, s);
        for (StateId i = 0; i < r.game.size(); ++i) {
            StateId q = r.origin[i];
            CHECK(r.game.owner(i) == g.owner(q));
            CHECK(r.game.priority(i) == g.priority(q));
            CHECK(r.game.name(i) == g.name(q));
            for (const auto& e : r.game.successors(i)) CHECK(e.weight == g.weight(q, r.origin[e.dst]));
            std::size_t inside = 0;
            for (const auto& e : g.successors(q)) inside += s.contains(e.dst) ? 1 : 0;
            CHECK(r.game.successors(i).size() == inside);
        }
    }
    CHECK(tried > 20);
}

TEST_CASE("every parsed game gives every state a successor")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Game g = parse_game(serialize_game(random_mpp(seed, 9, 4)));
        for (StateId q = 0; q < g.size(); ++q) CHECK(!g.successors(q).empty());
    }
}
