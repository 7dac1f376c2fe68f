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

#include <set>

#include "mppg/game_io.hpp"
#include "mppg/generator.hpp"

using namespace mppg;

TEST_CASE("one state, one edge: a self-loop")
{
    GenParams p;
    p.states = 1;
    p.max_degree = 1;
    Game g = gen_game(p);
    REQUIRE(g.size() == 1);
    REQUIRE(g.successors(0).size() == 1);
    CHECK(g.successors(0)[0].dst == 0);
    CHECK(g.name(0) == "q0");
}

TEST_CASE("same seed, same game; different seeds differ")
{
    GenParams p;
    p.seed = 99;
    CHECK(serialize_game(gen_game(p)) == serialize_game(gen_game(p)));
    std::set<std::string> distinct;
    for (std::uint64_t s = 0; s < 20; ++s) {
        p.seed = s;
        distinct.insert(serialize_game(gen_game(p)));
    }
    CHECK(distinct.size() > 15);
}

TEST_CASE("generated games respect their parameters and are valid")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        GenParams p;
        p.seed = seed;
        p.states = 1 + seed % 9;
        p.max_degree = 1 + seed % 4;
        p.max_weight = static_cast<Weight>(seed % 5);
        p.priorities = static_cast<Priority>(1 + seed % 3);
        p.priority_offset = static_cast<Priority>(seed % 2);
        p.kind = seed % 2 ? GameKind::MeanPenaltyParity : GameKind::MeanPayoffParity;
        Game g = gen_game(p);
        CHECK(g.size() == p.states);
        CHECK(g.kind() == p.kind);
        for (StateId q = 0; q < g.size(); ++q) {
            CHECK(!g.successors(q).empty());
            CHECK(g.successors(q).size() <= p.max_degree);
            CHECK(g.priority(q) >= p.priority_offset);
            CHECK(g.priority(q) < p.priority_offset + p.priorities);
            for (const auto& e : g.successors(q)) {
                CHECK(e.weight <= p.max_weight);
                CHECK(e.weight >= (p.kind == GameKind::MeanPenaltyParity ? 0 : -p.max_weight));
            }
        }
        // Survives the validating parser.
        CHECK_NOTHROW(parse_game(serialize_game(g)));
    }
}

TEST_CASE("invalid parameters")
{
    GenParams p;
    p.states = 0;
    CHECK_THROWS_AS(gen_game(p), InvalidParameters);
    p.states = 3;
    p.max_degree = 0;
    CHECK_THROWS_AS(gen_game(p), InvalidParameters);
    p.max_degree = 2;
    p.priorities = 0;
    CHECK_THROWS_AS(gen_game(p), InvalidParameters);
    p.priorities = 2;
    p.max_weight = -1;
    CHECK_THROWS_AS(gen_game(p), InvalidParameters);
}
