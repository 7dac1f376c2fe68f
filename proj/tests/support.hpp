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

#ifndef MPPG_TESTS_SUPPORT_HPP
#define MPPG_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mppg/game.hpp"
#include "mppg/game_io.hpp"
#include "mppg/generator.hpp"

namespace mppg::testing {

inline Game fixture(const std::string& name)
{
    return load_game(std::string(MPPG_FIXTURE_DIR) + "/" + name);
}

/// Mean-payoff parity game with n drawn from 1..max_states.
inline Game random_mpp(std::uint64_t seed, std::size_t max_states = 6, std::size_t degree = 3, Weight weight = 4,
                       Priority priorities = 3)
{
    GenParams p;
    p.seed = seed;
    p.states = 1 + seed % max_states;
    p.max_degree = degree;
    p.max_weight = weight;
    p.priorities = priorities;
    return gen_game(p);
}

inline Game random_penalty(std::uint64_t seed, std::size_t max_states = 5, std::size_t degree = 3,
                           Weight weight = 3, Priority priorities = 3)
{
    GenParams p;
    p.seed = seed;
    p.states = 1 + seed % max_states;
    p.max_degree = degree;
    p.max_weight = weight;
    p.priorities = priorities;
    p.kind = GameKind::MeanPenaltyParity;
    return gen_game(p);
}

/// Every state joins with probability 1/2.
inline StateSet random_set(std::mt19937_64& rng, std::size_t n)
{
    StateSet s(n);
    for (StateId q = 0; q < n; ++q) {
        if (rng() & 1) s.insert(q);
    }
    return s;
}

/// Same game with every weight mapped through f.
template <typename F>
Game map_weights(const Game& g, F f)
{
    GameBuilder b(g.kind());
    for (StateId q = 0; q < g.size(); ++q) b.add_state(g.name(q), g.owner(q), g.priority(q));
    for (StateId q = 0; q < g.size(); ++q) {
        for (const auto& e : g.successors(q)) b.add_edge(q, e.dst, f(e.weight));
    }
    return std::move(b).build();
}

/// Attractor by literal iteration of the one-step operator until nothing changes.
inline StateSet naive_attractor(const Game& g, Owner player, const StateSet& target)
{
    StateSet a = target;
    for (bool grew = true; grew;) {
        grew = false;
        const StateSet prev = a;
        for (StateId q = 0; q < g.size(); ++q) {
            if (prev.contains(q)) continue;
            bool any = false;
            bool all = true;
            for (const auto& e : g.successors(q)) {
                any = any || prev.contains(e.dst);
                all = all && prev.contains(e.dst);
            }
            if (g.owner(q) == player ? any : all) {
                a.insert(q);
                grew = true;
            }
        }
    }
    return a;
}

} // namespace mppg::testing

#endif
