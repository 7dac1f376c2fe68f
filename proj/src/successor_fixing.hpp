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

#ifndef MPPG_SUCCESSOR_FIXING_HPP
#define MPPG_SUCCESSOR_FIXING_HPP

#include <stdexcept>

#include "mppg/game.hpp"
#include "mppg/mp_engine.hpp"

namespace mppg {

// Commits one successor per state of `player`, in state order, keeping the
// first one (in declaration order) under which `solve` still returns `target`.
template <typename Solver>
MemorylessStrategy fix_successors(const Game& g, Owner player, const ValueFunction& target, Solver solve)
{
    Game cur = g;
    for (StateId q = 0; q < g.size(); ++q) {
        if (g.owner(q) != player || g.successors(q).size() < 2) continue;
        bool fixed = false;
        for (const auto& e : g.successors(q)) {
            Game cand = fix_successor(cur, q, e.dst);
            if (solve(cand) == target) {
                cur = std::move(cand);
                fixed = true;
                break;
            }
        }
        if (!fixed) throw std::logic_error("no successor preserves the game values");
    }
    MemorylessStrategy s{player, std::vector<StateId>(g.size(), kNoState)};
    for (StateId q = 0; q < g.size(); ++q) {
        if (g.owner(q) == player) s.choice[q] = cur.successors(q)[0].dst;
    }
    return s;
}

} // namespace mppg

#endif
