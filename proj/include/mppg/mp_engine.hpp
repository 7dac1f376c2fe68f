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

#ifndef MPPG_MP_ENGINE_HPP
#define MPPG_MP_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mppg/game.hpp"
#include "mppg/rational.hpp"

namespace mppg {

/**
 * Memoryless strategy of one player.
 *
 * `choice` has one entry per state of the game; it holds the chosen
 * successor on the owner's states and kNoState everywhere else.
 */
struct MemorylessStrategy
{
    Owner owner = Owner::P1;
    std::vector<StateId> choice;

    friend bool operator==(const MemorylessStrategy&, const MemorylessStrategy&) = default;
};

/// Throws StrategyDomainMismatch unless s is a well-formed strategy of s.owner on g.
void check_strategy(const Game& g, const MemorylessStrategy& s);

/// The strategy choosing the first declared successor everywhere.
MemorylessStrategy first_successor_strategy(const Game& g, Owner owner);

/// Potentials after k rounds of value iteration (priorities ignored).
struct IterationTrace
{
    std::uint64_t k = 0;
    std::vector<std::int64_t> v;
};

IterationTrace mp_potentials(const Game& g, std::uint64_t k);

/// Iteration count that makes rational reconstruction unambiguous: 4 |V|^3 W.
std::uint64_t mp_iteration_bound(const Game& g);

/**
 * The unique rational with denominator at most max_den in [lo, hi], or
 * nullopt if there is none or more than one.
 */
std::optional<Rat> unique_rational_in(const Rat& lo, const Rat& hi, std::int64_t max_den);

struct MpOptions
{
    /// Stop as soon as every state is certified exactly. When false the
    /// engine always runs the full iteration bound.
    bool early_exit = true;
};

/// Exact values of g read as a plain mean-payoff game (priorities ignored).
ValueFunction solve_mp(const Game& g, const MpOptions& opts = {});

/// Guaranteed mean payoff of a Pl1 strategy against every Pl2 behaviour.
ValueFunction eval_p1_memoryless_mp(const Game& g, const MemorylessStrategy& sigma);

/// Mean payoff Pl2 concedes at most with a fixed strategy.
ValueFunction eval_p2_memoryless_mp(const Game& g, const MemorylessStrategy& tau);

struct StrategyPair
{
    MemorylessStrategy p1;
    MemorylessStrategy p2;
};

/// Optimal memoryless strategies for both players in the mean-payoff game.
StrategyPair extract_optimal_memoryless_mp(const Game& g);

/// Keeps only the edges a memoryless strategy allows on its owner's states.
Game apply_strategy(const Game& g, const MemorylessStrategy& s);

} // namespace mppg

#endif
