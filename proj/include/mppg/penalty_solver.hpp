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

#ifndef MPPG_PENALTY_SOLVER_HPP
#define MPPG_PENALTY_SOLVER_HPP

#include <cstddef>
#include <vector>

#include "mppg/game.hpp"
#include "mppg/rational.hpp"

namespace mppg {

struct InconsistentPrefix : GameError { using GameError::GameError; };
struct DegreeTooLarge : GameError { using GameError::GameError; };
struct MismatchedGames : GameError { using GameError::GameError; };

/**
 * Memoryless multi-strategy for Pl1.
 *
 * `allowed[q]` lists the successors Pl1 leaves open at q (a nonempty subset
 * of qE, in declaration order); it is empty on Pl2 states. Every successor
 * of q outside `allowed[q]` is blocked and its weight is charged each time
 * the play visits q.
 */
struct MultiStrategy
{
    std::vector<std::vector<StateId>> allowed;

    friend bool operator==(const MultiStrategy&, const MultiStrategy&) = default;
};

/// Throws StrategyDomainMismatch unless sigma is a valid multi-strategy on g.
void check_multi_strategy(const Game& g, const MultiStrategy& sigma);

/// The multi-strategy that blocks nothing.
MultiStrategy permissive_multi_strategy(const Game& g);

/// Total weight sigma blocks at q.
Weight blocked_weight(const Game& g, const MultiStrategy& sigma, StateId q);

/**
 * Accumulated penalty along a finite path: every occurrence of a Pl1 state
 * (the last one included) adds the weight sigma blocks there.
 * Throws InconsistentPrefix if a step is not an edge or leaves sigma.
 */
Rat penalty_of_prefix(const Game& g, const MultiStrategy& sigma, const std::vector<StateId>& prefix);

/// Worst-case mean penalty of a memoryless multi-strategy (PosInf where Pl2
/// can force a parity violation).
ValueFunction eval_multi_strategy(const Game& g, const MultiStrategy& sigma);

/// Game with one bar state per (state, nonempty successor subset).
struct ExpReduction
{
    Game game;
    std::size_t base_states = 0;
    /// For every state of `game`: the underlying state of g.
    std::vector<StateId> base;
    /// For bar states: the allowed successor set F (ids in g); empty for base states.
    std::vector<std::vector<StateId>> allowed;
};

inline constexpr std::size_t kDefaultMaxBarDegree = 12;

/// Exponential reduction to a mean-payoff parity game; throws DegreeTooLarge
/// if some state has more than max_degree successors.
ExpReduction reduce_exponential(const Game& g, std::size_t max_degree = kDefaultMaxBarDegree);

/// Polynomial reduction to a mean-payoff parity game (gadget of select /
/// allow / block vertices per state). Original states keep their ids.
Game reduce_polynomial(const Game& g);

/// Mean-penalty values of g with the priorities ignored.
ValueFunction ssolve_mp(const Game& g);

/// Exact values of a mean-penalty parity game.
ValueFunction solve_penalty(const Game& g);

enum class BarMode { Rebar, Drebar };

/**
 * Lifts a set of states of g to the exponential reduction:
 * rebar S adds the bar states (q,F) with F inside S, drebar S those with F
 * meeting S. Throws MismatchedGames if red was not built from g.
 */
StateSet bar_sets(const Game& g, const ExpReduction& red, const StateSet& s, BarMode mode);

} // namespace mppg

#endif
