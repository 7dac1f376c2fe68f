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

#ifndef MPPG_MPP_SOLVER_HPP
#define MPPG_MPP_SOLVER_HPP

#include "mppg/game.hpp"
#include "mppg/mp_engine.hpp"
#include "mppg/rational.hpp"

namespace mppg {

struct NotOnePlayer : GameError { using GameError::GameError; };

/**
 * Values of a game in which only `maximizer` has real choices.
 *
 * With maximizer = P1 this is the best mean payoff of a parity-winning play
 * from each state (NegInf if there is none). With maximizer = P2 it is the
 * least payoff Pl2 can force by steering the play, NegInf where Pl2 can
 * reach a cycle whose least priority is odd.
 */
ValueFunction one_player_value(const Game& g, Owner maximizer);

/// Exact values of a mean-payoff parity game.
ValueFunction solve_mpp(const Game& g);

/// Value Pl2 concedes with a fixed memoryless strategy (Pl1 best-responds).
ValueFunction eval_p2_memoryless_mpp(const Game& g, const MemorylessStrategy& tau);

/// Value a fixed memoryless Pl1 strategy guarantees against every Pl2 behaviour.
ValueFunction eval_p1_memoryless_mpp(const Game& g, const MemorylessStrategy& sigma);

/// A memoryless Pl2 strategy attaining solve_mpp at every state.
MemorylessStrategy extract_p2_optimal(const Game& g);

} // namespace mppg

#endif
