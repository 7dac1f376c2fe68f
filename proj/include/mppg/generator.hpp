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

#ifndef MPPG_GENERATOR_HPP
#define MPPG_GENERATOR_HPP

#include <cstdint>

#include "mppg/game.hpp"

namespace mppg {

struct InvalidParameters : GameError { using GameError::GameError; };

struct GenParams
{
    std::size_t states = 6;
    std::size_t max_degree = 3;
    Weight max_weight = 4;
    Priority priorities = 3;
    Priority priority_offset = 0;
    GameKind kind = GameKind::MeanPayoffParity;
    std::uint64_t seed = 0;
};

/**
 * Seeded random game drawn from one std::mt19937_64 stream. First, for
 * every state: owner (P2 iff the draw is odd) and priority offset + draw % d.
 * Then, for every state: out-degree 1 + draw % min(k, n), and per edge a
 * target (partial Fisher-Yates shuffle of 0..n-1, so targets are distinct)
 * followed by its weight, draw % (2W+1) - W for mean-payoff games and
 * draw % (W+1) for mean-penalty games. States are named q0..q{n-1}.
 */
Game gen_game(const GenParams& params);

} // namespace mppg

#endif
