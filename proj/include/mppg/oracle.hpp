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

#ifndef MPPG_ORACLE_HPP
#define MPPG_ORACLE_HPP

#include <cstdint>

#include "mppg/game.hpp"
#include "mppg/graph_algos.hpp"
#include "mppg/mp_engine.hpp"
#include "mppg/rational.hpp"

namespace mppg {

struct SpaceTooLarge : GameError { using GameError::GameError; };
struct SccTooLarge : GameError { using GameError::GameError; };

/// 10^6, or the value of GAMESOLVE_MAX_ENUM when that is set to a number.
std::uint64_t default_enumeration_bound();

/**
 * All memoryless strategies of one player, indexed 0..size()-1.
 *
 * Index i is read as a mixed-radix number whose least significant digit
 * belongs to the owner's lowest-numbered state; each digit selects a
 * successor in declaration order.
 */
class StrategySpace
{
public:
    StrategySpace(const Game& g, Owner owner);

    /// Product of the owner's out-degrees, saturated at UINT64_MAX.
    std::uint64_t size() const { return size_; }
    MemorylessStrategy at(std::uint64_t index) const;

private:
    const Game* game_;
    Owner owner_;
    std::vector<StateId> states_;
    std::uint64_t size_ = 1;
};

struct OracleOptions
{
    std::uint64_t max_strategies = default_enumeration_bound();
    unsigned threads = 1;
};

/// Pointwise minimum over all Pl2 memoryless strategies of their value.
ValueFunction oracle_mpp_value(const Game& g, const OracleOptions& opts = {});

/// Same with the parity condition ignored.
ValueFunction oracle_mp_value(const Game& g, const OracleOptions& opts = {});

/// Negated oracle value of the exponential reduction, restricted to the
/// original states. Only the part reachable from them is enumerated.
ValueFunction oracle_penalty_value(const Game& g, const OracleOptions& opts = {});

/// Largest mean over the simple cycles of an SCC (at most 8 states).
Rat brute_cycle_max_mean(const Game& g, const Scc& scc);

/// Value of a fixed Pl2 strategy with Pl1 best-responding, from first
/// principles (simple cycles and transitive closure) for games of at most 8
/// states; larger games fall back to the graph algorithms.
ValueFunction oracle_eval_p2(const Game& g, const MemorylessStrategy& tau, bool parity);

} // namespace mppg

#endif
