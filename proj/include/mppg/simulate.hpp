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

#ifndef MPPG_SIMULATE_HPP
#define MPPG_SIMULATE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mppg/game.hpp"
#include "mppg/mp_engine.hpp"
#include "mppg/penalty_solver.hpp"
#include "mppg/rational.hpp"

namespace mppg {

struct BadComponent : GameError { using GameError::GameError; };

/**
 * Possibly stateful strategy driven by the simulator.
 *
 * begin() is called once with the initial state, choose() whenever the
 * strategy's owner has to move, and observe() after every step of the play
 * (whoever moved).
 */
class Strategy
{
public:
    virtual ~Strategy() = default;
    virtual void begin(StateId) { }
    virtual StateId choose(StateId q) = 0;
    virtual void observe(StateId, StateId) { }
};

class MemorylessPlayer : public Strategy
{
public:
    explicit MemorylessPlayer(MemorylessStrategy s) : s_(std::move(s)) { }
    StateId choose(StateId q) override { return s_.choice[q]; }

private:
    MemorylessStrategy s_;
};

/// Length of the pumping phase in round i (counted from 1).
enum class PumpSchedule { Linear, Quadratic };

std::uint64_t pump_budget(PumpSchedule schedule, std::uint64_t round);

/**
 * Pl1 strategy played in rounds inside a component: reach q_min with an
 * attractor strategy, then follow the pumping strategy for as many steps as
 * the round's budget, then start the next round.
 */
class RoundsStrategy : public Strategy
{
public:
    enum class Phase { ToTarget, Pump };

    /// Without a pumping strategy, an optimal memoryless strategy of the
    /// mean-payoff game on the component is used. Throws BadComponent unless
    /// the component is a subarena and q_min has its least priority, which
    /// must be even.
    RoundsStrategy(const Game& g, const StateSet& component, StateId q_min,
                   std::optional<MemorylessStrategy> pump = std::nullopt,
                   PumpSchedule schedule = PumpSchedule::Linear);

    void begin(StateId start) override;
    StateId choose(StateId q) override;
    void observe(StateId from, StateId to) override;

    Phase phase() const { return phase_; }
    std::uint64_t round() const { return round_; }
    std::uint64_t completed_rounds() const { return round_ - 1; }
    const MemorylessStrategy& pump() const { return pump_; }

private:
    StateId q_min_;
    MemorylessStrategy to_target_;
    MemorylessStrategy pump_;
    PumpSchedule schedule_;
    Phase phase_ = Phase::ToTarget;
    std::uint64_t round_ = 1;
    std::uint64_t pumped_ = 0;
};

struct PlayTrace
{
    std::vector<StateId> states;               // horizon + 1 entries
    std::vector<std::int64_t> sums;            // sums[i]: weight of the first i steps
    std::vector<Rat> means;                    // means[i]: sums[i+1] / (i+1)
    std::vector<Priority> window_min_priority; // least priority among the last |V| states
};

/// The unique play of two strategies from `start`, cut after `horizon` steps.
PlayTrace simulate(const Game& g, Strategy& p1, Strategy& p2, std::size_t horizon, StateId start);

/// Multi-strategy with memory: the set of successors left open at q.
class MultiPlayer
{
public:
    virtual ~MultiPlayer() = default;
    virtual void begin(StateId) { }
    virtual std::vector<StateId> allow(StateId q) = 0;
    virtual void observe(StateId, StateId) { }
};

/// Picks a successor among those offered (all of qE at Pl2 states).
class Resolver
{
public:
    virtual ~Resolver() = default;
    virtual StateId pick(StateId q, const std::vector<StateId>& offered) = 0;
};

/// Resolver that stays as far from `target` as possible: it prefers the
/// offered successor of largest attractor rank (outside the attractor first).
class AvoidingResolver : public Resolver
{
public:
    AvoidingResolver(const Game& g, StateId target);
    StateId pick(StateId q, const std::vector<StateId>& offered) override;

private:
    std::vector<int> rank_;
};

/**
 * Penalty analogue of RoundsStrategy: leave everything open for a growing
 * number of steps after each visit to q_min, then block all edges except
 * the attractor move until q_min is reached again.
 */
class PenaltyRoundsStrategy : public MultiPlayer
{
public:
    PenaltyRoundsStrategy(const Game& g, StateId q_min, PumpSchedule schedule = PumpSchedule::Quadratic);

    void begin(StateId start) override;
    std::vector<StateId> allow(StateId q) override;
    void observe(StateId from, StateId to) override;

    std::uint64_t completed_rounds() const { return round_ - 1; }

private:
    const Game* g_;
    StateId q_min_;
    MemorylessStrategy to_target_;
    PumpSchedule schedule_;
    bool pumping_ = false;
    std::uint64_t round_ = 1;
    std::uint64_t pumped_ = 0;
};

struct PenaltyTrace
{
    std::vector<StateId> states;       // horizon + 1 entries
    std::vector<std::int64_t> charged; // charged[i]: penalty of the first i steps
    std::vector<Rat> means;            // means[i]: charged[i+1] / (i+1)
};

/// Play of a multi-strategy against a resolver; each step from a Pl1 state
/// is charged the weight of the successors left closed there.
PenaltyTrace simulate_penalty(const Game& g, MultiPlayer& p1, Resolver& resolver, std::size_t horizon,
                              StateId start);

} // namespace mppg

#endif
