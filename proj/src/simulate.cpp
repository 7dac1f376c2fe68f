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

#include "mppg/simulate.hpp"

#include <algorithm>
#include <limits>

#include "mppg/graph_algos.hpp"

namespace mppg {

namespace {

MemorylessStrategy lift(const Subgame& sub, const MemorylessStrategy& local, std::size_t universe)
{
    MemorylessStrategy out{local.owner, std::vector<StateId>(universe, kNoState)};
    for (std::size_t i = 0; i < sub.origin.size(); ++i) {
        if (local.choice[i] != kNoState) out.choice[sub.origin[i]] = sub.origin[local.choice[i]];
    }
    return out;
}

MemorylessStrategy attractor_strategy(const Game& g, Owner player, const StateSet& target)
{
    return MemorylessStrategy{player, attractor(g, player, target).strategy};
}

} // namespace

std::uint64_t pump_budget(PumpSchedule schedule, std::uint64_t round)
{
    return schedule == PumpSchedule::Linear ? round : round * round;
}

RoundsStrategy::RoundsStrategy(const Game& g, const StateSet& component, StateId q_min,
                               std::optional<MemorylessStrategy> pump, PumpSchedule schedule)
    : q_min_(q_min), schedule_(schedule)
{
    if (component.universe() != g.size() || component.empty()) throw BadComponent("component is empty");
    if (!is_subarena(g, component)) throw BadComponent("component is not a subarena");
    if (q_min >= g.size() || !component.contains(q_min)) throw BadComponent("q_min lies outside the component");
    for (auto q : component.members()) {
        if (g.priority(q) < g.priority(q_min)) throw BadComponent("q_min does not have the least priority");
    }
    if (g.priority(q_min) % 2 != 0) throw BadComponent("least priority of the component is odd");

    Subgame sub = restrict_mapped(g, component);
    StateSet local_target(sub.origin.size());
    for (std::size_t i = 0; i < sub.origin.size(); ++i) {
        if (sub.origin[i] == q_min) local_target.insert(static_cast<StateId>(i));
    }
    to_target_ = lift(sub, attractor_strategy(sub.game, Owner::P1, local_target), g.size());
    if (pump) {
        if (pump->owner != Owner::P1 || pump->choice.size() != g.size()) {
            throw StrategyDomainMismatch("pumping strategy must be a Pl1 strategy over the game");
        }
        pump_ = *pump;
    } else {
        pump_ = lift(sub, extract_optimal_memoryless_mp(sub.game).p1, g.size());
    }
}

void RoundsStrategy::begin(StateId start)
{
    round_ = 1;
    pumped_ = 0;
    phase_ = start == q_min_ ? Phase::Pump : Phase::ToTarget;
}

StateId RoundsStrategy::choose(StateId q)
{
    if (phase_ == Phase::ToTarget && to_target_.choice[q] != kNoState) return to_target_.choice[q];
    return pump_.choice[q];
}

void RoundsStrategy::observe(StateId, StateId to)
{
    if (phase_ == Phase::Pump && ++pumped_ >= pump_budget(schedule_, round_)) {
        phase_ = Phase::ToTarget;
        ++round_;
    }
    if (phase_ == Phase::ToTarget && to == q_min_) {
        phase_ = Phase::Pump;
        pumped_ = 0;
    }
}

PlayTrace simulate(const Game& g, Strategy& p1, Strategy& p2, std::size_t horizon, StateId start)
{
    PlayTrace t;
    t.states.push_back(start);
    t.sums.push_back(0);
    p1.begin(start);
    p2.begin(start);
    StateId q = start;
    for (std::size_t i = 0; i < horizon; ++i) {
        StateId next = (g.owner(q) == Owner::P1 ? p1 : p2).choose(q);
        t.sums.push_back(t.sums.back() + g.weight(q, next));
        t.means.emplace_back(t.sums.back(), static_cast<std::int64_t>(i + 1));
        p1.observe(q, next);
        p2.observe(q, next);
        t.states.push_back(next);
        q = next;
    }
    const std::size_t window = std::max<std::size_t>(1, g.size());
    for (std::size_t i = 0; i < t.states.size(); ++i) {
        std::size_t from = i + 1 >= window ? i + 1 - window : 0;
        Priority m = g.priority(t.states[from]);
        for (std::size_t j = from; j <= i; ++j) m = std::min(m, g.priority(t.states[j]));
        t.window_min_priority.push_back(m);
    }
    return t;
}

AvoidingResolver::AvoidingResolver(const Game& g, StateId target)
    : rank_(attractor(g, Owner::P1, StateSet(g.size(), {target})).rank)
{
}

StateId AvoidingResolver::pick(StateId, const std::vector<StateId>& offered)
{
    auto distance = [&](StateId q) {
        return rank_[q] < 0 ? std::numeric_limits<int>::max() : rank_[q];
    };
    StateId best = offered.front();
    for (auto q : offered) {
        if (distance(q) > distance(best)) best = q;
    }
    return best;
}

PenaltyRoundsStrategy::PenaltyRoundsStrategy(const Game& g, StateId q_min, PumpSchedule schedule)
    : g_(&g), q_min_(q_min), schedule_(schedule)
{
    if (q_min >= g.size()) throw BadComponent("q_min out of range");
    to_target_ = attractor_strategy(g, Owner::P1, StateSet(g.size(), {q_min}));
}

void PenaltyRoundsStrategy::begin(StateId start)
{
    round_ = 1;
    pumped_ = 0;
    pumping_ = start == q_min_;
}

std::vector<StateId> PenaltyRoundsStrategy::allow(StateId q)
{
    if (!pumping_ && to_target_.choice[q] != kNoState) return {to_target_.choice[q]};
    std::vector<StateId> all;
    for (const auto& e : g_->successors(q)) all.push_back(e.dst);
    return all;
}

void PenaltyRoundsStrategy::observe(StateId, StateId to)
{
    if (pumping_ && ++pumped_ >= pump_budget(schedule_, round_)) {
        pumping_ = false;
        ++round_;
    }
    if (!pumping_ && to == q_min_) {
        pumping_ = true;
        pumped_ = 0;
    }
}

PenaltyTrace simulate_penalty(const Game& g, MultiPlayer& p1, Resolver& resolver, std::size_t horizon,
                              StateId start)
{
    PenaltyTrace t;
    t.states.push_back(start);
    t.charged.push_back(0);
    p1.begin(start);
    StateId q = start;
    for (std::size_t i = 0; i < horizon; ++i) {
        std::vector<StateId> offered;
        std::int64_t cost = 0;
        if (g.owner(q) == Owner::P1) {
            offered = p1.allow(q);
            for (const auto& e : g.successors(q)) {
                if (std::find(offered.begin(), offered.end(), e.dst) == offered.end()) cost += e.weight;
            }
        } else {
            for (const auto& e : g.successors(q)) offered.push_back(e.dst);
        }
        StateId next = resolver.pick(q, offered);
        t.charged.push_back(t.charged.back() + cost);
        t.means.emplace_back(t.charged.back(), static_cast<std::int64_t>(i + 1));
        p1.observe(q, next);
        t.states.push_back(next);
        q = next;
    }
    return t;
}

} // namespace mppg
