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

#include "mppg/mp_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "mppg/graph_algos.hpp"
#include "successor_fixing.hpp"

namespace mppg {

namespace {

using i128 = __int128;

i128 floor_div(i128 a, i128 b)
{
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i128 ceil_div(i128 a, i128 b)
{
    return -floor_div(-a, b);
}

Digraph strategy_digraph(const Game& g, const MemorylessStrategy& s)
{
    Digraph d(g.size());
    for (StateId q = 0; q < g.size(); ++q) {
        for (const auto& e : g.successors(q)) {
            if (g.owner(q) == s.owner && e.dst != s.choice[q]) continue;
            d.add_edge(q, e.dst, e.weight);
        }
    }
    return d;
}

struct MpRun
{
    ValueFunction values;
    StrategyPair greedy;
};

MpRun run_mp(const Game& g, const MpOptions& opts)
{
    const std::size_t n = g.size();
    MpRun run;
    run.greedy.p1 = first_successor_strategy(g, Owner::P1);
    run.greedy.p2 = first_successor_strategy(g, Owner::P2);
    if (n == 0) return run;

    const Weight w_max = game_stats(g).max_abs_weight;
    const std::uint64_t k_max = mp_iteration_bound(g);
    const auto max_den = static_cast<std::int64_t>(n);
    const std::int64_t radius_num = 2 * static_cast<std::int64_t>(n) * w_max;

    std::vector<std::int64_t> prev(n, 0), cur(n, 0);
    ValueFunction lower(n, Value::neg_inf()), upper(n, Value::pos_inf());
    std::uint64_t next_check = n;

    for (std::uint64_t k = 1; k <= k_max; ++k) {
        const bool check = k == k_max || (opts.early_exit && k == next_check);
        for (StateId q = 0; q < n; ++q) {
            const bool maximize = g.owner(q) == Owner::P1;
            const auto& succ = g.successors(q);
            std::int64_t best = succ[0].weight + prev[succ[0].dst];
            StateId arg = succ[0].dst;
            for (std::size_t i = 1; i < succ.size(); ++i) {
                std::int64_t cand = succ[i].weight + prev[succ[i].dst];
                if (maximize ? cand > best : cand < best) {
                    best = cand;
                    arg = succ[i].dst;
                }
            }
            cur[q] = best;
            if (check) (maximize ? run.greedy.p1 : run.greedy.p2).choice[q] = arg;
        }
        std::swap(prev, cur);
        if (!check) continue;
        next_check *= 2;

        if (opts.early_exit) {
            auto lo = eval_p1_memoryless_mp(g, run.greedy.p1);
            auto hi = eval_p2_memoryless_mp(g, run.greedy.p2);
            for (StateId q = 0; q < n; ++q) {
                lower[q] = std::max(lower[q], lo[q]);
                upper[q] = std::min(upper[q], hi[q]);
            }
        }

        ValueFunction out(n);
        bool all = true;
        const Rat radius(radius_num, static_cast<std::int64_t>(k));
        for (StateId q = 0; q < n && all; ++q) {
            if (lower[q] == upper[q]) {
                out[q] = lower[q];
                continue;
            }
            Rat centre(prev[q], static_cast<std::int64_t>(k));
            Rat lo = centre - radius, hi = centre + radius;
            if (lower[q].finite()) lo = std::max(lo, lower[q].rat());
            if (upper[q].finite()) hi = std::min(hi, upper[q].rat());
            auto r = unique_rational_in(lo, hi, max_den);
            if (r) {
                out[q] = *r;
            } else {
                all = false;
            }
        }
        if (all) {
            run.values = std::move(out);
            return run;
        }
    }
    throw std::logic_error("mean-payoff value iteration did not converge");
}

} // namespace

void check_strategy(const Game& g, const MemorylessStrategy& s)
{
    if (s.choice.size() != g.size()) throw StrategyDomainMismatch("strategy size does not match the game");
    for (StateId q = 0; q < g.size(); ++q) {
        if (g.owner(q) != s.owner) {
            if (s.choice[q] != kNoState) {
                throw StrategyDomainMismatch("strategy chooses at opponent state '" + g.name(q) + "'");
            }
            continue;
        }
        if (s.choice[q] == kNoState || s.choice[q] >= g.size() || !g.has_edge(q, s.choice[q])) {
            throw StrategyDomainMismatch("strategy has no valid successor at '" + g.name(q) + "'");
        }
    }
}

MemorylessStrategy first_successor_strategy(const Game& g, Owner owner)
{
    MemorylessStrategy s{owner, std::vector<StateId>(g.size(), kNoState)};
    for (StateId q = 0; q < g.size(); ++q) {
        if (g.owner(q) == owner) s.choice[q] = g.successors(q)[0].dst;
    }
    return s;
}

IterationTrace mp_potentials(const Game& g, std::uint64_t k)
{
    IterationTrace t{0, std::vector<std::int64_t>(g.size(), 0)};
    std::vector<std::int64_t> next(g.size());
    for (; t.k < k; ++t.k) {
        for (StateId q = 0; q < g.size(); ++q) {
            const bool maximize = g.owner(q) == Owner::P1;
            const auto& succ = g.successors(q);
            std::int64_t best = succ[0].weight + t.v[succ[0].dst];
            for (const auto& e : succ) {
                std::int64_t cand = e.weight + t.v[e.dst];
                best = maximize ? std::max(best, cand) : std::min(best, cand);
            }
            next[q] = best;
        }
        std::swap(t.v, next);
    }
    return t;
}

std::uint64_t mp_iteration_bound(const Game& g)
{
    const auto n = static_cast<std::uint64_t>(g.size());
    return 4 * n * n * n * static_cast<std::uint64_t>(game_stats(g).max_abs_weight);
}

std::optional<Rat> unique_rational_in(const Rat& lo, const Rat& hi, std::int64_t max_den)
{
    if (hi < lo) return std::nullopt;
    std::optional<Rat> found;
    for (std::int64_t s = 1; s <= max_den; ++s) {
        i128 r_min = ceil_div(static_cast<i128>(lo.num()) * s, lo.den());
        i128 r_max = floor_div(static_cast<i128>(hi.num()) * s, hi.den());
        if (r_min > r_max) continue;
        if (r_max > r_min) return std::nullopt;
        Rat cand(static_cast<std::int64_t>(r_min), s);
        if (found && *found != cand) return std::nullopt;
        found = cand;
    }
    return found;
}

ValueFunction solve_mp(const Game& g, const MpOptions& opts)
{
    return run_mp(g, opts).values;
}

ValueFunction eval_p1_memoryless_mp(const Game& g, const MemorylessStrategy& sigma)
{
    if (sigma.owner != Owner::P1) throw StrategyDomainMismatch("expected a Pl1 strategy");
    check_strategy(g, sigma);
    return reachable_cycle_mean(strategy_digraph(g, sigma), false);
}

ValueFunction eval_p2_memoryless_mp(const Game& g, const MemorylessStrategy& tau)
{
    if (tau.owner != Owner::P2) throw StrategyDomainMismatch("expected a Pl2 strategy");
    check_strategy(g, tau);
    return reachable_cycle_mean(strategy_digraph(g, tau), true);
}

StrategyPair extract_optimal_memoryless_mp(const Game& g)
{
    auto run = run_mp(g, {});
    auto solve = [](const Game& h) { return solve_mp(h); };
    StrategyPair out;
    out.p1 = eval_p1_memoryless_mp(g, run.greedy.p1) == run.values
                 ? run.greedy.p1
                 : fix_successors(g, Owner::P1, run.values, solve);
    out.p2 = eval_p2_memoryless_mp(g, run.greedy.p2) == run.values
                 ? run.greedy.p2
                 : fix_successors(g, Owner::P2, run.values, solve);
    return out;
}

Game apply_strategy(const Game& g, const MemorylessStrategy& s)
{
    check_strategy(g, s);
    GameBuilder b(g.kind());
    for (StateId q = 0; q < g.size(); ++q) b.add_state(g.name(q), g.owner(q), g.priority(q));
    for (StateId q = 0; q < g.size(); ++q) {
        for (const auto& e : g.successors(q)) {
            if (g.owner(q) == s.owner && e.dst != s.choice[q]) continue;
            b.add_edge(q, e.dst, e.weight);
        }
    }
    return std::move(b).build();
}

} // namespace mppg
