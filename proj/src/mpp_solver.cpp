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

#include "mppg/mpp_solver.hpp"

#include <algorithm>
#include <set>

#include "mppg/graph_algos.hpp"
#include "successor_fixing.hpp"

namespace mppg {

namespace {

std::set<Priority> priority_set(const Game& g)
{
    std::set<Priority> out;
    for (StateId q = 0; q < g.size(); ++q) out.insert(g.priority(q));
    return out;
}

StateSet at_least(const Game& g, Priority p)
{
    StateSet s(g.size());
    for (StateId q = 0; q < g.size(); ++q) {
        if (g.priority(q) >= p) s.insert(q);
    }
    return s;
}

// Components of G|{col >= p} that hold a cycle through a state of priority p.
template <typename Visit>
void for_each_parity_component(const Game& g, const Digraph& d, bool even, Visit visit)
{
    for (Priority p : priority_set(g)) {
        if ((p % 2 == 0) != even) continue;
        for (const auto& scc : scc_decompose(d, at_least(g, p))) {
            if (!scc.has_edge) continue;
            bool has_p = std::any_of(scc.members.begin(), scc.members.end(),
                                     [&](StateId q) { return g.priority(q) == p; });
            if (has_p) visit(scc);
        }
    }
}

template <typename Fn>
void merge_back(ValueFunction& out, const Subgame& sub, const ValueFunction& vals, Fn combine)
{
    for (std::size_t i = 0; i < sub.origin.size(); ++i) out[sub.origin[i]] = combine(vals[i]);
}

ValueFunction solve_rec(const Game& g)
{
    const std::size_t n = g.size();
    if (n == 0) return {};
    const Priority p = g.min_priority();
    ValueFunction out(n);

    if (p % 2 == 0) {
        ValueFunction mp = solve_mp(g);
        if (g.max_priority() == p) return mp;

        StateSet rest_of_attr = attractor(g, Owner::P1, g.states_with_priority(p)).set.complement();
        ValueFunction f(n, Value::pos_inf());
        Value x = *std::min_element(mp.begin(), mp.end());
        if (!rest_of_attr.empty()) {
            auto sub = restrict_mapped(g, rest_of_attr);
            auto fs = solve_rec(sub.game);
            merge_back(f, sub, fs, [](const Value& v) { return v; });
            x = std::min(x, *std::min_element(fs.begin(), fs.end()));
        }
        StateSet target(n);
        for (StateId q = 0; q < n; ++q) {
            if (mp[q] == x || (rest_of_attr.contains(q) && f[q] == x)) target.insert(q);
        }
        StateSet a = attractor(g, Owner::P2, target).set;
        for (auto q : a.members()) out[q] = x;
        StateSet rest = a.complement();
        if (!rest.empty()) {
            auto sub = restrict_mapped(g, rest);
            merge_back(out, sub, solve_rec(sub.game), [&](const Value& v) { return std::max(x, v); });
        }
        return out;
    }

    StateSet t = attractor(g, Owner::P2, g.states_with_priority(p)).set.complement();
    if (t.empty()) return ValueFunction(n, Value::neg_inf());
    auto sub_t = restrict_mapped(g, t);
    auto fs = solve_rec(sub_t.game);
    Value x = *std::max_element(fs.begin(), fs.end());
    StateSet target(n);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i] == x) target.insert(sub_t.origin[i]);
    }
    StateSet a = attractor(g, Owner::P1, target).set;
    for (auto q : a.members()) out[q] = x;
    StateSet rest = a.complement();
    if (!rest.empty()) {
        auto sub = restrict_mapped(g, rest);
        merge_back(out, sub, solve_rec(sub.game), [&](const Value& v) { return std::min(x, v); });
    }
    return out;
}

} // namespace

ValueFunction one_player_value(const Game& g, Owner maximizer)
{
    for (StateId q = 0; q < g.size(); ++q) {
        if (g.owner(q) != maximizer && g.successors(q).size() > 1) {
            throw NotOnePlayer("state '" + g.name(q) + "' gives the other player a choice");
        }
    }
    const Digraph d = to_digraph(g);

    if (maximizer == Owner::P1) {
        std::vector<Value> best_at(g.size(), Value::neg_inf());
        for_each_parity_component(g, d, true, [&](const Scc& scc) {
            Value mu = max_mean_cycle(d, scc);
            for (auto q : scc.members) best_at[q] = std::max(best_at[q], mu);
        });
        auto sccs = scc_decompose(d);
        std::vector<Value> scores(sccs.size(), Value::neg_inf());
        for (std::size_t c = 0; c < sccs.size(); ++c) {
            for (auto q : sccs[c].members) scores[c] = std::max(scores[c], best_at[q]);
        }
        return best_reachable(d, sccs, scores, Value::neg_inf(), true);
    }

    StateSet losing_cycles(g.size());
    for_each_parity_component(g, d, false, [&](const Scc& scc) {
        for (auto q : scc.members) losing_cycles.insert(q);
    });
    StateSet doomed = can_reach(d, losing_cycles);
    ValueFunction out = reachable_cycle_mean(d, false);
    for (auto q : doomed.members()) out[q] = Value::neg_inf();
    return out;
}

ValueFunction solve_mpp(const Game& g)
{
    return solve_rec(g);
}

ValueFunction eval_p2_memoryless_mpp(const Game& g, const MemorylessStrategy& tau)
{
    if (tau.owner != Owner::P2) throw StrategyDomainMismatch("expected a Pl2 strategy");
    return one_player_value(apply_strategy(g, tau), Owner::P1);
}

ValueFunction eval_p1_memoryless_mpp(const Game& g, const MemorylessStrategy& sigma)
{
    if (sigma.owner != Owner::P1) throw StrategyDomainMismatch("expected a Pl1 strategy");
    return one_player_value(apply_strategy(g, sigma), Owner::P2);
}

MemorylessStrategy extract_p2_optimal(const Game& g)
{
    return fix_successors(g, Owner::P2, solve_mpp(g), [](const Game& h) { return solve_mpp(h); });
}

} // namespace mppg
