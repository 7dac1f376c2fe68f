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

#include "mppg/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <thread>

#include "mppg/mpp_solver.hpp"
#include "mppg/penalty_solver.hpp"

namespace mppg {

namespace {

constexpr std::size_t kSmall = 8;

using Adjacency = std::vector<std::vector<std::pair<StateId, Weight>>>;

struct Cycle
{
    std::uint32_t mask;
    StateId first;
    Weight sum;
    std::int64_t length;
};

// Every simple cycle, each reported once from its lowest state.
std::vector<Cycle> simple_cycles(const Adjacency& adj, std::uint32_t allowed)
{
    std::vector<Cycle> out;
    const auto n = static_cast<StateId>(adj.size());
    for (StateId s = 0; s < n; ++s) {
        if (!(allowed >> s & 1u)) continue;
        // Explicit DFS: (vertex, next edge index), plus the running path data.
        std::vector<std::pair<StateId, std::size_t>> stack{{s, 0}};
        std::vector<Weight> sums{0};
        std::uint32_t on_path = 1u << s;
        while (!stack.empty()) {
            auto& [v, pos] = stack.back();
            if (pos == adj[v].size()) {
                on_path &= ~(1u << v);
                stack.pop_back();
                sums.pop_back();
                continue;
            }
            auto [w, wt] = adj[v][pos++];
            if (!(allowed >> w & 1u) || w < s) continue;
            if (w == s) {
                out.push_back({on_path, s, sums.back() + wt, static_cast<std::int64_t>(stack.size())});
            } else if (!(on_path >> w & 1u)) {
                on_path |= 1u << w;
                sums.push_back(sums.back() + wt);
                stack.emplace_back(w, 0);
            }
        }
    }
    return out;
}

// reach[i] has bit j iff j is reachable from i (i itself included) using
// only states in `allowed`.
std::vector<std::uint32_t> closure(const Adjacency& adj, std::uint32_t allowed)
{
    const std::size_t n = adj.size();
    std::vector<std::uint32_t> reach(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(allowed >> i & 1u)) continue;
        reach[i] |= 1u << i;
        for (auto [j, w] : adj[i]) {
            if (allowed >> j & 1u) reach[i] |= 1u << j;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (reach[i] >> k & 1u) reach[i] |= reach[k];
        }
    }
    return reach;
}

Adjacency restricted_adjacency(const Game& g, const MemorylessStrategy& tau)
{
    Adjacency adj(g.size());
    for (StateId q = 0; q < g.size(); ++q) {
        for (const auto& e : g.successors(q)) {
            if (g.owner(q) == tau.owner && e.dst != tau.choice[q]) continue;
            adj[q].emplace_back(e.dst, e.weight);
        }
    }
    return adj;
}

ValueFunction small_eval(const Game& g, const MemorylessStrategy& tau, bool parity)
{
    const std::size_t n = g.size();
    const Adjacency adj = restricted_adjacency(g, tau);
    const std::uint32_t everything = n == 32 ? ~0u : (1u << n) - 1;
    const auto reach = closure(adj, everything);
    const auto cycles = simple_cycles(adj, everything);

    std::vector<Priority> evens;
    for (StateId q = 0; q < n; ++q) {
        if (g.priority(q) % 2 == 0) evens.push_back(g.priority(q));
    }
    std::sort(evens.begin(), evens.end());
    evens.erase(std::unique(evens.begin(), evens.end()), evens.end());

    // For each even p: states of priority >= p, their closure, and the
    // states of priority exactly p.
    struct Layer
    {
        std::uint32_t above;
        std::uint32_t at;
        std::vector<std::uint32_t> reach;
    };
    std::vector<Layer> layers;
    if (parity) {
        for (Priority p : evens) {
            Layer l{0, 0, {}};
            for (StateId q = 0; q < n; ++q) {
                if (g.priority(q) >= p) l.above |= 1u << q;
                if (g.priority(q) == p) l.at |= 1u << q;
            }
            l.reach = closure(adj, l.above);
            layers.push_back(std::move(l));
        }
    }

    ValueFunction out(n, Value::neg_inf());
    for (const auto& c : cycles) {
        bool good = !parity;
        for (const auto& l : layers) {
            if (good) break;
            if ((c.mask & l.above) != c.mask) continue;
            for (StateId r = 0; r < n && !good; ++r) {
                if (!(l.at >> r & 1u)) continue;
                good = (l.reach[r] >> c.first & 1u) && (l.reach[c.first] >> r & 1u);
            }
        }
        if (!good) continue;
        Value mean = Rat(c.sum, c.length);
        for (StateId q = 0; q < n; ++q) {
            if (reach[q] >> c.first & 1u) out[q] = std::max(out[q], mean);
        }
    }
    return out;
}

ValueFunction enumerate_min(const Game& g, bool parity, const OracleOptions& opts)
{
    StrategySpace space(g, Owner::P2);
    if (space.size() > opts.max_strategies) {
        throw SpaceTooLarge("Pl2 has " +
                            (space.size() == std::numeric_limits<std::uint64_t>::max()
                                 ? std::string("too many")
                                 : std::to_string(space.size())) +
                            " memoryless strategies (limit " + std::to_string(opts.max_strategies) + ")");
    }
    const std::uint64_t total = space.size();
    const unsigned workers = static_cast<unsigned>(std::max<std::uint64_t>(
        1, std::min<std::uint64_t>(std::max(1u, opts.threads), total)));

    std::vector<ValueFunction> partial(workers, ValueFunction(g.size(), Value::pos_inf()));
    auto run = [&](unsigned w) {
        for (std::uint64_t i = w; i < total; i += workers) {
            auto vals = oracle_eval_p2(g, space.at(i), parity);
            for (StateId q = 0; q < g.size(); ++q) partial[w][q] = std::min(partial[w][q], vals[q]);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    ValueFunction out = partial[0];
    for (unsigned w = 1; w < workers; ++w) {
        for (StateId q = 0; q < g.size(); ++q) out[q] = std::min(out[q], partial[w][q]);
    }
    return out;
}

} // namespace

std::uint64_t default_enumeration_bound()
{
    if (const char* env = std::getenv("GAMESOLVE_MAX_ENUM")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return 1000000;
}

StrategySpace::StrategySpace(const Game& g, Owner owner) : game_(&g), owner_(owner)
{
    for (StateId q = 0; q < g.size(); ++q) {
        if (g.owner(q) != owner) continue;
        states_.push_back(q);
        const std::uint64_t deg = g.successors(q).size();
        if (size_ > std::numeric_limits<std::uint64_t>::max() / deg) {
            size_ = std::numeric_limits<std::uint64_t>::max();
        } else if (size_ != std::numeric_limits<std::uint64_t>::max()) {
            size_ *= deg;
        }
    }
}

MemorylessStrategy StrategySpace::at(std::uint64_t index) const
{
    MemorylessStrategy s{owner_, std::vector<StateId>(game_->size(), kNoState)};
    for (auto q : states_) {
        const auto& succ = game_->successors(q);
        s.choice[q] = succ[index % succ.size()].dst;
        index /= succ.size();
    }
    return s;
}

ValueFunction oracle_eval_p2(const Game& g, const MemorylessStrategy& tau, bool parity)
{
    check_strategy(g, tau);
    if (g.size() <= kSmall) return small_eval(g, tau, parity);
    Game h = apply_strategy(g, tau);
    if (parity) return one_player_value(h, Owner::P1);
    return reachable_cycle_mean(to_digraph(h), true);
}

ValueFunction oracle_mpp_value(const Game& g, const OracleOptions& opts)
{
    return enumerate_min(g, true, opts);
}

ValueFunction oracle_mp_value(const Game& g, const OracleOptions& opts)
{
    return enumerate_min(g, false, opts);
}

ValueFunction oracle_penalty_value(const Game& g, const OracleOptions& opts)
{
    ExpReduction red = reduce_exponential(g);
    const Game& big = red.game;
    StateSet seen(big.size());
    std::vector<StateId> work;
    for (StateId q = 0; q < g.size(); ++q) {
        seen.insert(q);
        work.push_back(q);
    }
    while (!work.empty()) {
        StateId v = work.back();
        work.pop_back();
        for (const auto& e : big.successors(v)) {
            if (!seen.contains(e.dst)) {
                seen.insert(e.dst);
                work.push_back(e.dst);
            }
        }
    }
    Subgame sub = restrict_mapped(big, seen);
    ValueFunction vals = oracle_mpp_value(sub.game, opts);
    ValueFunction out(g.size());
    for (std::size_t i = 0; i < sub.origin.size(); ++i) {
        if (sub.origin[i] < g.size()) out[sub.origin[i]] = -vals[i];
    }
    return out;
}

Rat brute_cycle_max_mean(const Game& g, const Scc& scc)
{
    if (scc.members.size() > kSmall) throw SccTooLarge("SCC has more than 8 states");
    if (!scc.has_edge) throw NoCycle("SCC without edges has no cycle");
    // Relabel the SCC to 0..size-1.
    std::vector<int> local(g.size(), -1);
    for (std::size_t i = 0; i < scc.members.size(); ++i) local[scc.members[i]] = static_cast<int>(i);
    Adjacency adj(scc.members.size());
    for (std::size_t i = 0; i < scc.members.size(); ++i) {
        for (const auto& e : g.successors(scc.members[i])) {
            if (local[e.dst] >= 0) adj[i].emplace_back(static_cast<StateId>(local[e.dst]), e.weight);
        }
    }
    const std::uint32_t all = (1u << scc.members.size()) - 1;
    auto cycles = simple_cycles(adj, all);
    if (cycles.empty()) throw NoCycle("no cycle found in SCC");
    Rat best(cycles[0].sum, cycles[0].length);
    for (const auto& c : cycles) best = std::max(best, Rat(c.sum, c.length));
    return best;
}

} // namespace mppg
