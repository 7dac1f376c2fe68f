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

#include "mppg/graph_algos.hpp"

#include <algorithm>
#include <limits>

namespace mppg {

AttractorResult attractor(const Game& g, Owner player, const StateSet& target)
{
    const std::size_t n = g.size();
    AttractorResult res{StateSet(n), std::vector<StateId>(n, kNoState), std::vector<int>(n, -1)};
    std::vector<std::size_t> remaining(n);
    for (StateId q = 0; q < n; ++q) remaining[q] = g.successors(q).size();

    std::vector<StateId> frontier = target.members();
    for (auto q : frontier) {
        res.set.insert(q);
        res.rank[q] = 0;
    }
    for (int level = 0; !frontier.empty(); ++level) {
        std::vector<StateId> next;
        for (auto v : frontier) {
            for (auto u : g.predecessors(v)) {
                if (res.set.contains(u)) continue;
                if (g.owner(u) == player) {
                    res.strategy[u] = v;
                } else if (--remaining[u] != 0) {
                    continue;
                }
                res.set.insert(u);
                res.rank[u] = level + 1;
                next.push_back(u);
            }
        }
        frontier = std::move(next);
    }
    return res;
}

bool is_subarena(const Game& g, const StateSet& s)
{
    for (auto q : s.members()) {
        bool inside = std::any_of(g.successors(q).begin(), g.successors(q).end(),
                                  [&](const Edge& e) { return s.contains(e.dst); });
        if (!inside) return false;
    }
    return true;
}

bool is_trap(const Game& g, Owner trapped, const StateSet& s)
{
    if (!is_subarena(g, s)) return false;
    for (auto q : s.members()) {
        if (g.owner(q) != trapped) continue;
        for (const auto& e : g.successors(q)) {
            if (!s.contains(e.dst)) return false;
        }
    }
    return true;
}

Digraph to_digraph(const Game& g)
{
    Digraph d(g.size());
    for (StateId q = 0; q < g.size(); ++q) {
        for (const auto& e : g.successors(q)) d.add_edge(q, e.dst, e.weight);
    }
    return d;
}

std::vector<Scc> scc_decompose(const Digraph& d, const StateSet& within)
{
    // Iterative Tarjan.
    const std::size_t n = d.size();
    const bool all = within.universe() == 0;
    auto inside = [&](StateId q) { return all || within.contains(q); };

    constexpr int kUnvisited = -1;
    std::vector<int> index(n, kUnvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<StateId> stack;
    std::vector<std::pair<StateId, std::size_t>> call;
    std::vector<Scc> out;
    int counter = 0;

    for (StateId root = 0; root < n; ++root) {
        if (!inside(root) || index[root] != kUnvisited) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            const auto& adj = d.adj[v];
            if (pos < adj.size()) {
                StateId w = adj[pos++].first;
                if (!inside(w)) continue;
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            StateId done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] != index[done]) continue;
            Scc scc{{}, false};
            StateId w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                scc.members.push_back(w);
            } while (w != done);
            std::sort(scc.members.begin(), scc.members.end());
            if (scc.members.size() > 1) {
                scc.has_edge = true;
            } else {
                for (const auto& [dst, wt] : d.adj[done]) scc.has_edge |= dst == done;
            }
            out.push_back(std::move(scc));
        }
    }
    return out;
}

std::vector<Scc> scc_decompose(const Digraph& d)
{
    return scc_decompose(d, StateSet());
}

std::vector<Scc> scc_decompose(const Game& g, const StateSet& s)
{
    return scc_decompose(to_digraph(g), s);
}

namespace {

Rat karp(const Digraph& d, const Scc& scc, bool maximize)
{
    if (!scc.has_edge) throw NoCycle("SCC without edges has no cycle");
    const std::size_t n = scc.members.size();
    std::vector<int> local(d.size(), -1);
    for (std::size_t i = 0; i < n; ++i) local[scc.members[i]] = static_cast<int>(i);

    // Minimisation is maximisation of the negated weights.
    const Weight sign = maximize ? 1 : -1;
    constexpr Weight kNone = std::numeric_limits<Weight>::min();
    // table[j][v]: best weight of a walk with exactly j edges from the source to v.
    std::vector<std::vector<Weight>> table(n + 1, std::vector<Weight>(n, kNone));
    table[0][0] = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t u = 0; u < n; ++u) {
            if (table[j - 1][u] == kNone) continue;
            for (const auto& [dst, w] : d.adj[scc.members[u]]) {
                int v = local[dst];
                if (v < 0) continue;
                Weight cand = table[j - 1][u] + sign * w;
                if (table[j][v] == kNone || cand > table[j][v]) table[j][v] = cand;
            }
        }
    }

    bool have = false;
    Rat best;
    for (std::size_t v = 0; v < n; ++v) {
        if (table[n][v] == kNone) continue;
        bool have_inner = false;
        Rat inner;
        for (std::size_t j = 0; j < n; ++j) {
            if (table[j][v] == kNone) continue;
            Rat r(table[n][v] - table[j][v], static_cast<std::int64_t>(n - j));
            if (!have_inner || r < inner) {
                inner = r;
                have_inner = true;
            }
        }
        if (have_inner && (!have || inner > best)) {
            best = inner;
            have = true;
        }
    }
    if (!have) throw NoCycle("no cycle found in SCC");
    return maximize ? best : -best;
}

} // namespace

Rat max_mean_cycle(const Digraph& d, const Scc& scc)
{
    return karp(d, scc, true);
}

Rat min_mean_cycle(const Digraph& d, const Scc& scc)
{
    return karp(d, scc, false);
}

Rat max_mean_cycle(const Game& g, const Scc& scc)
{
    return karp(to_digraph(g), scc, true);
}

Rat min_mean_cycle(const Game& g, const Scc& scc)
{
    return karp(to_digraph(g), scc, false);
}

std::vector<Value> best_reachable(const Digraph& d, const std::vector<Scc>& sccs,
                                  const std::vector<Value>& scores, const Value& empty, bool maximize)
{
    std::vector<int> comp(d.size(), -1);
    for (std::size_t c = 0; c < sccs.size(); ++c) {
        for (auto q : sccs[c].members) comp[q] = static_cast<int>(c);
    }
    // Reverse topological order: successors' components are finished first.
    std::vector<Value> best(sccs.size(), empty);
    for (std::size_t c = 0; c < sccs.size(); ++c) {
        Value b = scores[c];
        for (auto q : sccs[c].members) {
            for (const auto& [dst, w] : d.adj[q]) {
                int cd = comp[dst];
                if (cd < 0 || cd == static_cast<int>(c)) continue;
                b = maximize ? std::max(b, best[cd]) : std::min(b, best[cd]);
            }
        }
        best[c] = b;
    }
    std::vector<Value> out(d.size(), empty);
    for (StateId q = 0; q < d.size(); ++q) {
        if (comp[q] >= 0) out[q] = best[comp[q]];
    }
    return out;
}

std::vector<Value> reachable_cycle_mean(const Digraph& d, bool maximize)
{
    auto sccs = scc_decompose(d);
    const Value empty = maximize ? Value::neg_inf() : Value::pos_inf();
    std::vector<Value> scores(sccs.size(), empty);
    for (std::size_t c = 0; c < sccs.size(); ++c) {
        if (!sccs[c].has_edge) continue;
        scores[c] = maximize ? max_mean_cycle(d, sccs[c]) : min_mean_cycle(d, sccs[c]);
    }
    return best_reachable(d, sccs, scores, empty, maximize);
}

StateSet can_reach(const Digraph& d, const StateSet& targets)
{
    std::vector<std::vector<StateId>> rev(d.size());
    for (StateId q = 0; q < d.size(); ++q) {
        for (const auto& [dst, w] : d.adj[q]) rev[dst].push_back(q);
    }
    StateSet seen = targets;
    std::vector<StateId> work = targets.members();
    while (!work.empty()) {
        StateId v = work.back();
        work.pop_back();
        for (auto u : rev[v]) {
            if (!seen.contains(u)) {
                seen.insert(u);
                work.push_back(u);
            }
        }
    }
    return seen;
}

} // namespace mppg
