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

#include "mppg/penalty_solver.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "mppg/graph_algos.hpp"
#include "mppg/mp_engine.hpp"
#include "mppg/mpp_solver.hpp"

namespace mppg {

namespace {

// A penalty game together with a blocking cost every Pl1 state pays on each
// visit regardless of its choice. Restricting to a subarena moves the weight
// of Pl1 edges that leave the subarena into that cost.
struct Arena
{
    Game game;
    std::vector<Weight> forced;
};

Arena restrict_arena(const Arena& a, const StateSet& s)
{
    Subgame sub = restrict_mapped(a.game, s);
    Arena out{std::move(sub.game), std::vector<Weight>(sub.origin.size(), 0)};
    for (std::size_t i = 0; i < sub.origin.size(); ++i) {
        StateId q = sub.origin[i];
        out.forced[i] = a.forced[q];
        if (a.game.owner(q) != Owner::P1) continue;
        for (const auto& e : a.game.successors(q)) {
            if (!s.contains(e.dst)) out.forced[i] += e.weight;
        }
    }
    return out;
}

struct Ordered
{
    std::vector<StateId> dst;        // successors by ascending potential
    std::vector<Weight> block_after; // weight of the successors after position i
};

Ordered order_successors(const Game& g, StateId q, const std::vector<std::int64_t>& pot)
{
    const auto& succ = g.successors(q);
    std::vector<std::size_t> idx(succ.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return pot[succ[a].dst] < pot[succ[b].dst]; });
    Ordered o;
    o.dst.resize(idx.size());
    o.block_after.assign(idx.size(), 0);
    for (std::size_t i = 0; i < idx.size(); ++i) o.dst[i] = succ[idx[i]].dst;
    for (std::size_t i = idx.size() - 1; i > 0; --i) o.block_after[i - 1] = o.block_after[i] + succ[idx[i]].weight;
    return o;
}

ValueFunction ssolve_arena(const Arena& a)
{
    const Game& g = a.game;
    const std::size_t n = g.size();
    if (n == 0) return {};

    Weight w_tot = 1;
    for (StateId q = 0; q < n; ++q) {
        if (g.owner(q) != Owner::P1) continue;
        Weight total = a.forced[q];
        for (const auto& e : g.successors(q)) total += e.weight;
        w_tot = std::max(w_tot, total);
    }
    const auto nn = static_cast<std::uint64_t>(n);
    const std::uint64_t t_max = 32 * nn * nn * nn * static_cast<std::uint64_t>(w_tot) + 1;
    const auto max_den = static_cast<std::int64_t>(2 * n);
    const std::int64_t radius_num = 2 * static_cast<std::int64_t>(n) * w_tot;

    std::vector<std::int64_t> prev(n, 0), cur(n, 0);
    ValueFunction lower(n, Value::neg_inf()), upper(n, Value::pos_inf());
    std::uint64_t next_check = n;

    for (std::uint64_t t = 1; t <= t_max; ++t) {
        const bool check = t == t_max || t == next_check;
        Digraph allow_graph(n), order_graph(n);
        for (StateId q = 0; q < n; ++q) {
            const auto& succ = g.successors(q);
            if (g.owner(q) == Owner::P2) {
                StateId arg = succ[0].dst;
                for (const auto& e : succ) {
                    if (prev[e.dst] > prev[arg]) arg = e.dst;
                }
                cur[q] = prev[arg];
                if (check) {
                    for (const auto& e : succ) allow_graph.add_edge(q, e.dst, 0);
                    order_graph.add_edge(q, arg, 0);
                }
                continue;
            }
            Ordered o = order_successors(g, q, prev);
            std::size_t best_i = 0;
            std::int64_t best = o.block_after[0] + prev[o.dst[0]];
            for (std::size_t i = 1; i < o.dst.size(); ++i) {
                std::int64_t cand = o.block_after[i] + prev[o.dst[i]];
                if (cand <= best) {
                    best = cand;
                    best_i = i;
                }
            }
            cur[q] = a.forced[q] + best;
            if (check) {
                for (std::size_t i = 0; i <= best_i; ++i) {
                    allow_graph.add_edge(q, o.dst[i], a.forced[q] + o.block_after[best_i]);
                }
                for (std::size_t i = 0; i < o.dst.size(); ++i) {
                    order_graph.add_edge(q, o.dst[i], a.forced[q] + o.block_after[i]);
                }
            }
        }
        std::swap(prev, cur);
        if (!check) continue;
        next_check *= 2;

        auto hi = reachable_cycle_mean(allow_graph, true);
        auto lo = reachable_cycle_mean(order_graph, false);
        ValueFunction out(n);
        bool all = true;
        const Rat radius(radius_num, static_cast<std::int64_t>(t));
        for (StateId q = 0; q < n && all; ++q) {
            lower[q] = std::max(lower[q], lo[q]);
            upper[q] = std::min(upper[q], hi[q]);
            if (lower[q] == upper[q]) {
                out[q] = lower[q];
                continue;
            }
            Rat centre(prev[q], static_cast<std::int64_t>(t));
            Rat l = std::max(centre - radius, lower[q].rat());
            Rat h = std::min(centre + radius, upper[q].rat());
            auto r = unique_rational_in(l, h, max_den);
            if (r) {
                out[q] = *r;
            } else {
                all = false;
            }
        }
        if (all) return out;
    }
    throw std::logic_error("mean-penalty value iteration did not converge");
}

template <typename Fn>
void merge_back(ValueFunction& out, const StateSet& s, const ValueFunction& vals, Fn combine)
{
    auto ids = s.members();
    for (std::size_t i = 0; i < vals.size(); ++i) out[ids[i]] = combine(vals[i]);
}

ValueFunction ssolve_rec(const Arena& a)
{
    const Game& g = a.game;
    const std::size_t n = g.size();
    if (n == 0) return {};
    const Priority p = g.min_priority();
    ValueFunction out(n);

    if (p % 2 == 0) {
        ValueFunction mp = ssolve_arena(a);
        if (g.max_priority() == p) return mp;

        StateSet t = attractor(g, Owner::P1, g.states_with_priority(p)).set.complement();
        ValueFunction f(n, Value::neg_inf());
        Value x = *std::max_element(mp.begin(), mp.end());
        if (!t.empty()) {
            Arena sub = restrict_arena(a, t);
            auto fs = ssolve_rec(sub);
            merge_back(f, t, fs, [](const Value& v) { return v; });
            x = std::max(x, *std::max_element(fs.begin(), fs.end()));
        }
        StateSet target(n);
        for (StateId q = 0; q < n; ++q) {
            if (mp[q] == x || (t.contains(q) && f[q] == x)) target.insert(q);
        }
        StateSet attr = attractor(g, Owner::P2, target).set;
        for (auto q : attr.members()) out[q] = x;
        StateSet rest = attr.complement();
        if (!rest.empty()) {
            Arena sub = restrict_arena(a, rest);
            merge_back(out, rest, ssolve_rec(sub), [&](const Value& v) { return std::min(x, v); });
        }
        return out;
    }

    StateSet t = attractor(g, Owner::P2, g.states_with_priority(p)).set.complement();
    if (t.empty()) return ValueFunction(n, Value::pos_inf());
    Arena sub_t = restrict_arena(a, t);
    auto fs = ssolve_rec(sub_t);
    Value x = *std::min_element(fs.begin(), fs.end());
    auto t_ids = t.members();
    StateSet target(n);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i] == x) target.insert(t_ids[i]);
    }
    StateSet attr = attractor(g, Owner::P1, target).set;
    for (auto q : attr.members()) out[q] = x;
    StateSet rest = attr.complement();
    if (!rest.empty()) {
        Arena sub = restrict_arena(a, rest);
        merge_back(out, rest, ssolve_rec(sub), [&](const Value& v) { return std::max(x, v); });
    }
    return out;
}

Arena whole(const Game& g)
{
    return Arena{g, std::vector<Weight>(g.size(), 0)};
}

std::string bar_name(const Game& g, StateId q, const std::vector<StateId>& f)
{
    std::string s = "[" + g.name(q) + ":";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += g.name(f[i]);
    }
    return s + "]";
}

} // namespace

void check_multi_strategy(const Game& g, const MultiStrategy& sigma)
{
    if (sigma.allowed.size() != g.size()) throw StrategyDomainMismatch("multi-strategy size does not match the game");
    for (StateId q = 0; q < g.size(); ++q) {
        const auto& f = sigma.allowed[q];
        if (g.owner(q) == Owner::P2) {
            if (!f.empty()) throw StrategyDomainMismatch("multi-strategy restricts Pl2 state '" + g.name(q) + "'");
            continue;
        }
        if (f.empty()) throw StrategyDomainMismatch("multi-strategy allows nothing at '" + g.name(q) + "'");
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] >= g.size() || !g.has_edge(q, f[i])) {
                throw StrategyDomainMismatch("multi-strategy allows a non-edge at '" + g.name(q) + "'");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (f[j] == f[i]) throw StrategyDomainMismatch("repeated successor at '" + g.name(q) + "'");
            }
        }
    }
}

MultiStrategy permissive_multi_strategy(const Game& g)
{
    MultiStrategy s;
    s.allowed.resize(g.size());
    for (StateId q = 0; q < g.size(); ++q) {
        if (g.owner(q) != Owner::P1) continue;
        for (const auto& e : g.successors(q)) s.allowed[q].push_back(e.dst);
    }
    return s;
}

Weight blocked_weight(const Game& g, const MultiStrategy& sigma, StateId q)
{
    if (g.owner(q) != Owner::P1) return 0;
    const auto& f = sigma.allowed[q];
    Weight sum = 0;
    for (const auto& e : g.successors(q)) {
        if (std::find(f.begin(), f.end(), e.dst) == f.end()) sum += e.weight;
    }
    return sum;
}

Rat penalty_of_prefix(const Game& g, const MultiStrategy& sigma, const std::vector<StateId>& prefix)
{
    check_multi_strategy(g, sigma);
    Rat total(0);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        StateId q = prefix[i];
        if (q >= g.size()) throw InconsistentPrefix("unknown state in prefix");
        if (i + 1 < prefix.size()) {
            StateId next = prefix[i + 1];
            if (next >= g.size() || !g.has_edge(q, next)) {
                throw InconsistentPrefix("prefix step " + g.name(q) + " -> ? is not an edge");
            }
            if (g.owner(q) == Owner::P1) {
                const auto& f = sigma.allowed[q];
                if (std::find(f.begin(), f.end(), next) == f.end()) {
                    throw InconsistentPrefix("prefix takes blocked edge " + g.name(q) + " -> " + g.name(next));
                }
            }
        }
        total += Rat(blocked_weight(g, sigma, q));
    }
    return total;
}

ValueFunction eval_multi_strategy(const Game& g, const MultiStrategy& sigma)
{
    check_multi_strategy(g, sigma);
    // The adversary resolves every choice; it minimises the negated penalty.
    GameBuilder b(GameKind::MeanPayoffParity);
    for (StateId q = 0; q < g.size(); ++q) b.add_state(g.name(q), Owner::P2, g.priority(q));
    for (StateId q = 0; q < g.size(); ++q) {
        if (g.owner(q) == Owner::P1) {
            Weight cost = blocked_weight(g, sigma, q);
            for (auto dst : sigma.allowed[q]) b.add_edge(q, dst, -cost);
        } else {
            for (const auto& e : g.successors(q)) b.add_edge(q, e.dst, 0);
        }
    }
    return negate(one_player_value(std::move(b).build(), Owner::P2));
}

ExpReduction reduce_exponential(const Game& g, std::size_t max_degree)
{
    const Priority top = g.size() ? g.max_priority() : 0;
    ExpReduction red;
    red.base_states = g.size();
    GameBuilder b(GameKind::MeanPayoffParity);
    for (StateId q = 0; q < g.size(); ++q) {
        if (g.successors(q).size() > max_degree) {
            throw DegreeTooLarge("state '" + g.name(q) + "' has " + std::to_string(g.successors(q).size()) +
                                 " successors (limit " + std::to_string(max_degree) + ")");
        }
        b.add_state(g.name(q), g.owner(q), g.priority(q));
        red.base.push_back(q);
        red.allowed.emplace_back();
    }
    std::vector<std::vector<StateId>> bars_of(g.size());
    for (StateId q = 0; q < g.size(); ++q) {
        const auto& succ = g.successors(q);
        for (std::uint32_t mask = 1; mask < (1u << succ.size()); ++mask) {
            std::vector<StateId> f;
            for (std::size_t i = 0; i < succ.size(); ++i) {
                if (mask & (1u << i)) f.push_back(succ[i].dst);
            }
            bars_of[q].push_back(b.add_state(bar_name(g, q, f), Owner::P2, top));
            red.base.push_back(q);
            red.allowed.push_back(std::move(f));
        }
    }
    for (StateId q = 0; q < g.size(); ++q) {
        const auto& succ = g.successors(q);
        for (std::uint32_t mask = 1; mask < (1u << succ.size()); ++mask) {
            StateId bar = bars_of[q][mask - 1];
            if (g.owner(q) == Owner::P1) {
                Weight blocked = 0;
                for (std::size_t i = 0; i < succ.size(); ++i) {
                    if (!(mask & (1u << i))) blocked += succ[i].weight;
                }
                b.add_edge(q, bar, -2 * blocked);
            } else if (std::popcount(mask) == 1) {
                b.add_edge(q, bar, 0);
            }
            for (auto dst : red.allowed[bar]) b.add_edge(bar, dst, 0);
        }
    }
    red.game = std::move(b).build();
    return red;
}

Game reduce_polynomial(const Game& g)
{
    const std::size_t n = g.size();
    std::size_t k = 1;
    for (StateId q = 0; q < n; ++q) k = std::max(k, g.successors(q).size());
    const Priority top = n ? g.max_priority() : 0;
    const auto kk = static_cast<Weight>(k);

    enum Tag { Select, Allow, Block };
    struct Vertex
    {
        StateId base;
        Tag tag;
        std::size_t i, m;
    };
    std::vector<Vertex> gadget;
    std::unordered_map<std::string, StateId> id_of;
    GameBuilder b(GameKind::MeanPayoffParity);
    for (StateId q = 0; q < n; ++q) b.add_state(g.name(q), Owner::P1, g.priority(q));

    static constexpr const char* kTag[] = {"s", "a", "b"};
    std::deque<StateId> work;
    auto vertex = [&](StateId q, Tag tag, std::size_t i, std::size_t m) {
        std::string name = g.name(q) + "." + kTag[tag] + "." + std::to_string(i) + "." + std::to_string(m);
        auto it = id_of.find(name);
        if (it != id_of.end()) return it->second;
        Owner owner = tag == Select ? Owner::P1 : Owner::P2;
        StateId id = b.add_state(name, owner, top);
        id_of.emplace(name, id);
        gadget.push_back({q, tag, i, m});
        work.push_back(id);
        return id;
    };

    struct PendingEdge
    {
        StateId src, dst;
        Weight w;
    };
    std::vector<PendingEdge> edges;
    for (StateId q = 0; q < n; ++q) edges.push_back({q, vertex(q, Select, 1, 0), 0});

    while (!work.empty()) {
        StateId v = work.front();
        work.pop_front();
        const Vertex x = gadget[v - n];
        const auto& succ = g.successors(x.base);
        // Position i (1-based) of the padded successor list; padding repeats
        // the first successor and costs nothing to block.
        auto target = [&](std::size_t i) { return i <= succ.size() ? succ[i - 1].dst : succ[0].dst; };
        auto block_cost = [&](std::size_t i) { return i <= succ.size() ? succ[i - 1].weight : Weight{0}; };
        switch (x.tag) {
        case Select:
            if (x.i == k + 1) {
                edges.push_back({v, target(x.m == 0 ? 1 : x.m), 0});
                break;
            }
            edges.push_back({v, vertex(x.base, Allow, x.i, x.m), 0});
            if (g.owner(x.base) == Owner::P1 && !(x.i == k && x.m == 0)) {
                edges.push_back({v, vertex(x.base, Block, x.i, x.m), 0});
            }
            break;
        case Allow:
            edges.push_back({v, vertex(x.base, Select, x.i + 1, x.i), 0});
            if (x.m >= 1) edges.push_back({v, vertex(x.base, Select, x.i + 1, x.m), 0});
            break;
        case Block:
            edges.push_back({v, vertex(x.base, Select, x.i + 1, x.m), -2 * (kk + 1) * block_cost(x.i)});
            break;
        }
    }
    for (const auto& e : edges) b.add_edge(e.src, e.dst, e.w);
    return std::move(b).build();
}

ValueFunction ssolve_mp(const Game& g)
{
    return ssolve_arena(whole(g));
}

ValueFunction solve_penalty(const Game& g)
{
    return ssolve_rec(whole(g));
}

StateSet bar_sets(const Game& g, const ExpReduction& red, const StateSet& s, BarMode mode)
{
    std::size_t expected = g.size();
    for (StateId q = 0; q < g.size(); ++q) expected += (std::size_t{1} << g.successors(q).size()) - 1;
    bool same = red.base_states == g.size() && red.game.size() == expected && s.universe() == g.size();
    for (StateId q = 0; same && q < g.size(); ++q) same = red.game.name(q) == g.name(q);
    if (!same) throw MismatchedGames("the reduced game was not built from this game");

    StateSet out(red.game.size());
    for (auto q : s.members()) out.insert(q);
    for (StateId v = static_cast<StateId>(g.size()); v < red.game.size(); ++v) {
        const auto& f = red.allowed[v];
        bool hit = mode == BarMode::Rebar
                       ? std::all_of(f.begin(), f.end(), [&](StateId d) { return s.contains(d); })
                       : std::any_of(f.begin(), f.end(), [&](StateId d) { return s.contains(d); });
        if (hit) out.insert(v);
    }
    return out;
}

} // namespace mppg
