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

#include "mppg/certificates.hpp"

#include <algorithm>
#include <limits>

#include "mppg/graph_algos.hpp"
#include "mppg/mpp_solver.hpp"

namespace mppg {

namespace {

StateSet to_global(const Subgame& sub, const StateSet& local, std::size_t universe)
{
    StateSet out(universe);
    for (auto q : local.members()) out.insert(sub.origin[q]);
    return out;
}

StateSet to_local(const Subgame& sub, const StateSet& global)
{
    StateSet out(sub.origin.size());
    for (std::size_t i = 0; i < sub.origin.size(); ++i) {
        if (global.contains(sub.origin[i])) out.insert(static_cast<StateId>(i));
    }
    return out;
}

Priority least_priority(const Game& g, const StateSet& s)
{
    Priority p = std::numeric_limits<Priority>::max();
    for (auto q : s.members()) p = std::min(p, g.priority(q));
    return p;
}

// s minus the `player` attractor, inside g|s, towards `target` (global ids).
StateSet minus_attractor(const Game& g, const Subgame& sub, Owner player, const StateSet& target)
{
    StateSet attr = attractor(sub.game, player, to_local(sub, target)).set;
    return to_global(sub, attr.complement(), g.size());
}

Verdict reject(RejectReason r, std::string detail)
{
    return Verdict{false, r, std::move(detail)};
}

Verdict check(const Game& g, const StateSet& s, const NpNode& node, const Rat& x)
{
    if (s.empty()) {
        if (node.kind != NpNode::Kind::Leaf) return reject(RejectReason::Malformed, "non-leaf node for an empty set");
        return Verdict{true, RejectReason::None, {}};
    }
    if (node.kind == NpNode::Kind::Leaf) return reject(RejectReason::Malformed, "leaf node for a nonempty set");

    const Subgame sub = restrict_mapped(g, s);
    const Priority p = least_priority(g, s);
    const StateSet at_p = g.states_with_priority(p) & s;

    if (p % 2 == 0) {
        if (node.kind != NpNode::Kind::Even) {
            return reject(RejectReason::WrongParity, "least priority " + std::to_string(p) + " is even");
        }
        if (node.children.size() != 1) return reject(RejectReason::Malformed, "even node needs one child");
        if (node.strategy.owner != Owner::P1 || node.strategy.choice.size() != g.size()) {
            return reject(RejectReason::Malformed, "even node needs a Pl1 strategy over the whole game");
        }
        std::vector<StateId> local_id(g.size(), kNoState);
        for (std::size_t i = 0; i < sub.origin.size(); ++i) local_id[sub.origin[i]] = static_cast<StateId>(i);
        MemorylessStrategy local{Owner::P1, std::vector<StateId>(sub.origin.size(), kNoState)};
        for (std::size_t i = 0; i < sub.origin.size(); ++i) {
            StateId q = sub.origin[i];
            if (g.owner(q) != Owner::P1) continue;
            StateId c = node.strategy.choice[q];
            if (c == kNoState || c >= g.size() || !s.contains(c) || !g.has_edge(q, c)) {
                return reject(RejectReason::Malformed, "strategy leaves the set at '" + g.name(q) + "'");
            }
            local.choice[i] = local_id[c];
        }
        auto vals = eval_p1_memoryless_mp(sub.game, local);
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (vals[i] < Value(x)) {
                return reject(RejectReason::StrategyBelowThreshold,
                              "strategy guarantees " + vals[i].str() + " at '" + g.name(sub.origin[i]) + "'");
            }
        }
        return check(g, minus_attractor(g, sub, Owner::P1, at_p), node.children[0], x);
    }

    if (node.kind != NpNode::Kind::Odd) {
        return reject(RejectReason::WrongParity, "least priority " + std::to_string(p) + " is odd");
    }
    if (node.children.size() != 2) return reject(RejectReason::Malformed, "odd node needs two children");
    if (node.trap.universe() != g.size()) return reject(RejectReason::Malformed, "trap over the wrong state space");
    const StateSet outside = minus_attractor(g, sub, Owner::P2, at_p);
    const StateSet& t = node.trap;
    if (t.empty()) return reject(RejectReason::NotATrap, "guessed trap is empty");
    if (!t.subset_of(outside)) return reject(RejectReason::NotATrap, "guessed trap meets Pl2's attractor");
    const Subgame around = restrict_mapped(g, outside);
    if (!is_trap(around.game, Owner::P2, to_local(around, t))) {
        return reject(RejectReason::NotATrap, "guessed set is not a 2-trap");
    }
    Verdict inner = check(g, t, node.children[0], x);
    if (!inner) return inner;
    return check(g, minus_attractor(g, sub, Owner::P1, t), node.children[1], x);
}

StateSet at_least(const Subgame& sub, const ValueFunction& vals, const Rat& x, std::size_t universe)
{
    StateSet out(universe);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] >= Value(x)) out.insert(sub.origin[i]);
    }
    return out;
}

// Assumes every state of g|s has value at least x.
NpNode build(const Game& g, const StateSet& s, const Rat& x)
{
    NpNode node;
    if (s.empty()) return node;
    const Subgame sub = restrict_mapped(g, s);
    const Priority p = least_priority(g, s);
    const StateSet at_p = g.states_with_priority(p) & s;

    if (p % 2 == 0) {
        node.kind = NpNode::Kind::Even;
        MemorylessStrategy local = extract_optimal_memoryless_mp(sub.game).p1;
        node.strategy = MemorylessStrategy{Owner::P1, std::vector<StateId>(g.size(), kNoState)};
        for (std::size_t i = 0; i < sub.origin.size(); ++i) {
            if (local.choice[i] != kNoState) node.strategy.choice[sub.origin[i]] = sub.origin[local.choice[i]];
        }
        node.children.push_back(build(g, minus_attractor(g, sub, Owner::P1, at_p), x));
        return node;
    }

    node.kind = NpNode::Kind::Odd;
    const StateSet outside = minus_attractor(g, sub, Owner::P2, at_p);
    const Subgame around = restrict_mapped(g, outside);
    node.trap = at_least(around, solve_mpp(around.game), x, g.size());
    node.children.push_back(build(g, node.trap, x));
    node.children.push_back(build(g, minus_attractor(g, sub, Owner::P1, node.trap), x));
    return node;
}

} // namespace

std::size_t node_count(const NpNode& n)
{
    std::size_t c = 1;
    for (const auto& ch : n.children) c += node_count(ch);
    return c;
}

const char* reason_name(RejectReason r)
{
    switch (r) {
    case RejectReason::None: return "none";
    case RejectReason::NotATrap: return "not-a-trap";
    case RejectReason::StrategyBelowThreshold: return "strategy-below-threshold";
    case RejectReason::WrongParity: return "wrong-parity";
    case RejectReason::Malformed: return "malformed";
    case RejectReason::NotBelowThreshold: return "not-below-threshold";
    }
    return "unknown";
}

Verdict verify_np(const Game& g, StateId q0, const Rat& x, const NpWitness& w)
{
    if (w.threshold != x) return reject(RejectReason::Malformed, "witness is for threshold " + w.threshold.str());
    if (q0 >= g.size() || w.trap.universe() != g.size()) {
        return reject(RejectReason::Malformed, "witness does not match the game");
    }
    if (!w.trap.contains(q0)) return reject(RejectReason::Malformed, "top trap misses the initial state");
    if (!is_trap(g, Owner::P2, w.trap)) return reject(RejectReason::NotATrap, "top set is not a 2-trap");
    return check(g, w.trap, w.root, x);
}

NpWitness make_np_witness(const Game& g, const Rat& x)
{
    ValueFunction vals = solve_mpp(g);
    StateSet top(g.size());
    for (StateId q = 0; q < g.size(); ++q) {
        if (vals[q] >= Value(x)) top.insert(q);
    }
    if (top.empty()) throw NoWitness("no state has value at least " + x.str());
    return NpWitness{x, top, build(g, top, x)};
}

Verdict verify_conp(const Game& g, StateId q0, const Rat& x, const MemorylessStrategy& tau)
{
    if (q0 >= g.size()) throw StrategyDomainMismatch("initial state out of range");
    auto vals = eval_p2_memoryless_mpp(g, tau);
    if (vals[q0] < Value(x)) return Verdict{true, RejectReason::None, {}};
    return reject(RejectReason::NotBelowThreshold,
                  "strategy concedes " + vals[q0].str() + " at '" + g.name(q0) + "'");
}

} // namespace mppg
