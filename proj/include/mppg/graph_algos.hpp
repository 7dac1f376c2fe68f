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

#ifndef MPPG_GRAPH_ALGOS_HPP
#define MPPG_GRAPH_ALGOS_HPP

#include <utility>
#include <vector>

#include "mppg/game.hpp"
#include "mppg/rational.hpp"

namespace mppg {

struct NoCycle : GameError { using GameError::GameError; };

/**
 * Attractor of a target set for one player.
 *
 * `rank[q]` is the layer i at which q entered A^i (0 for the target, -1 for
 * states outside the attractor). `strategy[q]` is defined (not kNoState)
 * exactly on the attracting player's states in set \ target and always moves
 * to a state of strictly smaller rank.
 */
struct AttractorResult
{
    StateSet set;
    std::vector<StateId> strategy;
    std::vector<int> rank;
};

AttractorResult attractor(const Game& g, Owner player, const StateSet& target);

/// True iff s is a subarena that `trapped` cannot leave.
bool is_trap(const Game& g, Owner trapped, const StateSet& s);

/// True iff every state of s has a successor in s.
bool is_subarena(const Game& g, const StateSet& s);

struct Scc
{
    std::vector<StateId> members; // ascending
    bool has_edge;                // false for a single state without self-loop
};

/// Maximal SCCs of the subgraph induced by s, in reverse topological order
/// (an SCC is listed after every SCC it can reach).
std::vector<Scc> scc_decompose(const Game& g, const StateSet& s);

/// Exact maximum (resp. minimum) mean weight over the cycles of an SCC of g.
/// Throws NoCycle if the SCC has no edge.
Rat max_mean_cycle(const Game& g, const Scc& scc);
Rat min_mean_cycle(const Game& g, const Scc& scc);

/**
 * Plain weighted digraph used by the strategy evaluators, which work on
 * subgraphs of a game with re-weighted edges.
 */
struct Digraph
{
    explicit Digraph(std::size_t n = 0) : adj(n) { }
    std::size_t size() const { return adj.size(); }
    void add_edge(StateId src, StateId dst, Weight w) { adj[src].emplace_back(dst, w); }

    std::vector<std::vector<std::pair<StateId, Weight>>> adj;
};

Digraph to_digraph(const Game& g);

/// SCCs of the subgraph induced by `within` (all states if empty universe),
/// reverse topological order.
std::vector<Scc> scc_decompose(const Digraph& d, const StateSet& within);
std::vector<Scc> scc_decompose(const Digraph& d);

/// Karp's characterisation, evaluated in exact arithmetic over the edges of d
/// that stay inside the SCC.
Rat max_mean_cycle(const Digraph& d, const Scc& scc);
Rat min_mean_cycle(const Digraph& d, const Scc& scc);

/**
 * For each state q, the best score among the SCCs reachable from q.
 *
 * `scores[i]` belongs to `sccs[i]` (which must come from scc_decompose on the
 * same digraph); `std::nullopt`-like "no score" is encoded by `empty`. With
 * maximize=false the minimum is taken instead.
 */
std::vector<Value> best_reachable(const Digraph& d, const std::vector<Scc>& sccs,
                                  const std::vector<Value>& scores, const Value& empty, bool maximize);

/// Best (maximize) or worst mean of a cycle reachable from each state of d.
/// States that reach no cycle get NegInf (maximize) or PosInf.
std::vector<Value> reachable_cycle_mean(const Digraph& d, bool maximize);

/// States of d from which some state of `targets` is reachable (targets included).
StateSet can_reach(const Digraph& d, const StateSet& targets);

} // namespace mppg

#endif
