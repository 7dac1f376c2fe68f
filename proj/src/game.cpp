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

#include "mppg/game.hpp"

#include <algorithm>
#include <set>

namespace mppg {

StateSet::StateSet(std::size_t universe, std::initializer_list<std::uint32_t> members)
    : StateSet(universe)
{
    for (auto q : members) insert(q);
}

std::vector<std::uint32_t> StateSet::members() const
{
    std::vector<std::uint32_t> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) out.push_back(static_cast<std::uint32_t>(i));
    }
    return out;
}

StateSet StateSet::complement() const
{
    StateSet out(universe());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (!bits_[i]) out.insert(static_cast<std::uint32_t>(i));
    }
    return out;
}

StateSet StateSet::operator|(const StateSet& o) const
{
    StateSet out = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (o.bits_[i]) out.insert(static_cast<std::uint32_t>(i));
    }
    return out;
}

StateSet StateSet::operator&(const StateSet& o) const
{
    StateSet out(universe());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && o.bits_[i]) out.insert(static_cast<std::uint32_t>(i));
    }
    return out;
}

StateSet StateSet::operator-(const StateSet& o) const
{
    StateSet out(universe());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && !o.bits_[i]) out.insert(static_cast<std::uint32_t>(i));
    }
    return out;
}

bool StateSet::subset_of(const StateSet& o) const
{
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && !o.bits_[i]) return false;
    }
    return true;
}

StateId Game::id(const std::string& name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw InvalidGame("unknown state '" + name + "'");
    return it->second;
}

int Game::successor_index(StateId src, StateId dst) const
{
    const auto& es = succ_[src];
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (es[i].dst == dst) return static_cast<int>(i);
    }
    return -1;
}

bool Game::has_edge(StateId src, StateId dst) const
{
    return successor_index(src, dst) >= 0;
}

Weight Game::weight(StateId src, StateId dst) const
{
    int i = successor_index(src, dst);
    if (i < 0) throw InvalidGame("no edge " + names_[src] + " -> " + names_[dst]);
    return succ_[src][static_cast<std::size_t>(i)].weight;
}

StateSet Game::states_with_priority(Priority p) const
{
    StateSet out(size());
    for (StateId q = 0; q < size(); ++q) {
        if (priorities_[q] == p) out.insert(q);
    }
    return out;
}

Priority Game::min_priority() const
{
    return *std::min_element(priorities_.begin(), priorities_.end());
}

Priority Game::max_priority() const
{
    return *std::max_element(priorities_.begin(), priorities_.end());
}

GameBuilder::GameBuilder(GameKind kind)
{
    game_.kind_ = kind;
}

StateId GameBuilder::add_state(const std::string& name, Owner owner, Priority priority)
{
    if (name.empty()) throw InvalidGame("empty state name");
    if (game_.by_name_.count(name)) throw InvalidGame("duplicate state '" + name + "'");
    auto id = static_cast<StateId>(game_.size());
    game_.names_.push_back(name);
    game_.owners_.push_back(owner);
    game_.priorities_.push_back(priority);
    game_.succ_.emplace_back();
    game_.pred_.emplace_back();
    game_.by_name_.emplace(name, id);
    return id;
}

void GameBuilder::add_edge(StateId src, StateId dst, Weight weight)
{
    if (src >= game_.size() || dst >= game_.size()) throw InvalidGame("edge endpoint out of range");
    if (game_.kind_ == GameKind::MeanPenaltyParity && weight < 0) {
        throw InvalidGame("negative weight on edge " + game_.names_[src] + " -> " + game_.names_[dst] +
                          " in a mean-penalty game");
    }
    if (game_.has_edge(src, dst)) {
        throw InvalidGame("duplicate edge " + game_.names_[src] + " -> " + game_.names_[dst]);
    }
    game_.succ_[src].push_back(Edge{dst, weight});
    game_.pred_[dst].push_back(src);
    ++game_.edge_count_;
}

void GameBuilder::add_edge(const std::string& src, const std::string& dst, Weight weight)
{
    auto s = game_.by_name_.find(src);
    if (s == game_.by_name_.end()) throw InvalidGame("edge from unknown state '" + src + "'");
    auto d = game_.by_name_.find(dst);
    if (d == game_.by_name_.end()) throw InvalidGame("edge to unknown state '" + dst + "'");
    add_edge(s->second, d->second, weight);
}

Game GameBuilder::build() &&
{
    for (StateId q = 0; q < game_.size(); ++q) {
        if (game_.succ_[q].empty()) {
            throw InvalidGame("state without successor: '" + game_.names_[q] + "'");
        }
    }
    return std::move(game_);
}

Subgame restrict_mapped(const Game& g, const StateSet& s)
{
    std::vector<StateId> to_new(g.size(), kNoState);
    Subgame out;
    GameBuilder b(g.kind());
    for (auto q : s.members()) {
        to_new[q] = b.add_state(g.name(q), g.owner(q), g.priority(q));
        out.origin.push_back(q);
    }
    for (auto q : out.origin) {
        bool any = false;
        for (const auto& e : g.successors(q)) {
            if (to_new[e.dst] == kNoState) continue;
            b.add_edge(to_new[q], to_new[e.dst], e.weight);
            any = true;
        }
        if (!any) throw NotASubarena("state '" + g.name(q) + "' has no successor inside the set");
    }
    out.game = std::move(b).build();
    return out;
}

Game restrict(const Game& g, const StateSet& s)
{
    return restrict_mapped(g, s).game;
}

Game with_zero_priorities(const Game& g)
{
    GameBuilder b(g.kind());
    for (StateId q = 0; q < g.size(); ++q) b.add_state(g.name(q), g.owner(q), 0);
    for (StateId q = 0; q < g.size(); ++q) {
        for (const auto& e : g.successors(q)) b.add_edge(q, e.dst, e.weight);
    }
    return std::move(b).build();
}

Game fix_successor(const Game& g, StateId q, StateId dst)
{
    if (!g.has_edge(q, dst)) throw InvalidGame("fix_successor: no such edge");
    GameBuilder b(g.kind());
    for (StateId s = 0; s < g.size(); ++s) b.add_state(g.name(s), g.owner(s), g.priority(s));
    for (StateId s = 0; s < g.size(); ++s) {
        for (const auto& e : g.successors(s)) {
            if (s == q && e.dst != dst) continue;
            b.add_edge(s, e.dst, e.weight);
        }
    }
    return std::move(b).build();
}

GameStats game_stats(const Game& g)
{
    GameStats st{1, 0, 0, 0};
    std::set<Priority> prios;
    for (StateId q = 0; q < g.size(); ++q) {
        prios.insert(g.priority(q));
        st.max_degree = std::max(st.max_degree, g.successors(q).size());
        for (const auto& e : g.successors(q)) {
            st.max_abs_weight = std::max(st.max_abs_weight, e.weight < 0 ? -e.weight : e.weight);
        }
    }
    st.priorities = prios.size();
    std::size_t log2w = 0;
    while ((Weight{1} << log2w) < st.max_abs_weight) ++log2w;
    st.size = g.size() + g.edge_count() * log2w;
    return st;
}

} // namespace mppg
