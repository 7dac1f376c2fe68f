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

#ifndef MPPG_GAME_HPP
#define MPPG_GAME_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mppg/state_set.hpp"

namespace mppg {

using StateId = std::uint32_t;
using Priority = std::uint32_t;
using Weight = std::int64_t;

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

enum class Owner : std::uint8_t { P1, P2 };

inline Owner opponent(Owner o) { return o == Owner::P1 ? Owner::P2 : Owner::P1; }

enum class GameKind : std::uint8_t { MeanPayoffParity, MeanPenaltyParity };

/// Base class of every error the library reports.
struct GameError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct ParseError : GameError
{
    ParseError(std::size_t line, const std::string& what)
        : GameError("line " + std::to_string(line) + ": " + what), line(line) { }
    std::size_t line;
};

struct InvalidGame : GameError { using GameError::GameError; };
struct NotASubarena : GameError { using GameError::GameError; };
struct StrategyDomainMismatch : GameError { using GameError::GameError; };

struct Edge
{
    StateId dst;
    Weight weight;
};

/**
 * Weighted two-player game graph with priorities.
 *
 * The same structure serves as a mean-payoff parity game and as a
 * mean-penalty parity game; `kind()` tells which. States are numbered
 * 0..n-1 in declaration order and successor lists keep declaration order,
 * which every algorithm in the library uses for tie-breaking.
 *
 * A Game is immutable once built. Construct it through GameBuilder, which
 * enforces that every state has a successor, that there are no parallel
 * edges and that penalty games carry no negative weights.
 */
class Game
{
public:
    Game() = default;

    GameKind kind() const { return kind_; }
    std::size_t size() const { return owners_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::string& name(StateId q) const { return names_[q]; }
    Owner owner(StateId q) const { return owners_[q]; }
    Priority priority(StateId q) const { return priorities_[q]; }
    const std::vector<Edge>& successors(StateId q) const { return succ_[q]; }
    const std::vector<StateId>& predecessors(StateId q) const { return pred_[q]; }

    /// Throws InvalidGame if no state has this name.
    StateId id(const std::string& name) const;
    bool has_state(const std::string& name) const { return by_name_.count(name) != 0; }

    /// Weight of the edge src->dst. Throws InvalidGame if there is no such edge.
    Weight weight(StateId src, StateId dst) const;
    bool has_edge(StateId src, StateId dst) const;

    /// Index of dst in src's successor list, or -1.
    int successor_index(StateId src, StateId dst) const;

    StateSet all_states() const { return StateSet(size(), true); }
    StateSet states_with_priority(Priority p) const;
    Priority min_priority() const;
    Priority max_priority() const;

private:
    friend class GameBuilder;

    GameKind kind_ = GameKind::MeanPayoffParity;
    std::vector<std::string> names_;
    std::vector<Owner> owners_;
    std::vector<Priority> priorities_;
    std::vector<std::vector<Edge>> succ_;
    std::vector<std::vector<StateId>> pred_;
    std::unordered_map<std::string, StateId> by_name_;
    std::size_t edge_count_ = 0;
};

/**
 * Incremental construction of a Game.
 *
 * add_state / add_edge check names and endpoints eagerly; build() checks the
 * global invariants. All failures throw InvalidGame.
 */
class GameBuilder
{
public:
    explicit GameBuilder(GameKind kind = GameKind::MeanPayoffParity);

    StateId add_state(const std::string& name, Owner owner, Priority priority);
    void add_edge(StateId src, StateId dst, Weight weight);
    void add_edge(const std::string& src, const std::string& dst, Weight weight);

    std::size_t size() const { return game_.size(); }
    Game build() &&;

private:
    Game game_;
};

/// G restricted to a subarena, plus the map from new to original ids.
struct Subgame
{
    Game game;
    std::vector<StateId> origin;
};

/// Throws NotASubarena unless every state of s keeps a successor inside s.
Game restrict(const Game& g, const StateSet& s);
Subgame restrict_mapped(const Game& g, const StateSet& s);

/// Same graph with every priority replaced by 0 (the game (G,0)).
Game with_zero_priorities(const Game& g);

/// Copy of g where q's only successor is dst.
Game fix_successor(const Game& g, StateId q, StateId dst);

struct GameStats
{
    Weight max_abs_weight;   // W, at least 1
    std::size_t max_degree;  // k
    std::size_t priorities;  // d, number of distinct priorities
    std::size_t size;        // |V| + |E| * ceil(log2 W)
};

GameStats game_stats(const Game& g);

} // namespace mppg

#endif
